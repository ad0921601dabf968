#include "aniso/caps.hpp"

#include <cstdlib>

namespace aniso {
namespace {

long long env_number(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) return fallback;
    return parsed;
}

Caps load_caps() {
    Caps c;
    c.max_spin_vertices = int(env_number("ANISOLAB_MAX_SPIN_VERTICES", c.max_spin_vertices));
    c.max_cycle_dim = int(env_number("ANISOLAB_MAX_CYCLE_DIM", c.max_cycle_dim));
    c.max_paths = env_number("ANISOLAB_MAX_PATHS", c.max_paths);
    return c;
}

} // namespace

const Caps& caps() {
    static const Caps c = load_caps();
    return c;
}

void throw_cap(const std::string& what, long long requested, long long limit) {
    throw cap_error(what + ": requested " + std::to_string(requested) +
                    " exceeds cap " + std::to_string(limit));
}

} // namespace aniso
