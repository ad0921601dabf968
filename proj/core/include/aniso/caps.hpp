#pragma once

#include <stdexcept>
#include <string>

namespace aniso {

/// Raised when an exact-enumeration request exceeds the configured size
/// limits.  Callers that want graceful degradation catch this and fall back
/// or report; the CLI maps it to the validation exit code.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size limits for the exact modules.  Defaults keep the whole suite at desk
/// scale (seconds to a minute).  Each value can be overridden through the
/// documented environment variable, read once per process:
///
///   ANISOLAB_MAX_SPIN_VERTICES   spin-oracle configuration sum, default 24
///   ANISOLAB_MAX_CYCLE_DIM       cycle-space dimension (2^dim subgraphs), default 22
///   ANISOLAB_MAX_PATHS           consistent-path enumeration guard, default 2000000
struct Caps {
    int max_spin_vertices = 24;
    int max_cycle_dim = 22;
    long long max_paths = 2'000'000;
};

/// Process-wide caps with environment overrides applied.
const Caps& caps();

/// Helper that formats and throws a cap_error.
[[noreturn]] void throw_cap(const std::string& what, long long requested, long long limit);

} // namespace aniso
