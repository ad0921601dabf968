/// anisolab — command-line front end for the verification laboratory.
///
/// Subcommands:
///   verify  run the cross-check suites (currents vs spins, backbone
///           expansion and grouping, path inequalities, susceptibility
///           chain) and write a machine-readable JSON report
///   curve   emit the sub-criticality bound curve J_d ↦ artanh(1/(2sχ_d))
///           as CSV with a manifest sidecar
///   chi     compute one susceptibility value by several methods and
///           enforce cross-method agreement
///   mc      Monte Carlo runs on periodic tori: single-algorithm runs,
///           algorithm/oracle comparison, and curve scans
///
/// Exit codes: 0 = all checks pass, 1 = a check failed, 2 = usage or
/// validation error (bad flags, estimator/dimension mismatch, caps).

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aniso/caps.hpp"
#include "aniso/lattice.hpp"
#include "aniso/numerics.hpp"
#include "aniso/montecarlo.hpp"
#include "aniso/spin_oracle.hpp"
#include "aniso/susceptibility.hpp"
#include "aniso/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

/// Fixed-width significand formatting shared by every emitted data file:
/// 12 significant digits, `inf` sentinel, no locale dependence.
std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << bytes;
}

/// Sidecar manifest: every emitted data file is referenced by exactly one
/// manifest (command line, parameters, seeds, version, timestamp, digest).
void write_manifest(const std::string& data_path, const std::string& data_bytes,
                    const std::string& command, const json& parameters,
                    const json& seeds) {
    char digest[32];
    std::snprintf(digest, sizeof(digest), "fnv1a64:%016" PRIx64, fnv1a64(data_bytes));
    json manifest;
    manifest["command"] = command;
    manifest["parameters"] = parameters;
    manifest["seeds"] = seeds;
    manifest["library_version"] = ANISOLAB_VERSION;
    manifest["timestamp"] = utc_timestamp();
    manifest["outputs"][data_path] = digest;
    write_file(data_path + ".manifest.json", manifest.dump(2) + "\n");
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// ---------------------------------------------------------------- verify --

struct VerifyOptions {
    std::string scope = "all";
    uint64_t seed = 20250817ull;
    int trials = 0;      // 0 = per-suite defaults
    int max_edges = 20;  // cap on random-instance edges
    std::string report = "verify_report.json";
};

int run_verify(const VerifyOptions& opt) {
    std::vector<aniso::SuiteResult> suites;
    const bool all = opt.scope == "all";
    if (all || opt.scope == "identities") {
        aniso::RandomGraphSpec spec;
        spec.max_edges = std::min(spec.max_edges, opt.max_edges);
        suites.push_back(
            aniso::verify_identities(opt.seed, opt.trials ? opt.trials : 200, spec));
    }
    if (all || opt.scope == "backbone") {
        suites.push_back(aniso::verify_backbone_expansion());
        suites.push_back(aniso::verify_backbone_grouping(
            opt.seed + 1, opt.trials ? opt.trials : 40, opt.max_edges));
    }
    if (all || opt.scope == "properties")
        suites.push_back(aniso::verify_properties(opt.seed + 2,
                                                  opt.trials ? opt.trials : 100,
                                                  opt.max_edges));
    if (all || opt.scope == "chain") suites.push_back(aniso::verify_chain());
    if (all)
        suites.push_back(aniso::verify_gks(opt.seed + 3, opt.trials ? opt.trials : 100));

    bool pass = true;
    json report;
    report["command"] = "verify";
    report["scope"] = opt.scope;
    report["seed"] = opt.seed;
    report["suites"] = json::array();
    for (const aniso::SuiteResult& suite : suites) {
        pass = pass && suite.pass();
        std::printf("[%s] %-22s %4zu checks, %d failures\n",
                    suite.pass() ? "PASS" : "FAIL", suite.name.c_str(),
                    suite.records.size(), suite.failures());
        json js;
        js["name"] = suite.name;
        js["checks"] = suite.records.size();
        js["failures"] = suite.failures();
        js["records"] = json::array();
        for (const aniso::CheckRecord& r : suite.records) {
            json jr;
            jr["instance"] = r.instance;
            jr["check"] = r.check;
            jr["lhs"] = r.lhs;
            jr["rhs"] = r.rhs;
            jr["tolerance"] = r.tolerance;
            jr["pass"] = r.pass;
            js["records"].push_back(std::move(jr));
        }
        report["suites"].push_back(std::move(js));
    }
    report["pass"] = pass;
    if (!opt.report.empty()) write_file(opt.report, report.dump(2) + "\n");
    std::printf("verify: %s\n", pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitCheckFailure;
}

// ----------------------------------------------------------------- curve --

struct CurveOptions {
    int d = 1, s = 1;
    double jd_min = 0.0, jd_max = 0.0, step = 0.0;
    std::string estimator = "exact1d";
    std::string out = "curve.csv";
    aniso::CurveParams params;
};

aniso::CurveEstimator parse_estimator(const std::string& name) {
    if (name == "exact1d") return aniso::CurveEstimator::closed_form_1d;
    if (name == "enum") return aniso::CurveEstimator::finite_enumeration;
    if (name == "strip") return aniso::CurveEstimator::strip_transfer;
    if (name == "extrap") return aniso::CurveEstimator::strip_extrapolated;
    throw std::invalid_argument("unknown estimator: " + name);
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(lo > 0.0) || !(lo <= hi)) throw std::invalid_argument("need 0 < jd-min <= jd-max");
    if (!(step > 0.0)) throw std::invalid_argument("need step > 0");
    // index-based so repeated runs produce bit-identical grids
    std::vector<double> grid;
    long long steps = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long k = 0; k <= steps; ++k) grid.push_back(lo + double(k) * step);
    return grid;
}

std::string curve_csv(const std::vector<aniso::BoundCurvePoint>& points) {
    std::string csv = "j_d,chi_d,chi_provenance,j_s_bound\n";
    for (const aniso::BoundCurvePoint& p : points) {
        csv += format_value(p.jd);
        csv += ',';
        csv += format_value(p.chi.value);
        csv += ',';
        csv += aniso::certification_label(p.chi.provenance);
        csv += ',';
        csv += format_value(p.js_bound);
        csv += '\n';
    }
    return csv;
}

int run_curve(const CurveOptions& opt, const std::string& command) {
    std::vector<double> grid = make_grid(opt.jd_min, opt.jd_max, opt.step);
    std::vector<aniso::BoundCurvePoint> points =
        aniso::bound_curve(opt.d, opt.s, grid, parse_estimator(opt.estimator), opt.params);
    std::string csv = curve_csv(points);
    write_file(opt.out, csv);
    json parameters;
    parameters["d"] = opt.d;
    parameters["s"] = opt.s;
    parameters["jd_min"] = opt.jd_min;
    parameters["jd_max"] = opt.jd_max;
    parameters["step"] = opt.step;
    parameters["estimator"] = opt.estimator;
    parameters["box_N"] = opt.params.N;
    parameters["strip_width"] = opt.params.width;
    parameters["strip_length"] = opt.params.length;
    write_manifest(opt.out, csv, command, parameters, json::array());
    std::printf("curve: %zu rows -> %s (+ manifest)\n", points.size(), opt.out.c_str());
    return kExitPass;
}

// ------------------------------------------------------------------- chi --

struct ChiOptions {
    int d = 1;
    double jd = 0.0;
    int N = -1;  // -1 = dimension-dependent default
    int width = -1, length = -1;
    std::vector<std::string> methods;
    double tol = 1e-8;
};

int run_chi(ChiOptions opt) {
    if (opt.d != 1 && opt.d != 2) throw std::invalid_argument("chi supports d = 1 or 2");
    if (!(opt.jd > 0.0)) throw std::invalid_argument("need --jd > 0");
    if (opt.N < 0) opt.N = opt.d == 1 ? 40 : 1;
    const int side = 2 * opt.N + 1;
    if (opt.width < 0) opt.width = side;
    if (opt.length < 0) opt.length = std::max(opt.width, side);
    if (opt.methods.empty())
        opt.methods = opt.d == 1 ? std::vector<std::string>{"closed-form", "currents"}
                                 : std::vector<std::string>{"currents", "transfer"};

    struct Value {
        std::string method;
        aniso::ChiEstimate est;
        bool finite_volume = false;  // finite-box value vs infinite-volume limit
    };
    std::vector<Value> values;
    for (const std::string& m : opt.methods) {
        if (m == "closed-form") {
            if (opt.d != 1)
                throw std::invalid_argument("closed-form requires --d 1");
            values.push_back({m, aniso::chi_1d_exact(opt.jd), false});
        } else if (m == "spin") {
            aniso::BoxGeometry box = aniso::build_box(opt.d, 0, opt.N);
            double chi = aniso::susceptibility_spin(
                box.graph, aniso::edge_weights(box, aniso::Couplings{opt.jd, 0.0}));
            aniso::ChiEstimate est{chi, aniso::ChiProvenance::exact_enumeration,
                                   "box d=" + std::to_string(opt.d) +
                                       " N=" + std::to_string(opt.N)};
            values.push_back({m, est, true});
        } else if (m == "currents") {
            aniso::BoxGeometry box = aniso::build_box(opt.d, 0, opt.N);
            values.push_back(
                {m, aniso::chi_finite_exact(box, aniso::Couplings{opt.jd, 0.0}), true});
        } else if (m == "transfer") {
            if (opt.d != 2) throw std::invalid_argument("transfer requires --d 2");
            values.push_back({m, aniso::chi_2d_strip(opt.width, opt.length, opt.jd), true});
        } else {
            throw std::invalid_argument("unknown method: " + m);
        }
    }

    bool pass = true;
    for (const Value& v : values)
        std::printf("chi[%s] = %s  (%s, %s)\n", v.method.c_str(),
                    format_value(v.est.value).c_str(),
                    aniso::certification_label(v.est.provenance), v.est.volume.c_str());
    // cross-method agreement: finite-volume methods must coincide with each
    // other; the d = 1 closed form is their infinite-volume limit, compared at
    // the same tolerance (tight already at N = 40 for J well below saturation)
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j) {
            double dev = aniso::rel_err(values[i].est.value, values[j].est.value);
            bool ok = dev <= opt.tol;
            pass = pass && ok;
            std::printf("agreement %s vs %s: rel dev %.3e  [%s]\n",
                        values[i].method.c_str(), values[j].method.c_str(), dev,
                        ok ? "ok" : "FAIL");
        }
    return pass ? kExitPass : kExitCheckFailure;
}

// -------------------------------------------------------------------- mc --

struct McOptions {
    std::string mode = "compare";
    aniso::McConfig cfg;
    // scan extras
    double jd_min = 0.1, jd_max = 0.4, step = 0.1;
    std::string estimator = "exact1d";
    double margin = 0.25;
    std::vector<int> sizes = {4, 6, 8};
    std::string out;
    aniso::CurveParams params;
};

int run_mc(const McOptions& opt, const std::string& command) {
    if (opt.mode == "metropolis" || opt.mode == "wolff") {
        aniso::McEstimate est = opt.mode == "metropolis"
                                    ? aniso::run_metropolis(opt.cfg)
                                    : aniso::run_wolff(opt.cfg);
        std::printf("%s: proxy %.6f +- %.6f  (chains %d, %s %.3f)\n", opt.mode.c_str(),
                    est.proxy, est.std_error, est.chains,
                    opt.mode == "metropolis" ? "acceptance" : "cluster-frac", est.aux);
        return kExitPass;
    }
    if (opt.mode == "compare") {
        aniso::McEstimate met = aniso::run_metropolis(opt.cfg);
        aniso::McEstimate wol = aniso::run_wolff(opt.cfg);
        std::printf("metropolis: proxy %.6f +- %.6f\n", met.proxy, met.std_error);
        std::printf("wolff:      proxy %.6f +- %.6f\n", wol.proxy, wol.std_error);
        bool pass = true;
        aniso::TorusGeometry torus = aniso::build_torus(opt.cfg.d, opt.cfg.s, opt.cfg.L);
        if (torus.graph.vertex_count() <= aniso::caps().max_spin_vertices) {
            double exact = aniso::m2_per_site_spin(
                torus.graph, aniso::edge_weights(torus, opt.cfg.J));
            std::printf("exact:      proxy %.6f\n", exact);
            for (const aniso::McEstimate& est : {met, wol}) {
                double sigma = std::max(est.std_error, 1e-12);
                bool ok = std::fabs(est.proxy - exact) <= 3.0 * sigma;
                pass = pass && ok;
                std::printf("  |proxy - exact| = %.3e vs 3 sigma = %.3e  [%s]\n",
                            std::fabs(est.proxy - exact), 3.0 * sigma,
                            ok ? "ok" : "FAIL");
            }
        } else {
            double sigma = std::max(1e-12, std::hypot(met.std_error, wol.std_error));
            bool ok = std::fabs(met.proxy - wol.proxy) <= 4.0 * sigma;
            pass = pass && ok;
            std::printf("  (volume above exact-enumeration cap; algorithms vs each "
                        "other: [%s])\n",
                        ok ? "ok" : "FAIL");
        }
        return pass ? kExitPass : kExitCheckFailure;
    }
    if (opt.mode == "scan") {
        std::vector<double> grid = make_grid(opt.jd_min, opt.jd_max, opt.step);
        std::vector<aniso::BoundCurvePoint> curve = aniso::bound_curve(
            opt.cfg.d, opt.cfg.s, grid, parse_estimator(opt.estimator), opt.params);
        aniso::ScanReport report =
            aniso::scan_curve(opt.cfg, curve, opt.margin, opt.sizes);
        std::string csv = "j_d,j_s_bound,j_s_run,L,proxy,std_error,saturating\n";
        for (const aniso::ScanPoint& p : report.points) {
            std::printf("jd %.4f  js_bound %s  js_run %.6f%s\n", p.jd,
                        format_value(p.js_bound).c_str(), p.js_run,
                        p.saturating ? "  [saturating]" : "");
            for (const aniso::ScanSample& s : p.samples) {
                std::printf("    L=%-3d proxy %.6f +- %.6f\n", s.L, s.proxy,
                            s.std_error);
                csv += format_value(p.jd) + ',' + format_value(p.js_bound) + ',' +
                       format_value(p.js_run) + ',' + std::to_string(s.L) + ',' +
                       format_value(s.proxy) + ',' + format_value(s.std_error) + ',' +
                       (p.saturating ? "1" : "0") + '\n';
            }
        }
        if (!opt.out.empty()) {
            write_file(opt.out, csv);
            json parameters;
            parameters["d"] = opt.cfg.d;
            parameters["s"] = opt.cfg.s;
            parameters["jd_min"] = opt.jd_min;
            parameters["jd_max"] = opt.jd_max;
            parameters["step"] = opt.step;
            parameters["estimator"] = opt.estimator;
            parameters["margin"] = opt.margin;
            parameters["sizes"] = opt.sizes;
            parameters["sweeps"] = opt.cfg.sweeps;
            parameters["burnin"] = opt.cfg.burnin;
            parameters["chains"] = opt.cfg.chains;
            write_manifest(opt.out, csv, command, parameters,
                           json::array({opt.cfg.seed}));
            std::printf("scan: %zu points -> %s (+ manifest)\n", report.points.size(),
                        opt.out.c_str());
        }
        return kExitPass;
    }
    throw std::invalid_argument("unknown mc mode: " + opt.mode);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisolab: exact cross-checks and bound curves for the "
                 "anisotropic ferromagnetic Ising model"};
    app.require_subcommand(1);
    const std::string command = join_args(argc, argv);
    int status = kExitPass;

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--scope", vopt.scope, "suite selection")
        ->check(CLI::IsMember({"identities", "backbone", "properties", "chain", "all"}));
    verify->add_option("--seed", vopt.seed, "master seed for randomized suites");
    verify->add_option("--trials", vopt.trials, "override per-suite trial counts");
    verify->add_option("--max-edges", vopt.max_edges, "cap on random-instance edges")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", vopt.report, "JSON report path ('' = none)");
    verify->callback([&] { status = run_verify(vopt); });

    CurveOptions copt;
    CLI::App* curve = app.add_subcommand("curve", "emit the sub-criticality bound curve");
    curve->add_option("--d", copt.d, "planar dimension")->required();
    curve->add_option("--s", copt.s, "vertical dimension")->check(CLI::PositiveNumber);
    curve->add_option("--jd-min", copt.jd_min, "grid start")->required();
    curve->add_option("--jd-max", copt.jd_max, "grid end")->required();
    curve->add_option("--step", copt.step, "grid step")->required();
    curve->add_option("--estimator", copt.estimator, "chi_d estimator")
        ->check(CLI::IsMember({"exact1d", "enum", "strip", "extrap"}));
    curve->add_option("--out", copt.out, "output CSV path");
    curve->add_option("--box-N", copt.params.N, "finite-enumeration box size")
        ->check(CLI::PositiveNumber);
    curve->add_option("--width", copt.params.width, "strip width")
        ->check(CLI::PositiveNumber);
    curve->add_option("--length", copt.params.length, "strip length")
        ->check(CLI::PositiveNumber);
    curve->callback([&] { status = run_curve(copt, command); });

    ChiOptions xopt;
    CLI::App* chi = app.add_subcommand("chi", "cross-checked susceptibility value");
    chi->add_option("--d", xopt.d, "planar dimension")->required();
    chi->add_option("--jd", xopt.jd, "coupling J_d")->required();
    chi->add_option("--N", xopt.N, "box size (side 2N+1)");
    chi->add_option("--width", xopt.width, "strip width (transfer method)");
    chi->add_option("--length", xopt.length, "strip length (transfer method)");
    chi->add_option("--method", xopt.methods,
                    "methods to run and cross-check (repeatable)")
        ->check(CLI::IsMember({"spin", "currents", "transfer", "closed-form"}));
    chi->add_option("--tol", xopt.tol, "cross-method relative tolerance");
    chi->callback([&] { status = run_chi(xopt); });

    McOptions mopt;
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo on periodic tori");
    mc->add_option("--mode", mopt.mode, "metropolis|wolff|compare|scan")
        ->check(CLI::IsMember({"metropolis", "wolff", "compare", "scan"}));
    mc->add_option("--d", mopt.cfg.d, "planar dimension");
    mc->add_option("--s", mopt.cfg.s, "vertical dimension");
    mc->add_option("--L", mopt.cfg.L, "torus linear size");
    mc->add_option("--jd", mopt.cfg.J.jd, "planar coupling");
    mc->add_option("--js", mopt.cfg.J.js, "vertical coupling");
    mc->add_option("--sweeps", mopt.cfg.sweeps, "sweeps per chain");
    mc->add_option("--burnin", mopt.cfg.burnin, "burn-in sweeps");
    mc->add_option("--chains", mopt.cfg.chains, "independent chains");
    mc->add_option("--seed", mopt.cfg.seed, "master seed")->required();
    mc->add_option("--jd-min", mopt.jd_min, "scan grid start");
    mc->add_option("--jd-max", mopt.jd_max, "scan grid end");
    mc->add_option("--step", mopt.step, "scan grid step");
    mc->add_option("--estimator", mopt.estimator, "scan curve estimator")
        ->check(CLI::IsMember({"exact1d", "enum", "strip", "extrap"}));
    mc->add_option("--margin", mopt.margin, "scan safety margin in [0, 1]");
    mc->add_option("--sizes", mopt.sizes, "scan torus sizes (ascending)");
    mc->add_option("--out", mopt.out, "scan CSV output path");
    mc->callback([&] { status = run_mc(mopt, command); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const aniso::cap_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
    return status;
}
