#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/asymptotics.hpp"
#include "lambert/engines.hpp"
#include "lambert/mertens.hpp"
#include "lambert/special.hpp"

using namespace lambert;

namespace {

// ---------------------------------------------------------------------------
// output plumbing: NDJSON (17 significant digits, byte-stable) or fixed-header
// CSV.  One row object per grid point; every row of a run shares its schema.

std::string fmt_num(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof tmp, "%.17g", v);
    return tmp;
}

std::string json_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if ((unsigned char)c < 0x20) {
                    char tmp[8];
                    std::snprintf(tmp, sizeof tmp, "\\u%04x", c);
                    out += tmp;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class Row {
  public:
    void num(const char* k, double v) { cells_.emplace_back(k, fmt_num(v)); }
    void integer(const char* k, std::uint64_t v) {
        cells_.emplace_back(k, std::to_string(v));
    }
    void str(const char* k, std::string_view v) {
        cells_.emplace_back(k, "\"" + json_escape(v) + "\"");
    }
    void boolean(const char* k, bool v) {
        cells_.emplace_back(k, v ? "true" : "false");
    }

    std::string json() const {
        std::string out = "{";
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) out += ',';
            out += '"';
            out += cells_[i].first;
            out += "\":";
            out += cells_[i].second;
        }
        return out + "}";
    }
    std::string csv_header() const {
        std::string out;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) out += ',';
            out += cells_[i].first;
        }
        return out;
    }
    std::string csv_line() const {
        std::string out;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i) out += ',';
            // strip the JSON quoting for CSV cells
            const std::string& v = cells_[i].second;
            if (v.size() >= 2 && v.front() == '"')
                out += v.substr(1, v.size() - 2);
            else
                out += v;
        }
        return out;
    }

  private:
    std::vector<std::pair<std::string, std::string>> cells_;
};

class Emitter {
  public:
    explicit Emitter(std::string format) : format_(std::move(format)) {}
    void emit(const Row& row) {
        if (format_ == "csv") {
            if (!header_done_) {
                std::printf("%s\n", row.csv_header().c_str());
                header_done_ = true;
            }
            std::printf("%s\n", row.csv_line().c_str());
        } else {
            std::printf("%s\n", row.json().c_str());
        }
    }

  private:
    std::string format_;
    bool header_done_ = false;
};

void emit_error(const char* category, const std::string& what) {
    std::fprintf(stderr, "{\"error\":\"%s\",\"what\":\"%s\"}\n", category,
                 json_escape(what).c_str());
}

// ---------------------------------------------------------------------------
// run configuration shared by every subcommand

struct Config {
    double tolerance = 1e-12;
    std::uint64_t term_cap = kDefaultTermCap;
    std::uint64_t table_limit = 1'000'000;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool strict = false;
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--tol", cfg.tolerance, "target relative tolerance")
        ->capture_default_str();
    cmd->add_option("--term-cap", cfg.term_cap, "series term budget")
        ->capture_default_str();
    cmd->add_option("--table-limit", cfg.table_limit, "sieve table size")
        ->envname("LAMBERT_TABLE_LIMIT")
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps")
        ->capture_default_str();
    cmd->add_flag("--strict", cfg.strict,
                  "exit 3 when the term cap is hit with the tolerance unmet");
}

void validate(const Config& cfg) {
    if (!(cfg.tolerance >= 1e-16 && cfg.tolerance <= 1e-2))
        throw std::invalid_argument("--tol must lie in [1e-16, 1e-2]");
}

struct LazyTable {
    explicit LazyTable(const Config& c) : cfg(c) {}
    const ArithTable& get() {
        if (!table) table.emplace(build_table(cfg.table_limit));
        return *table;
    }
    const Config& cfg;
    std::optional<ArithTable> table;
};

bool unmet_at_cap(const EvalReport& r, const Config& cfg) {
    return r.stop_reason == StopReason::term_cap &&
           r.error_estimate > cfg.tolerance * std::max(1.0, std::abs(r.value));
}

// power-series / q-series budgets: honor an explicit --terms, otherwise
// double the budget until the a-posteriori estimate meets the tolerance.
EvalReport run_power(const CoeffFn& a, std::complex<double> x, const Config& cfg,
                     std::uint64_t terms_flag, double tol) {
    std::uint64_t cap = std::min<std::uint64_t>(cfg.term_cap, 10'000'000);
    if (terms_flag) return eval_power_series(a, x, std::min(terms_flag, cap));
    std::uint64_t n = 64;
    for (;;) {
        EvalReport r = eval_power_series(a, x, n);
        if (r.error_estimate <= tol * std::max(1.0, std::abs(r.value)) || n >= cap)
            return r;
        n = std::min(cap, n * 2);
    }
}

EvalReport run_qseries(std::complex<double> z, const Config& cfg,
                       std::uint64_t terms_flag) {
    std::uint64_t cap = std::min<std::uint64_t>(cfg.term_cap, 10'000);
    if (terms_flag) return eval_eisenstein_qseries(z, std::min(terms_flag, cap));
    std::uint64_t n = 64;
    for (;;) {
        EvalReport r = eval_eisenstein_qseries(z, n);
        if (r.error_estimate <=
                cfg.tolerance * std::max(1.0, std::abs(r.value)) ||
            n >= cap)
            return r;
        n = std::min(cap, n * 2);
    }
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string coeff = "one";
    std::string engine = "naive";
    double x = 0.0;
    double imag = 0.0;
    std::uint64_t terms = 0;  // 0 = auto
    int depth = 60;
};

const std::vector<std::string> kEngines = {"naive", "power", "clausen",
                                           "eisenstein-q", "eisenstein-cf"};

void require_real(const EvalArgs& a) {
    if (a.imag != 0.0)
        throw std::domain_error("engine '" + a.engine +
                                "' evaluates real arguments only");
}

EvalReport dispatch_engine(const EvalArgs& a, const Config& cfg,
                           LazyTable& table) {
    bool d_series_only = a.engine == "clausen" || a.engine == "eisenstein-q" ||
                         a.engine == "eisenstein-cf";
    if (d_series_only && a.coeff != "one")
        throw std::invalid_argument(
            "engine '" + a.engine +
            "' evaluates the divisor series only; use --coeff one");

    std::complex<double> z(a.x, a.imag);
    if (a.engine == "naive") {
        CoeffFn src = a.coeff == "one"
                          ? coefficient_one()
                          : coefficient_source(coeff_from_name(a.coeff),
                                               table.get());
        return eval_naive(src, z, cfg.tolerance, cfg.term_cap);
    }
    if (a.engine == "power") {
        CoeffFn src = a.coeff == "one"
                          ? coefficient_one()
                          : coefficient_source(coeff_from_name(a.coeff),
                                               table.get());
        return run_power(src, z, cfg, a.terms, cfg.tolerance);
    }
    if (a.engine == "clausen") {
        require_real(a);
        return eval_clausen(a.x, cfg.tolerance);
    }
    if (a.engine == "eisenstein-q") return run_qseries(z, cfg, a.terms);
    require_real(a);  // eisenstein-cf
    return eval_eisenstein_cf(a.x, a.depth);
}

int run_eval(const EvalArgs& a, const Config& cfg) {
    LazyTable table(cfg);
    EvalReport r = dispatch_engine(a, cfg, table);

    Emitter out(cfg.format);
    Row row;
    if (cfg.format == "csv") {
        row.str("engine", a.engine);
        row.str("coeff", a.coeff);
        row.num("point_re", a.x);
        row.num("point_im", a.imag);
        row.num("value_re", r.value.real());
        row.num("value_im", r.value.imag());
        row.integer("terms_used", r.terms_used);
        row.num("error_estimate", r.error_estimate);
        row.str("stop_reason", to_string(r.stop_reason));
    } else {
        row.num("value", r.value.real());
        if (a.imag != 0.0) row.num("value_imag", r.value.imag());
        row.integer("terms_used", r.terms_used);
        row.num("error_estimate", r.error_estimate);
        row.str("stop_reason", to_string(r.stop_reason));
        row.str("engine", a.engine);
        row.str("coeff", a.coeff);
        row.num("point", a.x);
        if (a.imag != 0.0) row.num("point_imag", a.imag);
    }
    out.emit(row);
    return unmet_at_cap(r, cfg) && cfg.strict ? 3 : 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
    std::string kind;
    int order = 2;
    double z_start = 0.2;
    int halvings = 5;
    std::vector<double> xs;
    std::vector<double> rhos;
    std::optional<double> x_single;
    int n_terms = 50;
    std::uint64_t p = 1, q = 2;
    std::vector<double> rs;
};

const std::vector<std::string> kScanKinds = {
    "wigert",  "schlomilch", "voronoi",  "tauber-logd", "tauber-h",
    "partition", "singularity", "mertens1", "mertens2"};

std::vector<double> grid_or(const ScanArgs& a, std::vector<double> fallback) {
    if (a.x_single) return {*a.x_single};
    if (!a.xs.empty()) return a.xs;
    return fallback;
}

int run_scan(const ScanArgs& a, const Config& cfg) {
    Emitter out(cfg.format);
    LazyTable lt(cfg);

    if (a.kind == "wigert") {
        std::vector<std::pair<double, double>> pts;
        std::vector<Row> rows;
        double z = a.z_start;
        for (int j = 0; j <= a.halvings; ++j, z /= 2) {
            double direct = dseries_direct(z, lt.get());
            double expansion = wigert_eval({z, 0.0}, a.order).real();
            double residual = std::abs(direct - expansion);
            pts.emplace_back(z, residual);
            Row row;
            row.str("kind", "wigert");
            row.integer("order", (std::uint64_t)a.order);
            row.num("z", z);
            row.num("direct", direct);
            row.num("expansion", expansion);
            row.num("residual", residual);
            rows.push_back(row);
        }
        double slope = fit_loglog_slope(pts);
        for (Row& row : rows) {
            row.num("slope", slope);
            out.emit(row);
        }
    } else if (a.kind == "schlomilch") {
        std::vector<double> xs = grid_or(a, {0.2, 0.1, 0.05, 0.025, 0.0125});
        ResidualScan scan = schlomilch_residual_scan(a.order, xs, lt.get());
        for (auto& [xi, residual] : scan.points) {
            Row row;
            row.str("kind", "schlomilch");
            row.integer("order", (std::uint64_t)a.order);
            row.num("xi", xi);
            row.num("residual", residual);
            row.num("slope", scan.fitted_exponent);
            out.emit(row);
        }
    } else if (a.kind == "voronoi") {
        for (double x : grid_or(a, {0.2, 0.5, 0.9})) {
            double direct = dseries_direct(x, lt.get());
            double ei_form = voronoi_rhs(x, a.n_terms, lt.get());
            Row row;
            row.str("kind", "voronoi");
            row.num("x", x);
            row.integer("n_terms", (std::uint64_t)a.n_terms);
            row.num("direct", direct);
            row.num("ei_form", ei_form);
            row.num("residual", std::abs(direct - ei_form));
            out.emit(row);
        }
    } else if (a.kind == "tauber-logd") {
        for (double x : grid_or(a, {0.1, 0.05, 0.025, 0.0125})) {
            Row row;
            row.str("kind", "tauber-logd");
            row.num("x", x);
            row.num("scaled_residual", tauber_logd_residual(x, lt.get()));
            row.num("bound", 5.0);
            out.emit(row);
        }
    } else if (a.kind == "tauber-h") {
        for (double x : grid_or(a, {1e3, 1e4, 1e5, 1e6})) {
            double h = tauber_h(x, lt.get());
            Row row;
            row.str("kind", "tauber-h");
            row.num("x", x);
            row.num("h", h);
            row.num("distance_to_target", std::abs(h + 2.0 * kEulerGamma));
            row.num("target", -2.0 * kEulerGamma);
            out.emit(row);
        }
    } else if (a.kind == "partition") {
        for (double x : grid_or(a, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})) {
            PartitionCheck c = partition_log_check(x);
            Row row;
            row.str("kind", "partition");
            row.num("x", x);
            row.num("lhs", c.lhs);
            row.num("mid", c.mid);
            row.num("rhs", c.rhs);
            row.boolean("ordered", c.lhs < c.mid && c.mid < c.rhs);
            out.emit(row);
        }
    } else if (a.kind == "singularity") {
        std::vector<double> rs = a.rs.empty()
                                     ? std::vector<double>{0.9, 0.99, 0.999}
                                     : a.rs;
        for (double r : rs) {
            SingularityProbe probe = singularity_probe(a.p, a.q, r, cfg.tolerance);
            Row row;
            row.str("kind", "singularity");
            row.integer("p", probe.p);
            row.integer("q", probe.q);
            row.num("r", probe.r);
            row.num("major_arc", probe.major_arc);
            row.num("major_lower_bound", probe.major_lower_bound);
            row.num("minor_abs", std::abs(probe.minor_arc));
            row.num("minor_upper_bound", probe.minor_upper_bound);
            row.boolean("major_ok", probe.major_arc >= probe.major_lower_bound);
            row.boolean("minor_ok",
                        std::abs(probe.minor_arc) < probe.minor_upper_bound);
            out.emit(row);
        }
    } else if (a.kind == "mertens1") {
        std::vector<double> rhos =
            a.rhos.empty() ? std::vector<double>{0.1, 0.01, 0.001} : a.rhos;
        ResidualScan scan = mertens_first_check(rhos, lt.get());
        for (auto& [rho, residual] : scan.points) {
            Row row;
            row.str("kind", "mertens1");
            row.num("rho", rho);
            row.num("residual", residual);
            row.num("slope", scan.fitted_exponent);
            out.emit(row);
        }
    } else {  // mertens2
        for (double x : grid_or(a, {1e3, 1e4, 1e5, 1e6})) {
            double delta = prime_reciprocal_sum(x, lt.get()) -
                           std::log(std::log(x)) - kEulerGamma + kMertensH;
            double bound = 4.0 / std::log(x + 1.0) + 2.0 / (x * std::log(x));
            Row row;
            row.str("kind", "mertens2");
            row.num("x", x);
            row.num("delta", delta);
            row.num("bound", bound);
            row.num("margin", bound - std::abs(delta));
            out.emit(row);
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
    std::vector<std::string> engines;
    std::vector<double> xs = {0.1, 0.5, 0.9};
    int depth = 60;
};

int run_bench(const BenchArgs& a, const Config& cfg) {
    if (a.engines.size() < 2)
        throw std::invalid_argument("bench needs at least two engines");
    for (const std::string& e : a.engines)
        if (std::find(kEngines.begin(), kEngines.end(), e) == kEngines.end())
            throw std::invalid_argument("unknown engine: " + e);

    Emitter out(cfg.format);
    LazyTable lt(cfg);
    double ref_tol = std::min(1e-13, cfg.tolerance / 100.0);

    for (double x : a.xs) {
        EvalReport ref =
            run_power(coefficient_one(), {x, 0.0}, cfg, 0, ref_tol);

        struct Entry {
            std::string engine;
            EvalReport report;
            double error = 0.0;
            double wall_ms = 0.0;
            bool meets = false;
        };
        std::vector<Entry> entries;
        for (const std::string& engine : a.engines) {
            EvalArgs ea;
            ea.engine = engine;
            ea.x = x;
            ea.depth = a.depth;
            auto t0 = std::chrono::steady_clock::now();
            EvalReport r = dispatch_engine(ea, cfg, lt);
            auto t1 = std::chrono::steady_clock::now();
            Entry e;
            e.engine = engine;
            e.report = r;
            e.error = std::abs(r.value - ref.value);
            e.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            e.meets = e.error <= cfg.tolerance * std::max(1.0, std::abs(ref.value));
            entries.push_back(e);
        }

        // winner: fewest terms among tolerance-meeting engines (list order
        // breaks ties); if none meets, smallest achieved error.
        std::size_t win = 0;
        bool any_meets = false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Entry& e = entries[i];
            if (e.meets && (!any_meets ||
                            e.report.terms_used < entries[win].report.terms_used)) {
                win = i;
                any_meets = true;
            }
        }
        if (!any_meets)
            for (std::size_t i = 1; i < entries.size(); ++i)
                if (entries[i].error < entries[win].error) win = i;

        for (const Entry& e : entries) {
            Row row;
            row.str("engine", e.engine);
            row.num("x", x);
            row.num("value", e.report.value.real());
            row.integer("terms_used", e.report.terms_used);
            row.num("error_vs_reference", e.error);
            row.boolean("meets_tolerance", e.meets);
            row.num("wall_time_ms", e.wall_ms);
            row.str("winner", entries[win].engine);
            out.emit(row);
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// constants

int run_constants(const Config& cfg) {
    LazyTable lt(cfg);
    MertensReport report = compute_mertens_report(lt.get());
    Emitter out(cfg.format);
    Row row;
    row.num("H_mobius", report.H_mobius);
    row.num("H_direct", report.H_direct);
    row.num("agreement", report.agreement);
    row.num("two_gamma", 2.0 * kEulerGamma);
    row.num("gamma", kEulerGamma);
    row.str("provenance_H_mobius", "mobius-weighted log zeta series, " +
                                       std::to_string(report.terms_mobius) +
                                       " terms");
    row.str("provenance_H_direct",
            "prime-power double sum, primes to " +
                std::to_string(report.prime_limit_direct) + ", m <= " +
                std::to_string(report.m_cap_direct));
    row.str("provenance_gamma", "frozen Euler-Mascheroni constant");
    out.emit(row);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lambert series evaluator and identity scanner"};
    app.require_subcommand(1);

    Config cfg;

    EvalArgs eval_args;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate sum a_n x^n/(1-x^n)");
    eval_cmd->add_option("--coeff", eval_args.coeff, "coefficient source")
        ->check(CLI::IsMember({"one", "mobius", "phi", "liouville", "mangoldt"}))
        ->capture_default_str();
    eval_cmd->add_option("--x", eval_args.x, "evaluation point (real part)")
        ->required();
    eval_cmd->add_option("--imag", eval_args.imag, "imaginary part")
        ->capture_default_str();
    eval_cmd->add_option("--engine", eval_args.engine, "evaluation engine")
        ->check(CLI::IsMember(kEngines))
        ->capture_default_str();
    eval_cmd->add_option("--terms", eval_args.terms,
                         "fixed term budget (0 = auto)");
    eval_cmd->add_option("--depth", eval_args.depth,
                         "continued-fraction depth")
        ->capture_default_str();
    add_common(eval_cmd, cfg);

    ScanArgs scan_args;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "grid scans of identities and bounds");
    scan_cmd->add_option("--kind", scan_args.kind, "scan family")
        ->check(CLI::IsMember(kScanKinds))
        ->required();
    scan_cmd->add_option("--order", scan_args.order,
                         "expansion order / truncation index")
        ->capture_default_str();
    scan_cmd->add_option("--z-start", scan_args.z_start, "first grid point")
        ->capture_default_str();
    scan_cmd->add_option("--halvings", scan_args.halvings,
                         "number of halvings after z-start")
        ->capture_default_str();
    scan_cmd->add_option("--xs", scan_args.xs, "comma-separated x grid")
        ->delimiter(',');
    scan_cmd->add_option("--x", scan_args.x_single, "single grid point");
    scan_cmd->add_option("--rhos", scan_args.rhos, "comma-separated rho grid")
        ->delimiter(',');
    scan_cmd->add_option("--n-terms", scan_args.n_terms,
                         "correction terms (voronoi)")
        ->capture_default_str();
    scan_cmd->add_option("--p", scan_args.p, "numerator of the arc fraction")
        ->capture_default_str();
    scan_cmd->add_option("--q", scan_args.q, "denominator of the arc fraction")
        ->capture_default_str();
    scan_cmd->add_option("--rs", scan_args.rs, "comma-separated radii")
        ->delimiter(',');
    add_common(scan_cmd, cfg);

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "compare engines on the divisor series");
    bench_cmd->add_option("--engines", bench_args.engines,
                          "comma-separated engines (>= 2)")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--xs", bench_args.xs, "comma-separated x grid")
        ->delimiter(',');
    bench_cmd->add_option("--depth", bench_args.depth,
                          "continued-fraction depth")
        ->capture_default_str();
    add_common(bench_cmd, cfg);

    CLI::App* constants_cmd =
        app.add_subcommand("constants", "number-theoretic constants report");
    add_common(constants_cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    }

    try {
        validate(cfg);
        if (eval_cmd->parsed()) return run_eval(eval_args, cfg);
        if (scan_cmd->parsed()) return run_scan(scan_args, cfg);
        if (bench_cmd->parsed()) return run_bench(bench_args, cfg);
        return run_constants(cfg);
    } catch (const std::domain_error& e) {
        emit_error("domain", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        emit_error("range", e.what());
        return 2;
    }
}
