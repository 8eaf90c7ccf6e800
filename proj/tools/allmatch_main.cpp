// allmatch: exact counting, randomized estimation, closed-form ensemble
// tables, and the cross-module verification suite for 0-1 matrix matchings.
//
// Exit codes: 0 ok, 1 verification failure, 2 validation error, 3 capability
// limit exceeded.

#include "allmatch/closed_forms.hpp"
#include "allmatch/counting.hpp"
#include "allmatch/ensembles.hpp"
#include "allmatch/errors.hpp"
#include "allmatch/estimator.hpp"
#include "allmatch/matrix.hpp"
#include "allmatch/report.hpp"
#include "allmatch/rng.hpp"
#include "allmatch/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace allmatch;

struct GlobalOptions {
    std::string format = "json";
    std::uint64_t seed = 0;
    int workers = 1;
    bool deterministic = false;
};

ZeroOneMatrix load_matrix(const std::string& path) {
    std::string content;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        content = ss.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ValidationError("cannot open matrix file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    return parse_matrix(content);
}

ExactRational parse_rational_arg(const std::string& text, const char* what) {
    ExactRational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ValidationError(std::string("invalid rational for ") + what + ": " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ValidationError(std::string(what) + " has zero denominator");
    q.canonicalize();
    return q;
}

void emit(const ExperimentReport& report, const GlobalOptions& g) {
    std::cout << report.render(g.format);
}

// ---------------------------------------------------------------- exact ---

int cmd_exact(const std::string& file, const std::string& what,
              const GlobalOptions& g, double runtime_ms_hook = 0) {
    (void)runtime_ms_hook;
    const auto t0 = std::chrono::steady_clock::now();
    const ZeroOneMatrix a = load_matrix(file);

    ExperimentReport report;
    report.command = "exact";
    report.config = {{"file", file}, {"what", what},
                     {"rows", a.rows()}, {"cols", a.cols()}};
    report.deterministic = g.deterministic;

    int exit_code = 0;
    if (what == "am") {
        report.rows.push_back({{"what", "am"}, {"value", am_dp(a).get_str()}});
    } else if (what == "per") {
        report.rows.push_back({{"what", "per"}, {"value", permanent(a).get_str()}});
    } else if (what == "vector") {
        const MatchingVector mv = matching_vector(a);
        for (std::size_t k = 0; k < mv.counts.size(); ++k)
            report.rows.push_back({{"what", "vector"},
                                   {"k", k},
                                   {"count", mv.counts[k].get_str()}});
    } else if (what == "corollary3") {
        const Corollary3Result r = verify_corollary3(a);
        report.rows.push_back({{"what", "corollary3"},
                               {"am", r.am.get_str()},
                               {"n_factorial_times_am", r.lhs.get_str()},
                               {"per_extended", r.per_ext.get_str()},
                               {"ok", r.ok},
                               {"verdict", r.lhs.get_str() + " = " + r.per_ext.get_str() +
                                           (r.ok ? " OK" : " MISMATCH")}});
        if (!r.ok) exit_code = 1;
    } else {
        throw ValidationError("unknown --what '" + what + "'");
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0).count();
    emit(report, g);
    return exit_code;
}

// ------------------------------------------------------------- estimate ---

int cmd_estimate(const std::string& file, const std::string& alg_name,
                 std::uint64_t samples, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    const ZeroOneMatrix a = load_matrix(file);
    const Algorithm alg = parse_algorithm(alg_name);

    const SampleStats stats = run_batch(a, alg, samples, g.seed, g.workers);

    OrderedJson row;
    row["alg"] = algorithm_name(alg);
    row["samples"] = stats.n_samples;
    row["mean"] = format_rational(stats.mean());
    row["mean_approx"] = to_double(stats.mean());
    row["std_error"] = stats.std_error();

    std::string warning;
    try {
        const ExactRational emp = stats.empirical_critical_ratio();
        row["empirical_ratio"] = format_rational(emp);
        row["empirical_ratio_approx"] = to_double(emp);
    } catch (const UndefinedRatioError&) {
        row["empirical_ratio"] = nullptr;
        row["empirical_ratio_approx"] = nullptr;
    }

    // exact companions, when the matrix is small enough
    try {
        const ExactCount exact = (alg == Algorithm::RM) ? permanent(a) : am_dp(a);
        row["exact"] = exact.get_str();
        if (exact == 0) warning = "permanent is 0";
        try {
            const ExactRational ratio = critical_ratio_exact(a, alg);
            row["exact_ratio"] = format_rational(ratio);
            row["exact_ratio_approx"] = to_double(ratio);
        } catch (const UndefinedRatioError&) {
            row["exact_ratio"] = nullptr;
            row["exact_ratio_approx"] = nullptr;
        } catch (const CapabilityError&) {
            row["exact_ratio"] = nullptr;
            row["exact_ratio_approx"] = nullptr;
        }
    } catch (const CapabilityError&) {
        // too large for the exact oracles; report the estimate alone
    }
    if (!warning.empty()) row["warning"] = warning;

    ExperimentReport report;
    report.command = "estimate";
    report.config = {{"file", file}, {"alg", algorithm_name(alg)},
                     {"samples", samples}, {"workers", g.workers},
                     {"rows", a.rows()}, {"cols", a.cols()}};
    report.seed = g.seed;
    report.has_seed = true;
    report.deterministic = g.deterministic;
    report.rows.push_back(std::move(row));
    report.runtime_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0).count();
    emit(report, g);
    return 0;
}

// ---------------------------------------------------------- closed-form ---

struct ClosedFormArgs {
    std::string formula;
    int n = -1;
    int n_min = -1;
    int n_max = -1;
    int m = -1;                  // t3/t4 row count; defaults to n
    long ones = -1;              // lemma2/t8/l2ratio
    std::string ones_frac;       // alternative: ceil(frac * n^2) per n
    std::string eps = "0";       // t7
};

int cmd_closed_form(const ClosedFormArgs& args, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    int lo = args.n, hi = args.n;
    if (args.n_min >= 0 || args.n_max >= 0) {
        if (args.n >= 0)
            throw ValidationError("give either --n or --n-min/--n-max, not both");
        if (args.n_min < 0 || args.n_max < 0 || args.n_min > args.n_max)
            throw ValidationError("--n-min/--n-max must describe a nonempty range");
        lo = args.n_min;
        hi = args.n_max;
    }
    if (lo < 0) throw ValidationError("closed-form needs --n or --n-min/--n-max");

    std::optional<ExactRational> frac;
    if (!args.ones_frac.empty())
        frac = parse_rational_arg(args.ones_frac, "--ones-frac");

    auto ones_for = [&](int n) -> long {
        if (frac) {
            const ExactRational target = *frac * ExactRational(static_cast<long>(n) * n);
            ExactCount q;
            mpz_cdiv_q(q.get_mpz_t(), target.get_num().get_mpz_t(),
                       target.get_den().get_mpz_t());
            return q.get_si();
        }
        if (args.ones < 0)
            throw ValidationError("formula '" + args.formula +
                                  "' needs --ones or --ones-frac");
        return args.ones;
    };

    ExperimentReport report;
    report.command = "closed-form";
    report.config = {{"formula", args.formula}, {"n_min", lo}, {"n_max", hi}};
    if (args.m >= 0) report.config["m"] = args.m;
    if (args.ones >= 0) report.config["ones"] = args.ones;
    if (!args.ones_frac.empty()) report.config["ones_frac"] = args.ones_frac;
    if (args.formula == "t7") report.config["eps"] = args.eps;
    report.deterministic = g.deterministic;

    for (int n = lo; n <= hi; ++n) {
        OrderedJson row;
        row["n"] = n;
        if (args.formula == "t3" || args.formula == "t4") {
            const int m = args.m >= 0 ? args.m : n;
            row["m"] = m;
            if (args.formula == "t3") {
                const ExactRational v = t3_mean(m, n);
                row["mean"] = format_rational(v);
                row["mean_approx"] = to_double(v);
            } else {
                const ExactRational v = t4_second_moment(m, n);
                row["second_moment"] = format_rational(v);
                row["second_moment_approx"] = to_double(v);
            }
        } else if (args.formula == "t5") {
            const T5Report r = t5_bounds(n);
            row["k_star"] = r.k_star;
            row["h"] = format_rational(r.h);
            row["h_approx"] = to_double(r.h);
            row["mean"] = format_rational(r.mean);
            row["mean_approx"] = to_double(r.mean);
            row["upper_paper"] = format_rational(r.upper_paper);
            row["upper_rigorous"] = format_rational(r.upper_rigorous);
            row["lower_holds"] = r.lower_holds;
            row["upper_paper_holds"] = r.upper_paper_holds;
            row["upper_rigorous_holds"] = r.upper_rigorous_holds;
            row["kstar_is_argmax"] = r.kstar_is_argmax;
        } else if (args.formula == "t6") {
            const RatioReport r = t6_ratio(n);
            row["ratio"] = format_rational(r.ratio);
            row["ratio_approx"] = to_double(r.ratio);
            row["numerator"] = format_rational(r.numerator);
            row["denominator"] = format_rational(r.denominator);
            row["threshold"] = r.threshold;
            row["holds"] = r.holds;
        } else if (args.formula == "lemma2") {
            const long ones = ones_for(n);
            const ExactRational v = lemma2_mean(ones, n);
            row["ones"] = ones;
            row["mean"] = format_rational(v);
            row["mean_approx"] = to_double(v);
        } else if (args.formula == "t7") {
            const ExactRational eps = parse_rational_arg(args.eps, "--eps");
            const ExactRational v = t7_tail(n, eps);
            row["eps"] = format_rational(eps);
            row["tail"] = format_rational(v);
            row["tail_approx"] = to_double(v);
        } else if (args.formula == "t8") {
            const long ones = ones_for(n);
            const T8Moments m = t8_moments(ones, n);
            row["ones"] = ones;
            row["mean"] = format_rational(m.mean);
            row["mean_approx"] = to_double(m.mean);
            row["second_moment"] = format_rational(m.second);
            row["second_moment_approx"] = to_double(m.second);
        } else if (args.formula == "l2ratio") {
            const long ones = ones_for(n);
            const ExactRational v = lemma2_ratio(ones, n);
            row["ones"] = ones;
            row["ratio"] = format_rational(v);
            row["ratio_approx"] = to_double(v);
        } else {
            throw ValidationError("unknown formula '" + args.formula + "'");
        }
        report.rows.push_back(std::move(row));
    }

    report.runtime_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0).count();
    emit(report, g);
    return 0;
}

// ------------------------------------------------------------ experiment ---

struct ExperimentArgs {
    std::string ensemble_file;
    std::string stat = "am";
    std::string mode = "exhaustive";
    int n_min = -1;
    int n_max = -1;
    std::uint64_t samples = 1000;
    std::string inner = "exact";
    std::uint64_t inner_samples = 1000;
};

// E(AM) or the ensemble critical ratio, empirically and in closed form.
int cmd_experiment(const ExperimentArgs& args, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();

    std::ifstream in(args.ensemble_file, std::ios::binary);
    if (!in) throw ValidationError("cannot open ensemble file: " + args.ensemble_file);
    nlohmann::json spec_json;
    try {
        in >> spec_json;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("ensemble JSON parse error: ") + e.what());
    }
    const EnsembleSpec base = ensemble_from_json(spec_json);

    std::vector<EnsembleSpec> points;
    if (args.n_min >= 0 || args.n_max >= 0) {
        if (args.n_min < 0 || args.n_max < 0 || args.n_min > args.n_max)
            throw ValidationError("--n-min/--n-max must describe a nonempty range");
        for (int n = args.n_min; n <= args.n_max; ++n) {
            EnsembleSpec p = base;
            p.rows = n;
            p.cols = n;
            if (base.kind == EnsembleKind::FixedOnes && base.cells() > 0) {
                // rescale the one-count with the area, rounding up
                const ExactRational density =
                    make_rational(base.ones, base.cells()) *
                    ExactRational(static_cast<long>(n) * n);
                ExactCount q;
                mpz_cdiv_q(q.get_mpz_t(), density.get_num().get_mpz_t(),
                           density.get_den().get_mpz_t());
                p.ones = q.get_si();
            }
            points.push_back(p);
        }
    } else {
        points.push_back(base);
    }

    ExperimentReport report;
    report.command = "experiment";
    report.config = {{"ensemble", ensemble_to_json(base)},
                     {"stat", args.stat}, {"mode", args.mode},
                     {"inner", args.inner}};
    report.seed = g.seed;
    report.has_seed = true;
    report.deterministic = g.deterministic;

    if (args.stat != "am" && args.stat != "ratio")
        throw ValidationError("unknown --stat '" + args.stat + "', expected am or ratio");
    if (args.mode != "exhaustive" && args.mode != "sample")
        throw ValidationError("unknown --mode '" + args.mode +
                              "', expected exhaustive or sample");
    if (args.inner != "exact" && args.inner != "amm")
        throw ValidationError("unknown --inner '" + args.inner + "', expected exact or amm");

    std::uint64_t matrix_counter = 0; // distinct substream per sampled matrix

    for (const EnsembleSpec& spec : points) {
        OrderedJson row;
        row["rows"] = spec.rows;
        row["cols"] = spec.cols;
        row["kind"] = ensemble_to_json(spec)["kind"];
        if (spec.kind == EnsembleKind::FixedOnes) row["ones"] = spec.ones;
        row["stat"] = args.stat;
        row["mode"] = args.mode;

        // per-matrix AM: exact by default, or the mean of an AMM batch
        const StatFn am_stat = [&](const ZeroOneMatrix& a) -> ExactRational {
            if (args.inner == "exact") return ExactRational(am_dp(a));
            const SampleStats s = run_batch(a, Algorithm::AMM, args.inner_samples,
                                            g.seed ^ 0xA33u, g.workers);
            return s.mean();
        };
        const StatFn second_stat = [&](const ZeroOneMatrix& a) -> ExactRational {
            if (spec.kind == EnsembleKind::FixedOnes) {
                const ExactCount am = am_dp(a);
                return ExactRational(am * am); // Lemma 2 ratio is about AM moments
            }
            return ExactRational(exact_second_moment(a, Algorithm::AMM));
        };

        ExactRational value;
        double std_error = 0.0;
        bool have_se = false;
        if (args.mode == "exhaustive") {
            if (args.stat == "am") {
                value = exhaustive_expectation(spec, am_stat);
            } else {
                const ExactRational num = exhaustive_expectation(spec, second_stat);
                const ExactRational den = exhaustive_expectation(spec, am_stat);
                value = num / (den * den);
            }
        } else {
            if (args.stat == "am") {
                SampledExpectation se;
                // hand each point its own run of substreams
                se = sampled_expectation(spec, am_stat, args.samples,
                                         g.seed + (matrix_counter << 32));
                value = se.mean;
                std_error = se.std_error;
                have_se = true;
            } else {
                ExactRational num = 0, den = 0;
                for (std::uint64_t i = 0; i < args.samples; ++i) {
                    SplitMix64 rng = substream(g.seed + (matrix_counter << 32), i);
                    const ZeroOneMatrix a = sample(spec, rng);
                    num += second_stat(a);
                    den += am_stat(a);
                }
                num /= ExactRational(static_cast<long>(args.samples));
                den /= ExactRational(static_cast<long>(args.samples));
                value = num / (den * den);
            }
            ++matrix_counter;
        }
        row["value"] = format_rational(value);
        row["value_approx"] = to_double(value);
        if (have_se) row["std_error"] = std_error;

        // closed-form companion column, when one exists for this ensemble
        std::optional<ExactRational> closed;
        if (args.stat == "am") {
            if (spec.kind == EnsembleKind::FixedOnes) {
                if (spec.rows == spec.cols) closed = lemma2_mean(spec.ones, spec.rows);
            } else if (spec.kind == EnsembleKind::Exhaustive ||
                       spec.p == ExactRational(1, 2)) {
                if (spec.rows <= spec.cols) closed = t3_mean(spec.rows, spec.cols);
            }
        } else {
            if (spec.kind == EnsembleKind::FixedOnes) {
                if (spec.rows == spec.cols) closed = lemma2_ratio(spec.ones, spec.rows);
            } else if (spec.kind == EnsembleKind::Exhaustive ||
                       spec.p == ExactRational(1, 2)) {
                if (spec.rows <= spec.cols) {
                    const ExactRational mean = t3_mean(spec.rows, spec.cols);
                    closed = t4_second_moment(spec.rows, spec.cols) / (mean * mean);
                }
            }
        }
        if (closed) {
            row["closed_form"] = format_rational(*closed);
            row["closed_form_approx"] = to_double(*closed);
            const ExactRational abs_dev = value >= *closed ? value - *closed
                                                           : *closed - value;
            row["abs_dev"] = to_double(abs_dev);
            row["rel_dev"] = (*closed == 0) ? 0.0 : to_double(abs_dev / *closed);
        } else {
            row["closed_form"] = nullptr;
        }
        report.rows.push_back(std::move(row));
    }

    report.runtime_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0).count();
    emit(report, g);
    return 0;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const std::string& level_name, bool inject_fault,
               const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyLevel level;
    if (level_name == "quick") level = VerifyLevel::Quick;
    else if (level_name == "full") level = VerifyLevel::Full;
    else throw ValidationError("unknown --level '" + level_name + "'");

    detail::inject_am_dp_fault = inject_fault;
    const VerifyResult result = run_verification(level);
    detail::inject_am_dp_fault = false;

    ExperimentReport report;
    report.command = "verify";
    report.config = {{"level", level_name}};
    report.deterministic = g.deterministic;
    for (const auto& inv : result.invariants)
        report.rows.push_back({{"invariant", inv.name},
                               {"cases", inv.cases},
                               {"passed", inv.passed}});
    report.runtime_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0).count();

    if (g.format == "json") {
        OrderedJson j = report.to_json();
        j["passed"] = result.passed();
        OrderedJson fails = OrderedJson::array();
        for (const auto& f : result.failures)
            fails.push_back({{"invariant", f.invariant}, {"witness", f.witness}});
        j["failures"] = fails;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.render(g.format);
        for (const auto& f : result.failures)
            std::cerr << "FAIL " << f.invariant << ": " << f.witness << "\n";
    }
    return result.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and randomized counting of all matchings of bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "64-bit RNG seed")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads for sampling")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--deterministic", g.deterministic,
                 "omit timing so identical runs are byte-identical");

    // exact
    auto* exact = app.add_subcommand("exact", "exact counts for one matrix");
    std::string exact_file;
    std::string exact_what = "am";
    exact->add_option("matrix", exact_file, "matrix file (text or JSON, - for stdin)")
        ->required();
    exact->add_option("--what", exact_what, "quantity to compute")
        ->check(CLI::IsMember({"am", "per", "vector", "corollary3"}))
        ->capture_default_str();

    // estimate
    auto* estimate = app.add_subcommand("estimate", "randomized estimation run");
    std::string est_file;
    std::string est_alg = "amm";
    std::uint64_t est_samples = 10000;
    estimate->add_option("matrix", est_file, "matrix file (text or JSON, - for stdin)")
        ->required();
    estimate->add_option("--alg", est_alg, "estimator")
        ->check(CLI::IsMember({"rm", "amm"}))
        ->capture_default_str();
    estimate->add_option("--samples", est_samples, "number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "closed-form moment tables");
    ClosedFormArgs cf;
    closed->add_option("--formula", cf.formula, "which formula")
        ->check(CLI::IsMember({"t3", "t4", "t5", "t6", "lemma2", "t7", "t8", "l2ratio"}))
        ->required();
    closed->add_option("--n", cf.n, "single n");
    closed->add_option("--n-min", cf.n_min, "range start");
    closed->add_option("--n-max", cf.n_max, "range end");
    closed->add_option("--m", cf.m, "row count for t3/t4 (default n)");
    closed->add_option("--ones", cf.ones, "one-count for lemma2/t8/l2ratio");
    closed->add_option("--ones-frac", cf.ones_frac,
                       "rational density f: use ceil(f*n^2) ones per n");
    closed->add_option("--eps", cf.eps, "rational epsilon for t7")
        ->capture_default_str();

    // experiment
    auto* experiment = app.add_subcommand("experiment",
                                          "ensemble statistics vs closed forms");
    ExperimentArgs ex;
    experiment->add_option("--ensemble", ex.ensemble_file, "EnsembleSpec JSON file")
        ->required();
    experiment->add_option("--stat", ex.stat, "statistic: am or ratio")
        ->check(CLI::IsMember({"am", "ratio"}))
        ->capture_default_str();
    experiment->add_option("--mode", ex.mode, "exhaustive or sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}))
        ->capture_default_str();
    experiment->add_option("--n-min", ex.n_min, "sweep: square size start");
    experiment->add_option("--n-max", ex.n_max, "sweep: square size end");
    experiment->add_option("--samples", ex.samples, "matrices per point (sample mode)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    experiment->add_option("--inner", ex.inner,
                           "per-matrix AM: exact (am_dp) or amm (batch mean)")
        ->check(CLI::IsMember({"exact", "amm"}))
        ->capture_default_str();
    experiment->add_option("--inner-samples", ex.inner_samples,
                           "AMM samples per matrix when --inner amm")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
    std::string verify_level = "quick";
    bool inject_fault = false;
    verify->add_option("--level", verify_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are validation errors
    }

    try {
        if (exact->parsed()) return cmd_exact(exact_file, exact_what, g);
        if (estimate->parsed()) return cmd_estimate(est_file, est_alg, est_samples, g);
        if (closed->parsed()) return cmd_closed_form(cf, g);
        if (experiment->parsed()) return cmd_experiment(ex, g);
        if (verify->parsed()) return cmd_verify(verify_level, inject_fault, g);
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const UndefinedRatioError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
