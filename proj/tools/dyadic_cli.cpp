#include "dyadic/io.hpp"
#include "dyadic/norm_lab.hpp"
#include "dyadic/sublinear.hpp"
#include "dyadic/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <thread>

using namespace dyadic;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

// Raised for flag combinations CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out) {
    const auto text = io::dump(j);
    if (!out.empty()) io::write_text_file(out, text);
    std::cout << text;
}

ScalarMode parse_mode(const std::string& s) {
    if (s == "rational") return ScalarMode::rational;
    if (s == "float64") return ScalarMode::float64;
    throw UsageError("--mode must be rational or float64");
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    int m = 2;
    int depth = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string mode = "rational";
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    verify::Config c;
    c.suite = verify::parse_suite(a.suite);
    c.m = a.m;
    c.depth = a.depth;
    c.trials = a.trials;
    c.seed = a.seed;
    c.mode = parse_mode(a.mode);
    const auto result = verify::run_suite(c);
    Json j{{"suite", verify::to_string(c.suite)},
           {"trials", result.trials},
           {"failures", result.failures},
           {"seed", c.seed},
           {"mode", to_string(c.mode)},
           {"m", c.m},
           {"depth", c.depth}};
    if (result.first_failure) j["first_failure"] = *result.first_failure;
    emit(j, a.out);
    return result.failures == 0 ? kExitOk : kExitAssertion;
}

// transform ----------------------------------------------------------------

int run_analyze(const std::string& file, const std::string& out) {
    const auto f = io::function_from_json(io::read_json_file(file));
    std::visit([&](const auto& g) { emit(io::to_json(analyze(g)), out); }, f);
    return kExitOk;
}

int run_synthesize(const std::string& file, const std::string& out) {
    const auto s = io::spectrum_from_json(io::read_json_file(file));
    std::visit([&](const auto& g) { emit(io::to_json(synthesize(g)), out); }, s);
    return kExitOk;
}

// norms --------------------------------------------------------------------

struct NormsArgs {
    std::string file;
    std::string p = "1,2,inf";
    bool maximal = false;
    bool square = false;
    std::string out;
};

template <Scalar T>
int norms_of(const StepFunction<T>& f, const NormsArgs& a) {
    std::vector<Exponent> ps;
    std::string rest = a.p;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        ps.push_back(Exponent::parse(rest.substr(0, comma)));
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    }
    Json lp = Json::object();
    Json weak = Json::object();
    for (const auto& p : ps) {
        lp[p.to_string()] = lp_norm(f, p);
        weak[p.to_string()] = weak_lp_quasinorm(f, p);
    }
    const T bmo2_sq = bmo2_squared(f);
    const T haar_sq = bmo2_via_haar_squared(f);
    Json j{{"depth", f.depth()},
           {"mode", to_string(f.mode())},
           {"lp", std::move(lp)},
           {"weak_lp", std::move(weak)},
           {"bmo1", to_double(bmo1(f))},
           {"bmo2", std::sqrt(to_double(bmo2_sq))},
           {"bmo2_haar", std::sqrt(to_double(haar_sq))},
           {"bstar", bstar_seminorm(f)}};
    if constexpr (ScalarTraits<T>::exact) {
        j["exact"] = Json{{"bmo1", io::scalar_to_json(bmo1(f))},
                          {"bmo2_squared", io::scalar_to_json(bmo2_sq)},
                          {"bmo2_haar_squared", io::scalar_to_json(haar_sq)},
                          {"bstar_squared", io::scalar_to_json(bstar_squared(f))}};
    }
    if (a.maximal) j["maximal"] = io::to_json(maximal(f));
    if (a.square) {
        j["square"] = io::to_json(square_function(f));
        j["square_squared"] = io::to_json(square_function_squared(f));
    }
    emit(j, a.out);
    bool agree = false;
    if constexpr (ScalarTraits<T>::exact) {
        agree = bmo2_sq == haar_sq;
    } else {
        agree = std::fabs(bmo2_sq - haar_sq) <= 1e-9 * std::max(1.0, std::fabs(bmo2_sq));
    }
    if (!agree) std::cerr << "error: BMO_2 and its Haar form disagree\n";
    return agree ? kExitOk : kExitAssertion;
}

int run_norms(const NormsArgs& a) {
    const auto f = io::function_from_json(io::read_json_file(a.file));
    return std::visit([&](const auto& g) { return norms_of(g, a); }, f);
}

// czd ----------------------------------------------------------------------

int run_czd(const std::string& file, const std::string& height, const std::string& out) {
    const auto f = io::function_from_json(io::read_json_file(file));
    return std::visit(
        [&](const auto& g) {
            using T = typename std::decay_t<decltype(g)>::value_type;
            T lambda;
            if constexpr (ScalarTraits<T>::exact) {
                lambda = Exact::parse(height);
            } else {
                lambda = Exact::parse(height).to_double();
            }
            emit(io::to_json(cz_decompose(g, lambda)), out);
            return kExitOk;
        },
        f);
}

// estimate / weak ----------------------------------------------------------

struct EstimateArgs {
    std::string op;
    std::string alpha;
    std::string p;
    std::string b;
    std::string symbol;
    std::optional<double> symbol_const;
    std::optional<std::size_t> slot;
    std::optional<int> depth;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::string sampler = "random-step";
    std::optional<int> level_cap;
    unsigned threads = 1;
    std::string out = "report.json";
    std::string dump_trials;
};

int run_estimate(const EstimateArgs& a, bool weak) {
    lab::OperatorDescriptor d;
    d.kind = lab::parse_operator_kind(a.op);
    const bool uses_b = d.kind == lab::OperatorKind::pi_paraproduct || d.kind == lab::OperatorKind::commutator;
    const bool uses_symbol =
        d.kind == lab::OperatorKind::multilinear_multiplier || d.kind == lab::OperatorKind::commutator;
    if (!a.b.empty() && !uses_b) throw UsageError("--b only applies to pi and commutator");
    if ((!a.symbol.empty() || a.symbol_const) && !uses_symbol) {
        throw UsageError("--symbol/--symbol-const only apply to mult and commutator");
    }
    if (!a.symbol.empty() && a.symbol_const) throw UsageError("give --symbol or --symbol-const, not both");
    if (a.slot && d.kind != lab::OperatorKind::commutator) throw UsageError("--slot only applies to commutator");

    d.alpha = AlphaVector::parse(!a.alpha.empty() ? a.alpha : d.kind == lab::OperatorKind::pi_paraproduct ? "1" : "01");
    d.slot = a.slot;
    if (uses_symbol) {
        d.symbol = !a.symbol.empty() ? io::symbol_from_json(io::read_json_file(a.symbol))
                                     : SymbolSequence<double>(a.symbol_const.value_or(1.0));
    }

    int depth = a.depth.value_or(6);
    if (!a.b.empty()) {
        auto b = io::function_from_json_as<double>(io::read_json_file(a.b));
        if (!a.depth) depth = b.depth();
        if (b.depth() > depth) throw UsageError("b is finer than --depth");
        d.b = refine(b, depth);
    }

    const auto exps = !a.p.empty() ? ExponentTuple::parse(a.p) : ExponentTuple::uniform(d.arity(), Rational(2));
    lab::SamplerSpec spec{lab::parse_sampler_family(a.sampler), depth, a.level_cap, a.seed};
    lab::RunOptions options{a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads};

    const auto report = weak ? lab::weak_type_ratio(d, exps, spec, a.trials, options)
                             : lab::estimate_operator_norm(d, exps, spec, a.trials, options);
    emit(io::to_json(report), a.out);
    if (!a.dump_trials.empty()) io::write_text_file(a.dump_trials, io::trials_csv(report));
    if (report.extremal_lower_bound && report.best_ratio < *report.extremal_lower_bound - 1e-9) {
        std::cerr << "error: best ratio below the extremal lower bound\n";
        return kExitAssertion;
    }
    return kExitOk;
}

void add_estimate_options(CLI::App* cmd, EstimateArgs& a) {
    cmd->add_option("--op", a.op, "para | pi | mult | commutator")->required();
    cmd->add_option("--alpha", a.alpha, "alpha as a 0/1 string (default 01, or 1 for pi)");
    cmd->add_option("--p", a.p, "exponents p_1,...,p_m (default 2 in every slot)");
    cmd->add_option("--b", a.b, "StepFunction JSON for b");
    cmd->add_option("--symbol", a.symbol, "SymbolSequence JSON");
    cmd->add_option("--symbol-const", a.symbol_const, "constant symbol value (default 1)");
    cmd->add_option("--slot", a.slot, "commutator slot, 1-based");
    cmd->add_option("--depth", a.depth, "grid depth (default: depth of b, else 6)");
    cmd->add_option("--trials", a.trials, "random trials")->capture_default_str();
    cmd->add_option("--seed", a.seed, "seed")->capture_default_str();
    cmd->add_option("--sampler", a.sampler, "random-step | rademacher-haar | indicator | extremal")
        ->capture_default_str();
    cmd->add_option("--level-cap", a.level_cap, "finest level drawn by rademacher-haar and indicator");
    cmd->add_option("--threads", a.threads, "worker threads, 0 = all cores")->capture_default_str();
    cmd->add_option("--out", a.out, "report path")->capture_default_str();
    cmd->add_option("--dump-trials", a.dump_trials, "write per-trial ratios as CSV");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyadic paraproducts, Haar multipliers and norm experiments"};
    app.require_subcommand(1);
    std::function<int()> action;

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run an exact identity suite");
    verify_cmd->add_option("suite", va.suite,
                           "decomposition | localized | adjoint | transpose | multiplier-coeff | commutator-constant")
        ->required();
    verify_cmd->add_option("--m", va.m, "arity")->capture_default_str();
    verify_cmd->add_option("--depth", va.depth, "grid depth")->capture_default_str();
    verify_cmd->add_option("--trials", va.trials, "random trials")->capture_default_str();
    verify_cmd->add_option("--seed", va.seed, "seed")->capture_default_str();
    verify_cmd->add_option("--mode", va.mode, "rational | float64")->capture_default_str();
    verify_cmd->add_option("--out", va.out, "also write the summary here");
    verify_cmd->callback([&] { action = [&] { return run_verify(va); }; });

    std::string t_file, t_out;
    auto* transform_cmd = app.add_subcommand("transform", "Haar analysis and synthesis");
    transform_cmd->require_subcommand(1);
    auto* analyze_cmd = transform_cmd->add_subcommand("analyze", "StepFunction JSON -> HaarSpectrum JSON");
    auto* synth_cmd = transform_cmd->add_subcommand("synthesize", "HaarSpectrum JSON -> StepFunction JSON");
    for (auto* c : {analyze_cmd, synth_cmd}) {
        c->add_option("file", t_file, "input JSON")->required();
        c->add_option("--out", t_out, "also write the result here");
    }
    analyze_cmd->callback([&] { action = [&] { return run_analyze(t_file, t_out); }; });
    synth_cmd->callback([&] { action = [&] { return run_synthesize(t_file, t_out); }; });

    NormsArgs na;
    auto* norms_cmd = app.add_subcommand("norms", "L^p, weak L^p, BMO and b_* functionals of a function");
    norms_cmd->add_option("file", na.file, "StepFunction JSON")->required();
    norms_cmd->add_option("--p", na.p, "comma-separated exponents")->capture_default_str();
    norms_cmd->add_flag("--maximal", na.maximal, "include the dyadic maximal function");
    norms_cmd->add_flag("--square", na.square, "include the square function");
    norms_cmd->add_option("--out", na.out, "also write the result here");
    norms_cmd->callback([&] { action = [&] { return run_norms(na); }; });

    std::string c_file, c_height, c_out;
    auto* czd_cmd = app.add_subcommand("czd", "dyadic Calderon-Zygmund decomposition");
    czd_cmd->add_option("file", c_file, "StepFunction JSON")->required();
    czd_cmd->add_option("--height", c_height, "height lambda > 0, e.g. 3/2")->required();
    czd_cmd->add_option("--out", c_out, "also write the result here");
    czd_cmd->callback([&] { action = [&] { return run_czd(c_file, c_height, c_out); }; });

    EstimateArgs ea, wa;
    auto* estimate_cmd = app.add_subcommand("estimate", "randomized search for an operator norm ratio");
    add_estimate_options(estimate_cmd, ea);
    estimate_cmd->callback([&] { action = [&] { return run_estimate(ea, false); }; });
    auto* weak_cmd = app.add_subcommand("weak", "weak-type ratio search (some p_j = 1)");
    add_estimate_options(weak_cmd, wa);
    weak_cmd->callback([&] { action = [&] { return run_estimate(wa, true); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action();
    } catch (const DyadicError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
