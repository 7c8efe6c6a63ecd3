#include "dyadic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dyadic::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw DyadicError(ErrorKind::parse_error, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) fail("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

template <class I>
I integer_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) fail(std::string("field '") + name + "' must be an integer");
    return v.get<I>();
}

ScalarMode mode_of(const Json& j) {
    auto it = j.find("mode");
    if (it == j.end()) {
        // Without an explicit mode, strings mean rational and numbers mean float64.
        const Json& values = j.contains("values") ? j["values"] : Json();
        if (values.is_array() && !values.empty() && values.front().is_number()) return ScalarMode::float64;
        return ScalarMode::rational;
    }
    if (!it->is_string()) fail("'mode' must be a string");
    const auto s = it->get<std::string>();
    if (s == "rational") return ScalarMode::rational;
    if (s == "float64") return ScalarMode::float64;
    fail("unknown mode '" + s + "'");
}

template <Scalar T>
StepFunction<T> function_values(const Json& j) {
    const int depth = integer_field<int>(j, "depth");
    const Json& values = field(j, "values");
    if (!values.is_array()) fail("'values' must be an array");
    std::vector<T> v;
    v.reserve(values.size());
    for (const auto& x : values) v.push_back(scalar_from_json<T>(x));
    return StepFunction<T>(depth, std::move(v));
}

template <Scalar T>
HaarSpectrum<T> spectrum_values(const Json& j) {
    const int depth = integer_field<int>(j, "depth");
    HaarSpectrum<T> s(depth);
    s.set_mean(scalar_from_json<T>(field(j, "mean")));
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) fail("'coeffs' must be an array");
    for (const auto& c : coeffs) s.set_coeff(interval_from_json(c), scalar_from_json<T>(field(c, "value")));
    return s;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

template <>
Json scalar_to_json<Exact>(const Exact& value) {
    return value.to_string();
}

template <>
Json scalar_to_json<double>(const double& value) {
    return value;
}

template <>
Exact scalar_from_json<Exact>(const Json& j) {
    if (j.is_string()) return Exact::parse(j.get<std::string>());
    if (j.is_number_integer()) return Exact(j.get<long>());
    fail("rational values must be strings such as \"3/4\"");
}

template <>
double scalar_from_json<double>(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return Exact::parse(j.get<std::string>()).to_double();
    fail("expected a number");
}

template <Scalar T>
Json to_json(const StepFunction<T>& f) {
    Json values = Json::array();
    for (const auto& v : f.values()) values.push_back(scalar_to_json(v));
    return Json{{"depth", f.depth()}, {"mode", to_string(f.mode())}, {"values", std::move(values)}};
}

AnyFunction function_from_json(const Json& j) {
    if (mode_of(j) == ScalarMode::rational) return function_values<Exact>(j);
    return function_values<double>(j);
}

template <Scalar T>
StepFunction<T> function_from_json_as(const Json& j) {
    const auto mode = mode_of(j);
    if constexpr (std::is_same_v<T, Exact>) {
        if (mode != ScalarMode::rational) fail("a rational function is required here");
    }
    return function_values<T>(j);
}

template <Scalar T>
Json to_json(const HaarSpectrum<T>& s) {
    Json coeffs = Json::array();
    for (const auto& I : interval_family(s.depth())) {
        const T& c = s.coeff(I);
        if (ScalarTraits<T>::is_zero(c)) continue;
        Json entry = interval_to_json(I);
        entry["value"] = scalar_to_json(c);
        coeffs.push_back(std::move(entry));
    }
    return Json{{"depth", s.depth()},
                {"mode", to_string(ScalarTraits<T>::mode)},
                {"mean", scalar_to_json(s.mean())},
                {"coeffs", std::move(coeffs)}};
}

AnySpectrum spectrum_from_json(const Json& j) {
    if (mode_of(j) == ScalarMode::rational) return spectrum_values<Exact>(j);
    return spectrum_values<double>(j);
}

template <Scalar T>
Json to_json(const CZDecomposition<T>& cz) {
    Json parts = Json::array();
    for (const auto& part : cz.parts) parts.push_back(Json{{"interval", interval_to_json(part.interval)}, {"b", to_json(part.bad)}});
    return Json{{"height", scalar_to_json(cz.height)}, {"good", to_json(cz.good)}, {"parts", std::move(parts)}};
}

template <Scalar T>
Json to_json(const SymbolSequence<T>& eps) {
    Json entries = Json::array();
    for (const auto& [I, v] : eps.entries()) {
        Json entry = interval_to_json(I);
        entry["value"] = scalar_to_json(v);
        entries.push_back(std::move(entry));
    }
    return Json{{"default", scalar_to_json(eps.default_value())}, {"entries", std::move(entries)}};
}

SymbolSequence<double> symbol_from_json(const Json& j) {
    SymbolSequence<double> eps(scalar_from_json<double>(field(j, "default")));
    if (j.contains("entries")) {
        const Json& entries = j["entries"];
        if (!entries.is_array()) fail("'entries' must be an array");
        for (const auto& e : entries) eps.set(interval_from_json(e), scalar_from_json<double>(field(e, "value")));
    }
    return eps;
}

Json interval_to_json(const DyadicInterval& I) { return Json{{"level", I.level}, {"pos", I.position}}; }

DyadicInterval interval_from_json(const Json& j) {
    const int level = integer_field<int>(j, "level");
    const auto pos = integer_field<std::uint64_t>(j, "pos");
    return DyadicInterval::make(level, pos);
}

Json to_json(const lab::ExperimentReport& report) {
    const auto& d = report.descriptor;
    Json descriptor{{"kind", lab::to_string(d.kind)}, {"alpha", d.alpha.to_string()}};
    descriptor["slot"] = d.slot ? Json(*d.slot) : Json(nullptr);
    descriptor["symbol"] = d.symbol ? to_json(*d.symbol) : Json(nullptr);
    descriptor["b"] = d.b ? to_json(*d.b) : Json(nullptr);

    Json p = Json::array();
    for (const auto& x : report.exponents.p()) p.push_back(x.get_str());

    Json sampler{{"family", lab::to_string(report.sampler.family)}};
    sampler["level_cap"] = report.sampler.level_cap ? Json(*report.sampler.level_cap) : Json(nullptr);

    Json j{{"artifact_version", kArtifactVersion},
           {"grid", Json{{"depth", report.sampler.depth}}},
           {"descriptor", std::move(descriptor)},
           {"exponents", Json{{"p", std::move(p)}, {"r", report.exponents.r().get_str()}}},
           {"sampler", std::move(sampler)},
           {"trials", report.trials},
           {"extremal_trials", report.extremal_trials},
           {"best_ratio", report.best_ratio}};
    j["best_trial"] = report.best_trial ? Json(*report.best_trial) : Json(nullptr);
    j["extremal_lower_bound"] = report.extremal_lower_bound ? Json(*report.extremal_lower_bound) : Json(nullptr);
    j["weak_type"] = report.weak_type;
    if (report.b_norms) {
        j["b_norms"] = Json{{"bmo1", report.b_norms->bmo1}, {"bmo2", report.b_norms->bmo2}, {"bstar", report.b_norms->bstar}};
    } else {
        j["b_norms"] = nullptr;
    }
    j["seed"] = report.sampler.seed;
    j["mode"] = "float64";
    return j;
}

std::string trials_csv(const lab::ExperimentReport& report) {
    std::string out = "trial,ratio\n";
    for (std::size_t i = 0; i < report.trial_ratios.size(); ++i) {
        out += std::to_string(i) + ',';
        out += report.trial_ratios[i] ? format_double(*report.trial_ratios[i]) : "skipped";
        out += '\n';
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write '" + path.string() + "'");
    out << text;
    if (!out) fail("write to '" + path.string() + "' failed");
}

#define DYADIC_INSTANTIATE(T)                                              \
    template Json to_json<T>(const StepFunction<T>&);                      \
    template StepFunction<T> function_from_json_as<T>(const Json&);        \
    template Json to_json<T>(const HaarSpectrum<T>&);                      \
    template Json to_json<T>(const CZDecomposition<T>&);                   \
    template Json to_json<T>(const SymbolSequence<T>&);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic::io
