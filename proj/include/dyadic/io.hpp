#pragma once

#include "dyadic/norm_lab.hpp"
#include "dyadic/sublinear.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace dyadic::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "0.1.0";

using AnyFunction = std::variant<ExactFunction, FloatFunction>;
using AnySpectrum = std::variant<HaarSpectrum<Exact>, HaarSpectrum<double>>;

// Scalars: rational mode uses strings ("3", "-1/2", "1/4+1/2*sqrt2"), float64 mode JSON numbers.
template <Scalar T>
[[nodiscard]] Json scalar_to_json(const T& value);
template <Scalar T>
[[nodiscard]] T scalar_from_json(const Json& j);
template <>
Json scalar_to_json<Exact>(const Exact& value);
template <>
Json scalar_to_json<double>(const double& value);
template <>
Exact scalar_from_json<Exact>(const Json& j);
template <>
double scalar_from_json<double>(const Json& j);

// {"depth": N, "mode": "rational" | "float64", "values": [...]}
template <Scalar T>
[[nodiscard]] Json to_json(const StepFunction<T>& f);
[[nodiscard]] AnyFunction function_from_json(const Json& j);
// A rational file read in float64 mode is converted; the reverse is a parse error.
template <Scalar T>
[[nodiscard]] StepFunction<T> function_from_json_as(const Json& j);

// {"depth": N, "mode": ..., "mean": v, "coeffs": [{"level","pos","value"}]}, nonzero coefficients only.
template <Scalar T>
[[nodiscard]] Json to_json(const HaarSpectrum<T>& s);
[[nodiscard]] AnySpectrum spectrum_from_json(const Json& j);

// {"height": v, "good": <function>, "parts": [{"interval": {"level","pos"}, "b": <function>}]}
template <Scalar T>
[[nodiscard]] Json to_json(const CZDecomposition<T>& cz);

// {"default": v, "entries": [{"level","pos","value"}]}
template <Scalar T>
[[nodiscard]] Json to_json(const SymbolSequence<T>& eps);
[[nodiscard]] SymbolSequence<double> symbol_from_json(const Json& j);

[[nodiscard]] Json to_json(const lab::ExperimentReport& report);
// "trial,ratio" rows; skipped trials carry the word "skipped".
[[nodiscard]] std::string trials_csv(const lab::ExperimentReport& report);

[[nodiscard]] Json interval_to_json(const DyadicInterval& I);
[[nodiscard]] DyadicInterval interval_from_json(const Json& j);

// Two-space indented JSON followed by a newline.
[[nodiscard]] std::string dump(const Json& j);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dyadic::io
