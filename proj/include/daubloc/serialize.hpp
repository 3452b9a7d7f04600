#pragma once

// JSON and CSV encodings of the library's values. Every double is written
// with 17 significant digits, so identical values always produce identical
// bytes and a parse returns the exact double.

#include <string>
#include <string_view>

#include <json.hpp>

#include "daubloc/cantor_analysis.hpp"
#include "daubloc/experiments.hpp"
#include "daubloc/radial_sets.hpp"
#include "daubloc/spectrum.hpp"

namespace daubloc::io {

using Json = nlohmann::ordered_json;

/// printf("%.17g"); empty for a non-finite value.
std::string format_number(double x);

/// Indented JSON with numbers as in format_number (non-finite as null) and a trailing newline.
std::string dump(const Json& value);

Json to_json(const IntervalUnion& u);
Json to_json(const CantorSpec& spec);
Json to_json(const Spectrum& s);
Json to_json(const NormEstimate& e);
Json to_json(const TraceCheck& t);
Json to_json(const RatioStats& stats);
Json to_json(const RingReport& report);
Json to_json(const CombReport& report);
Json to_json(const CantorReport& report);

/// Inverse encodings. Throw ValidationError on a malformed document.
IntervalUnion interval_union_from_json(const Json& j);
CantorSpec cantor_spec_from_json(const Json& j);
Spectrum spectrum_from_json(const Json& j);

inline constexpr std::string_view kSpectrumCsvHeader = "k,lambda";
inline constexpr std::string_view kRingCsvHeader =
    "piR2,skipped,norm,argmax_k,stirling_lower,stirling_upper,analytic_lower,analytic_upper,asym_residual,"
    "argmax_adjacent,note";
inline constexpr std::string_view kCombCsvHeader = "s,lambda0,norm,lower,upper,argmax_k";
inline constexpr std::string_view kCantorCsvHeader =
    "n,piR2,kind,lambda0,lambda0_direct,lambda0_recursive,norm,argmax_k,tail_bound,ratio_norm,ratio_lambda0,"
    "in_range,fup_product";

/// Header line then one line per row; fields that do not apply are left empty.
std::string to_csv(const Spectrum& s);
std::string to_csv(const RingReport& report);
std::string to_csv(const CombReport& report);
std::string to_csv(const CantorReport& report);

}  // namespace daubloc::io
