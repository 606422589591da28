#pragma once

#include <string>

#include <json.hpp>

#include "hdx/cohomology.hpp"
#include "hdx/complex.hpp"
#include "hdx/criterion.hpp"
#include "hdx/fat.hpp"
#include "hdx/generators.hpp"
#include "hdx/minimize.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hdx-report/1";
inline constexpr const char* kVersion = "0.1.0";

/// {"num": n, "den": d}; integers that do not fit in int64 become strings.
Json to_json(const Rat& r);
/// A rational, or the string "infinity".
Json to_json(const ExtRat& r);
Json to_json(const Complex& X, const Face& f);
Json to_json(const Complex& X, const Cochain& c);

Json info_json(const Complex& X);
Json to_json(const Complex& X, const ExpansionReport& r);
Json to_json(const Complex& X, const CosystoleReport& r);
Json to_json(const Complex& X, const MinimizeTrace& t);
Json to_json(const Complex& X, const FatProfile& p);
Json to_json(const SeepReport& r);
Json to_json(const UpsilonReport& r);
Json to_json(const Complex& X, const RegularityResult& r);
Json to_json(const SpectralReport& r);
Json to_json(const LambdaReport& r);
Json to_json(const MixingReport& r);
Json to_json(const Complex& X, const MixingScanReport& r);
Json to_json(const Complex& X, const AlphaReport& r);
Json to_json(const ConstantsReport& c);
Json to_json(const Complex& X, const CriterionReport& r);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

/// Flattens a JSON document to "path<TAB>value" lines.
std::string to_tsv(const Json& j);

}  // namespace hdx
