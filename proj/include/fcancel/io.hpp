#pragma once

// JSON encodings. Rationals and big integers are always strings; reals carry
// their precision in a "digits" field.

#include <json.hpp>

#include <string>

#include "fcancel/certificate.hpp"
#include "fcancel/constcoef.hpp"
#include "fcancel/fuchs.hpp"
#include "fcancel/hyper.hpp"
#include "fcancel/matfun.hpp"

namespace fcancel {

using Json = nlohmann::ordered_json;

/// Throws Parse with the offending path on malformed input.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// Accepts "p/q" strings and JSON integers.
Rat rat_from_json(const Json& j);
Nat nat_from_json(const Json& j);

Json to_json(const Rat& x);
Json to_json(const ReportedReal& x);
ReportedReal reported_from_json(const Json& j);

Json to_json(const CancellationCertificate& c);
CancellationCertificate certificate_from_json(const Json& j);

Json to_json(const UniPoly& f);
Json to_json(const MatQ& a);
/// Array of rows, or an object with a "matrix" member.
MatQ matrix_from_json(const Json& j);

Json to_json(const SpectralData& sd);

Json to_json(const FuchsianSystem& sys);
FuchsianSystem system_from_json(const Json& j);

/// {"alpha": [...], "beta": [...]}
HyperParams params_from_json(const Json& j);
Json to_json(const HyperParams& p);
Json to_json(const SeriesQ& f);
Json to_json(const SpectralForms& f);
Json to_json(const Lemma11Report& r);
Json to_json(const GClassEstimate& g);
Json to_json(const WronskianReport& w);
Json to_json(const ConditionsReport& c);
Json to_json(const Theorem6Report& r);

}  // namespace fcancel
