#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "planar_turan/certificate.hpp"
#include "planar_turan/constructions.hpp"
#include "planar_turan/lemma_props.hpp"

namespace planar_turan {

using nlohmann::json;

// Rationals serialize as {"num": .., "den": ..}.
json rational_to_json(Rational r);
json bounds_to_json(const BoundSpec& b);

// The graph travels as graph6. A "bounds" block is attached when (h,k) is
// in range.
json certificate_to_json(const Certificate& c);
// Throws ParseError on malformed JSON or a missing/ill-typed field.
Certificate certificate_from_json(const json& j);
Certificate certificate_from_text(std::string_view text);

// Decodes, recomputes every derived field and compares any stored bounds
// block with a fresh evaluation.
Verification verify_certificate_json(const json& j);

json lemma_suite_to_json(const LemmaSuiteResult& r, const LemmaSuiteOptions& options);

}  // namespace planar_turan
