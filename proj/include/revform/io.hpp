// JSON forms of the library's values. Objects use nlohmann::json, whose
// keys are sorted, so equal values serialize to identical bytes.
#pragma once

#include "revform/classic.hpp"
#include "revform/decide.hpp"
#include "revform/morphism.hpp"
#include "revform/oracle.hpp"
#include "revform/zimin.hpp"

#include <json.hpp>

namespace revform::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Plain words are glyph strings; words with product letters are arrays of
/// "a,1" strings.
json word_json(const Word& w);
/// Inverse of word_json. Throws std::invalid_argument on malformed input.
Word word_from_json(const json& j);

json rational_json(const Rational& r);  // "3/2", or "2" for integers
Rational rational_from_string(const std::string& s);
json bigint_json(const BigInt& v);      // number when it fits in 64 bits, else decimal string

json morphism_json(const ConcreteMorphism& h);
json morphism_json(const SymbolicMorphism& h);
json omega_json(const OmegaWordSpec& spec);
json stats_json(const OracleStats& s);  // node counts only; timings would break byte-identical output
json report_json(const OracleReport& r);
json generation_json(const GenerationResult& r);
json chain_json(const ReductionChain& chain);
json zimin_stats_json(const ZiminStats& s);
json certificate_json(const Certificate& c);
json verdict_json(const Verdict& v);
json conjecture2_json(const Conjecture2Report& r);

template <class M>
json search_json(const SearchResult<M>& r) {
    json j{{"status", to_string(r.status)}, {"steps", r.steps}, {"image_bound", r.image_bound}};
    j["morphism"] = r.morphism ? morphism_json(*r.morphism) : json(nullptr);
    return j;
}

/// Adds "schema_version" and dumps; indent < 0 means compact.
std::string dump(json j, int indent = -1);

}  // namespace revform::io
