#include "revform/io.hpp"

#include <stdexcept>

namespace revform::io {

json word_json(const Word& w) {
    if (std::none_of(w.begin(), w.end(), is_pair_letter)) return w.str();
    json arr = json::array();
    for (auto a : w) arr.push_back(letter_str(a));
    return arr;
}

namespace {

Letter plain_letter(const std::string& s) {
    if (s.size() != 1) throw std::invalid_argument("word JSON: letter '" + s + "' is not a single glyph");
    return static_cast<unsigned char>(s[0]);
}

}  // namespace

Word word_from_json(const json& j) {
    if (j.is_string()) return Word::from_string(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("word JSON: expected a string or an array");
    std::vector<Letter> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("word JSON: array entries must be strings");
        const auto s = e.get<std::string>();
        const auto sep = s.find(',');
        if (sep == std::string::npos)
            out.push_back(plain_letter(s));
        else
            out.push_back(make_pair_letter(plain_letter(s.substr(0, sep)), plain_letter(s.substr(sep + 1))));
    }
    return Word(std::move(out));
}

json rational_json(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_string(const std::string& s) {
    auto parse_int = [&](const std::string& t) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) throw std::invalid_argument("bad rational '" + s + "'");
        return static_cast<std::int64_t>(v);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    const auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("bad rational '" + s + "': zero denominator");
    return Rational(parse_int(s.substr(0, slash)), den);
}

json bigint_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

json morphism_json(const ConcreteMorphism& h) {
    json j = json::object();
    for (const auto& [v, img] : h) j[v] = word_json(img);
    return j;
}

json morphism_json(const SymbolicMorphism& h) {
    json j = json::object();
    for (const auto& [v, img] : h) j[v] = img.str();
    return j;
}

json omega_json(const OmegaWordSpec& spec) {
    switch (spec.kind) {
        case OmegaWordSpec::Kind::periodic:
            return {{"kind", "periodic"}, {"period", word_json(spec.period)}};
        case OmegaWordSpec::Kind::direct_product:
            return {{"kind", "direct_product"}, {"left", omega_json(*spec.left)}, {"right", omega_json(*spec.right)}};
        case OmegaWordSpec::Kind::generated: {
            json j{{"kind", "generated"}, {"alphabet_size", spec.alphabet_size}, {"prefix", word_json(spec.prefix)}};
            if (spec.forbidden_exponent) j["forbidden_exponent"] = rational_json(*spec.forbidden_exponent);
            if (!spec.avoids.empty()) j["avoids"] = spec.avoids;
            return j;
        }
    }
    throw std::logic_error("omega_json: bad kind");
}

json stats_json(const OracleStats& s) { return {{"nodes", s.nodes}}; }

json report_json(const OracleReport& r) {
    json j{{"mode", to_string(r.mode)}, {"stats", stats_json(r.stats)}};
    switch (r.mode) {
        case OracleReport::Mode::avoider_found:
            j["word"] = r.word ? word_json(*r.word) : json(nullptr);
            j["alphabet_size"] = r.alphabet_size;
            break;
        case OracleReport::Mode::all_encounter:
            j["length"] = r.length;
            j["alphabet_size"] = r.alphabet_size;
            break;
        case OracleReport::Mode::witness_ok:
            j["prefix_len"] = r.prefix_len;
            j["image_bound"] = r.image_bound;
            break;
        case OracleReport::Mode::failed:
            j["reason"] = r.reason;
            break;
    }
    return j;
}

json generation_json(const GenerationResult& r) {
    return {{"status", to_string(r.status)},
            {"word", r.word ? word_json(*r.word) : json(nullptr)},
            {"longest", r.longest},
            {"stats", stats_json(r.stats)}};
}

json chain_json(const ReductionChain& chain) {
    json arr = json::array();
    for (const auto& step : chain) arr.push_back({{"formula", step.formula.str()}, {"deleted", step.deleted}});
    return arr;
}

json zimin_stats_json(const ZiminStats& s) {
    return {{"fragments", bigint_json(s.fragment_count)}, {"length", bigint_json(s.fragment_length)}};
}

json certificate_json(const Certificate& c) {
    json j{{"kind", to_string(c.kind)}};
    switch (c.kind) {
        case Certificate::Kind::none:
            break;
        case Certificate::Kind::zimin_division:
            j["m"] = c.m;
            j["n"] = c.n;
            j["morphism"] = morphism_json(c.morphism);
            break;
        case Certificate::Kind::theorem9_contrapositive:
            j["basis"] = c.basis;
            break;
        case Certificate::Kind::lemma:
            j["lemma"] = c.lemma;
            if (!c.detail.empty()) j["detail"] = c.detail;
            if (c.factor) j["factor"] = c.factor->str();
            if (c.avoid_target) j["avoids"] = c.avoid_target->str();
            if (c.period_length) j["period_length"] = c.period_length;
            if (c.alphabet_size) j["alphabet_size"] = c.alphabet_size;
            if (c.exponent) j["exponent"] = rational_json(*c.exponent);
            if (c.witness) j["witness"] = omega_json(*c.witness);
            if (c.witness_check) j["witness_check"] = report_json(*c.witness_check);
            break;
        case Certificate::Kind::evidence_only:
            j["word"] = c.word ? word_json(*c.word) : json(nullptr);
            break;
    }
    return j;
}

json verdict_json(const Verdict& v) {
    json j{{"formula", v.formula.str()},
           {"normalized", v.normalized.str()},
           {"m", v.m},
           {"n", v.n},
           {"status", to_string(v.status)},
           {"certificate", certificate_json(v.certificate)}};
    j["evidence"] = v.evidence ? word_json(*v.evidence) : json(nullptr);
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

json conjecture2_json(const Conjecture2Report& r) {
    json j{{"formula", r.formula.str()}, {"residual", r.residual.str()}, {"residual_unavoidable", r.residual_unavoidable}};
    j["formula_status"] = r.formula_status ? json(to_string(*r.formula_status)) : json(nullptr);
    j["chain"] = r.chain ? chain_json(*r.chain) : json(nullptr);
    return j;
}

std::string dump(json j, int indent) {
    if (j.is_object()) j["schema_version"] = kSchemaVersion;
    return j.dump(indent);
}

}  // namespace revform::io
