#include "revform/decide.hpp"

#include "revform/zimin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace revform {

const char* to_string(Status s) {
    switch (s) {
        case Status::unavoidable: return "unavoidable";
        case Status::avoidable: return "avoidable";
        case Status::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::none: return "none";
        case Certificate::Kind::zimin_division: return "zimin_division";
        case Certificate::Kind::theorem9_contrapositive: return "theorem9_contrapositive";
        case Certificate::Kind::lemma: return "lemma";
        case Certificate::Kind::evidence_only: return "evidence_only";
    }
    return "?";
}

namespace {

Word period_word(std::size_t len) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(digit_letter(i));
    return Word(std::move(out));
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

Certificate lemma_cert(std::string name, std::string detail = {}) {
    Certificate c;
    c.kind = Certificate::Kind::lemma;
    c.lemma = std::move(name);
    c.detail = std::move(detail);
    return c;
}

// Certificate for an avoidable factor of the formula; the witness avoids
// its flattening and is paired with (123)^omega.
Certificate factor_cert(std::string name, const Pattern& factor) {
    auto c = lemma_cert(std::move(name));
    c.factor = factor;
    c.avoid_target = Formula({flatten(factor)});
    return c;
}

std::optional<Certificate> with_witness(Certificate c, const DecideOptions& opts) {
    try {
        c.witness = build_witness(c, opts);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    return c;
}

struct Repeat {
    std::size_t gap = 0;  // letters strictly between two consecutive occurrences
    Pattern between;      // empty pattern when gap == 0
    bool found = false;
};

// Closest pair of occurrences of `var` (either orientation) in one fragment.
Repeat closest_repeat(const Formula& phi, const std::string& var) {
    Repeat best;
    for (const auto& p : phi) {
        std::optional<std::size_t> last;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].var != var) continue;
            if (last) {
                const std::size_t gap = i - *last - 1;
                if (!best.found || gap < best.gap) {
                    best.found = true;
                    best.gap = gap;
                    best.between = gap ? Pattern(std::vector<Sym>(p.syms().begin() + *last + 1, p.syms().begin() + i))
                                       : Pattern();
                }
            }
            last = i;
        }
    }
    return best;
}

// True when some factor of the flattened fragment has the form u u. Every
// image of it then contains a square.
bool has_square_factor(const Pattern& p) {
    const auto& s = p.syms();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t len = 1; i + 2 * len <= s.size(); ++len) {
            bool square = true;
            for (std::size_t j = 0; j < len && square; ++j) square = s[i + j].var == s[i + len + j].var;
            if (square) return true;
        }
    return false;
}

}  // namespace

bool check_doubled_pattern(const Pattern& p) {
    std::map<std::string, std::size_t> count;
    for (const auto& s : p) ++count[s.var];
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second >= 2; });
}

bool check_length_bound(const Pattern& p) {
    const std::size_t n = p.variables().size();
    if (n >= 63) return false;
    return p.size() >= pow2(n);
}

std::optional<Certificate> lemma_corollaries(const Formula& phi, const DecideOptions& opts) {
    std::size_t longest = phi.longest_fragment();
    for (std::size_t len = 1; len <= longest; ++len) {
        for (const auto& f : factors_of(phi, len)) {
            if (check_doubled_pattern(f)) {
                if (auto c = with_witness(factor_cert("doubled_pattern", f), opts)) return c;
            } else if (check_length_bound(f)) {
                if (auto c = with_witness(factor_cert("length_bound", f), opts)) return c;
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> lemma_two_way_middle(const Formula& phi, const DecideOptions& opts) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& f : factors_of(flatten(phi), 2)) pairs.emplace(f[0].var, f[1].var);
    auto classes = classify_vars(phi);
    for (const auto& [y, cls] : classes) {
        if (cls != VarClass::two_way) continue;
        for (const auto& [x, cx] : classes)
            for (const auto& [z, cz] : classes)
                if (pairs.count({x, y}) && pairs.count({y, z}) && pairs.count({x, z}))
                    return with_witness(lemma_cert("two_way_middle", "x=" + x + " y=" + y + " z=" + z), opts);
    }
    return std::nullopt;
}

std::optional<Certificate> lemma_all_two_way(const Formula& phi, const DecideOptions& opts) {
    auto classes = classify_vars(phi);
    if (classes.empty()) return std::nullopt;
    for (const auto& [v, cls] : classes)
        if (cls != VarClass::two_way) return std::nullopt;
    const std::size_t n = classes.size();
    std::optional<std::pair<std::string, Repeat>> best;
    for (const auto& [v, cls] : classes) {
        auto r = closest_repeat(phi, v);
        if (r.found && (!best || r.gap < best->second.gap)) best.emplace(v, r);
    }
    if (!best) return std::nullopt;
    if (n >= 7) return std::nullopt;  // period would exceed the glyph alphabet
    if (best->second.gap >= pow2(n - 1)) return with_witness(factor_cert("length_bound", best->second.between), opts);
    auto c = lemma_cert("all_two_way", best->first);
    c.period_length = pow2(n - 1) + 1;
    return with_witness(std::move(c), opts);
}

std::optional<Certificate> lemma_one_way_twice(const Formula& phi, const DecideOptions& opts) {
    auto classes = classify_vars(phi);
    const std::size_t n = classes.size();
    if (n >= 20) return std::nullopt;
    std::size_t one_way = 0;
    std::string detail;
    for (const auto& [y, cls] : classes) {
        if (cls != VarClass::one_way) continue;
        ++one_way;
        auto r = closest_repeat(phi, y);
        if (!r.found) return std::nullopt;
        if (r.gap >= pow2(n - 1)) return with_witness(factor_cert("length_bound", r.between), opts);
        detail += (detail.empty() ? "" : " ") + y;
    }
    if (one_way == 0) return std::nullopt;
    auto c = lemma_cert("one_way_twice", detail);
    c.alphabet_size = pow2(n - 1) + 2;
    c.exponent = Rational(static_cast<std::int64_t>(pow2(n - 1) + 1), static_cast<std::int64_t>(pow2(n - 1)));
    return with_witness(std::move(c), opts);
}

std::optional<Certificate> lemma_flat(const Formula& phi, const DecideOptions& opts) {
    Formula flat = flatten(phi);
    auto cv = decide_classic(flat, opts.budget);
    if (cv.division_status != SearchStatus::absent) return std::nullopt;
    auto c = lemma_cert("flat", flat.str());
    c.avoid_target = flat;
    return with_witness(std::move(c), opts);
}

OmegaWordSpec build_witness(const Certificate& cert, const DecideOptions& opts) {
    if (cert.kind != Certificate::Kind::lemma) throw std::invalid_argument("build_witness: not a lemma certificate");
    const auto triple = OmegaWordSpec::periodic_word(period_word(3));
    if (cert.lemma == "two_way_middle") return triple;
    if (cert.lemma == "all_two_way") return OmegaWordSpec::periodic_word(period_word(cert.period_length));
    if (cert.lemma == "one_way_twice") {
        auto g = generate_power_free(cert.alphabet_size, *cert.exponent, opts.witness_prefix, opts.oracle);
        if (!g.word) throw std::runtime_error("power-free generation failed: " + std::string(to_string(g.status)));
        return OmegaWordSpec::product(
            OmegaWordSpec::generated_word(cert.alphabet_size, *g.word, cert.exponent), triple);
    }
    if (cert.lemma == "flat" || cert.lemma == "doubled_pattern" || cert.lemma == "length_bound") {
        if (!cert.avoid_target) throw std::invalid_argument("build_witness: missing formula to avoid");
        const auto& frags = cert.avoid_target->fragments();
        if (std::any_of(frags.begin(), frags.end(), has_square_factor)) {
            auto g = generate_power_free(3, Rational(2), opts.witness_prefix, opts.oracle);
            if (!g.word) throw std::runtime_error("square-free generation failed");
            return OmegaWordSpec::product(OmegaWordSpec::generated_word(3, *g.word, Rational(2), "x x"), triple);
        }
        for (std::size_t k = 1; k <= 6; ++k) {
            auto g = search_avoiding_word(*cert.avoid_target, k, opts.witness_prefix, opts.oracle);
            if (g.word)
                return OmegaWordSpec::product(
                    OmegaWordSpec::generated_word(k, *g.word, std::nullopt, cert.avoid_target->str()), triple);
        }
        throw std::runtime_error("no avoiding word found for " + cert.avoid_target->str());
    }
    throw std::invalid_argument("build_witness: unknown lemma '" + cert.lemma + "'");
}

std::optional<Certificate> run_lemma_battery(const Formula& phi, const DecideOptions& opts) {
    using Lemma = std::optional<Certificate> (*)(const Formula&, const DecideOptions&);
    for (Lemma lemma : {&lemma_corollaries, &lemma_two_way_middle, &lemma_all_two_way, &lemma_one_way_twice,
                        &lemma_flat}) {
        auto c = lemma(phi, opts);
        if (!c) continue;
        if (opts.verify_witnesses) {
            // An occurrence of phi contains one of the factor, so checking the
            // factor alone is the stronger test.
            const Formula target = c->factor ? Formula({*c->factor}) : phi;
            auto rep = verify_witness_prefix(*c->witness, target, opts.witness_prefix, opts.witness_image_bound);
            c->witness_check = rep;
            if (!rep.ok()) continue;
        }
        return c;
    }
    return std::nullopt;
}

std::optional<Word> find_evidence(const Formula& phi, std::size_t length, std::size_t max_alphabet,
                                  OracleBudget budget) {
    for (std::size_t k = 1; k <= max_alphabet; ++k) {
        auto g = search_avoiding_word(phi, k, length, budget);
        if (g.word) return g.word;
    }
    return std::nullopt;
}

Verdict decide(const Formula& phi, const DecideOptions& opts) {
    Verdict v;
    v.formula = phi;
    v.normalized = normalize(phi);
    const auto counts = count_vars(v.normalized);
    v.m = static_cast<unsigned>(counts.two_way);
    v.n = static_cast<unsigned>(counts.one_way);

    auto div = divides_zimin(v.normalized, v.m, v.n, opts.budget);
    if (div.found()) {
        v.status = Status::unavoidable;
        v.certificate.kind = Certificate::Kind::zimin_division;
        v.certificate.m = v.m;
        v.certificate.n = v.n;
        v.certificate.morphism = *div.morphism;
        return v;
    }
    if (div.status != SearchStatus::absent) {
        v.status = Status::unknown;
        v.reason = std::string("division search incomplete: ") + to_string(div.status);
        return v;
    }

    auto lemma = run_lemma_battery(v.normalized, opts);
    if (v.m == 0 || v.n <= 2) {
        v.status = Status::avoidable;
        if (lemma) {
            v.certificate = std::move(*lemma);
        } else {
            v.certificate.kind = Certificate::Kind::theorem9_contrapositive;
            v.certificate.basis = v.m == 0 ? "reversal_free" : "at_most_two_one_way";
            if (opts.attach_evidence)
                v.evidence = find_evidence(v.normalized, opts.evidence_length, opts.evidence_max_alphabet, opts.evidence_budget);
        }
        return v;
    }
    if (lemma) {
        v.status = Status::avoidable;
        v.certificate = std::move(*lemma);
        return v;
    }
    v.status = Status::unknown;
    v.reason = "no division into Z_{m,n} and no sufficient condition for avoidability applies";
    if (opts.attach_evidence) {
        if (auto w = find_evidence(v.normalized, opts.evidence_length, opts.evidence_max_alphabet, opts.evidence_budget)) {
            v.certificate.kind = Certificate::Kind::evidence_only;
            v.certificate.word = *w;
            v.evidence = *w;
        }
    }
    return v;
}

Conjecture2Report conjecture2_probe(const Formula& phi, const DecideOptions& opts, bool with_verdict) {
    Conjecture2Report rep;
    rep.formula = phi;
    Formula norm = normalize(phi);
    std::set<std::string> two_way;
    for (const auto& [v, cls] : classify_vars(norm))
        if (cls == VarClass::two_way) two_way.insert(v);
    rep.residual = erase_variables(norm, two_way);
    auto cv = decide_classic(rep.residual, opts.budget);
    rep.residual_unavoidable = cv.unavoidable;
    rep.chain = find_reduction(rep.residual);
    if (with_verdict) rep.formula_status = decide(phi, opts).status;
    return rep;
}

}  // namespace revform
