#include "revform/oracle.hpp"

#include "revform/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace revform {

const char* to_string(GenerationStatus s) {
    switch (s) {
        case GenerationStatus::found: return "found";
        case GenerationStatus::tree_exhausted: return "tree_exhausted";
        case GenerationStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

const char* to_string(OracleReport::Mode m) {
    switch (m) {
        case OracleReport::Mode::avoider_found: return "avoider_found";
        case OracleReport::Mode::all_encounter: return "all_encounter";
        case OracleReport::Mode::witness_ok: return "witness_ok";
        case OracleReport::Mode::failed: return "failed";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// New occurrences after appending a letter have some fragment image as a
// suffix. phi occurs in w through h iff d_reverse(phi) occurs in reverse(w)
// through h, so suffix-anchored checks become prefix-anchored ones.
class SuffixOccurrenceChecker {
public:
    SuffixOccurrenceChecker(const Formula& phi, std::uint64_t max_steps)
        : reversed_(d_reverse(phi)), compiled_(reversed_), max_steps_(max_steps) {}

    bool hits(const std::vector<Letter>& w) const {
        detail::MatchSpec spec;
        spec.formula = &compiled_;
        spec.targets = {std::vector<Letter>(w.rbegin(), w.rend())};
        spec.max_steps = max_steps_;
        for (std::size_t a = 0; a < compiled_.fragments.size(); ++a) {
            spec.anchored_fragment = a;
            auto r = detail::match(spec);
            if (r.status == SearchStatus::found) return true;
            if (r.status == SearchStatus::exhausted) throw std::runtime_error("occurrence check exceeded its step budget");
        }
        return false;
    }

private:
    Formula reversed_;
    detail::CompiledFormula compiled_;
    std::uint64_t max_steps_;
};

// Some suffix of w has exponent >= alpha.
bool ends_with_power(const std::vector<Letter>& w, const Rational& alpha) {
    const auto num = alpha.numerator();
    const auto den = alpha.denominator();
    for (std::size_t p = 1; p < w.size(); ++p) {
        auto len = static_cast<std::int64_t>(longest_suffix_with_period(w, p));
        if (len * den >= num * static_cast<std::int64_t>(p)) return true;
    }
    return false;
}

// Depth-first extension; `bad(w)` says whether the newest letter created a
// forbidden factor. Letters already used plus the next fresh one are tried at
// each node, in order, or shuffled when `rng` is set. Complete unless the node
// cap is hit.
template <class Bad>
GenerationResult extend_once(std::size_t k, std::size_t length, std::uint64_t max_nodes, std::mt19937* rng, Bad& bad) {
    GenerationResult out;
    std::vector<Letter> w;
    std::vector<std::vector<std::size_t>> order;
    std::vector<std::size_t> tried{0};
    std::vector<std::size_t> used{0};
    auto push_order = [&](std::size_t d) {
        std::vector<std::size_t> o(std::min(k, used[d] + 1));
        for (std::size_t c = 0; c < o.size(); ++c) o[c] = c;
        if (rng) std::shuffle(o.begin(), o.end(), *rng);
        order.push_back(std::move(o));
    };
    if (length == 0) {
        out.word = Word();
        out.status = GenerationStatus::found;
        return out;
    }
    push_order(0);
    while (true) {
        const std::size_t d = w.size();
        if (d == length) {
            out.word = Word(w);
            out.status = GenerationStatus::found;
            return out;
        }
        bool extended = false;
        while (tried[d] < order[d].size()) {
            const std::size_t c = order[d][tried[d]++];
            if (++out.stats.nodes > max_nodes) {
                out.status = GenerationStatus::budget_exhausted;
                return out;
            }
            w.push_back(alpha_letter(c));
            if (!bad(w)) {
                used.push_back(std::max(used[d], c + 1));
                tried.push_back(0);
                push_order(d + 1);
                out.longest = std::max(out.longest, w.size());
                extended = true;
                break;
            }
            w.pop_back();
        }
        if (extended) continue;
        if (d == 0) {
            out.status = GenerationStatus::tree_exhausted;
            return out;
        }
        w.pop_back();
        tried.pop_back();
        used.pop_back();
        order.pop_back();
    }
}

// Lowest-letter-first pass, then shuffled restarts with doubling node caps
// until the total budget is spent.
template <class Bad>
GenerationResult extend_search(std::size_t k, std::size_t length, std::uint64_t max_nodes, Bad bad) {
    const auto t0 = Clock::now();
    std::mt19937 rng(0x5eed);
    std::uint64_t spent = 0, cap = 2'000;
    std::size_t longest = 0;
    GenerationResult r;
    for (bool first = true;; first = false) {
        const std::uint64_t this_cap = std::min(cap, max_nodes - spent);
        r = extend_once(k, length, this_cap, first ? nullptr : &rng, bad);
        spent += r.stats.nodes > this_cap ? this_cap : r.stats.nodes;
        longest = std::max(longest, r.longest);
        if (r.status != GenerationStatus::budget_exhausted || spent >= max_nodes) break;
        cap *= 2;
    }
    r.longest = longest;
    r.stats.nodes = spent;
    r.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

}  // namespace

GenerationResult search_avoiding_word(const Formula& phi, std::size_t k, std::size_t length, OracleBudget budget) {
    if (k < 1 || length < 1) throw std::invalid_argument("search_avoiding_word: k and length must be >= 1");
    if (k > 26) throw std::invalid_argument("search_avoiding_word: at most 26 letters");
    if (phi.empty()) {
        GenerationResult r;
        r.status = GenerationStatus::tree_exhausted;
        return r;
    }
    SuffixOccurrenceChecker checker(phi, budget.max_check_steps);
    auto hits = [&](const std::vector<Letter>& w) { return checker.hits(w); };
    auto verified = [&](GenerationResult r) {
        if (r.word) {
            auto check = occurs(phi, *r.word, SearchBudget{.max_steps = budget.max_check_steps * 10});
            if (check.status != SearchStatus::absent)
                throw std::logic_error("avoider search produced a word that does not verify as avoiding");
        }
        return r;
    };
    // Guided passes inside the square-free, then cube-free words: these trees
    // rarely dead-end, and anything they find still has to avoid phi. Only the
    // unrestricted pass can report tree_exhausted.
    std::uint64_t guided_nodes = 0;
    for (int alpha : {2, 3}) {
        if (alpha == 2 && k < 3) continue;
        const std::uint64_t cap = std::min<std::uint64_t>(20'000, budget.max_nodes - guided_nodes);
        auto r = extend_search(k, length, cap, [&](const std::vector<Letter>& w) {
            return ends_with_power(w, Rational(alpha)) || hits(w);
        });
        guided_nodes += r.stats.nodes;
        if (r.word) {
            r.stats.nodes = guided_nodes;
            return verified(std::move(r));
        }
    }
    auto r = extend_search(k, length, budget.max_nodes - guided_nodes, hits);
    r.stats.nodes += guided_nodes;
    return verified(std::move(r));
}

bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length) {
    return kernels::all_words_encounter(phi, k, length);
}

GenerationResult generate_power_free(std::size_t q, Rational alpha, std::size_t length, OracleBudget budget) {
    if (q < 2) throw std::invalid_argument("generate_power_free: need at least 2 letters");
    if (alpha <= Rational(1)) throw std::invalid_argument("generate_power_free: exponent must exceed 1");
    auto r = extend_search(q, length, budget.max_nodes,
                           [&](const std::vector<Letter>& w) { return ends_with_power(w, alpha); });
    if (r.word && !r.word->empty() && max_exponent(*r.word) >= alpha)
        throw std::logic_error("power-free generation produced a word with a forbidden power");
    return r;
}

OracleReport verify_witness_prefix(const OmegaWordSpec& spec, const Formula& phi, std::size_t prefix_len,
                                   std::size_t image_bound, std::uint64_t max_steps) {
    OracleReport rep;
    rep.prefix_len = prefix_len;
    rep.image_bound = image_bound;
    const auto t0 = Clock::now();
    Word prefix;
    try {
        prefix = spec.materialize(prefix_len);
    } catch (const std::exception& e) {
        rep.reason = std::string("materialization failed: ") + e.what();
        return rep;
    }
    auto r = occurs(phi, prefix, SearchBudget{image_bound, max_steps});
    rep.stats.nodes = r.steps;
    rep.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    switch (r.status) {
        case SearchStatus::found: {
            rep.reason = "occurrence found:";
            for (const auto& [v, img] : *r.morphism) rep.reason += " " + v + "=" + img.str();
            break;
        }
        case SearchStatus::exhausted:
            rep.reason = "step budget exhausted";
            break;
        default:
            rep.mode = OracleReport::Mode::witness_ok;
    }
    return rep;
}

std::optional<ConcreteMorphism> brute_force_occurs(const Formula& phi, const Word& w, std::size_t image_bound) {
    if (phi.empty()) return ConcreteMorphism{};
    const auto& frags = phi.fragments();
    const Pattern& first = frags.front();

    std::vector<std::string> first_vars;
    std::map<std::string, std::size_t> count;
    for (const auto& s : first) {
        if (!count.count(s.var)) first_vars.push_back(s.var);
        ++count[s.var];
    }
    std::vector<std::string> other_vars;
    for (const auto& v : phi.variables())
        if (!count.count(v)) other_vars.push_back(v);

    std::set<Word> pool;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; len <= image_bound && i + len <= w.size(); ++len) {
            Word u = w.slice(i, len);
            pool.insert(reverse(u));
            pool.insert(std::move(u));
        }

    auto image_of = [](const ConcreteMorphism& h, const Pattern& p) {
        std::vector<Letter> out;
        for (const auto& s : p) {
            const auto& img = h.at(s.var).vec();
            for (std::size_t i = 0; i < img.size(); ++i) out.push_back(s.mirrored ? img[img.size() - 1 - i] : img[i]);
        }
        return out;
    };
    auto contained = [&](const std::vector<Letter>& u) {
        for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
            bool eq = true;
            for (std::size_t j = 0; j < u.size() && eq; ++j) eq = w[i + j] == u[j];
            if (eq) return true;
        }
        return false;
    };

    ConcreteMorphism h;
    std::function<bool(std::size_t)> assign_others = [&](std::size_t i) -> bool {
        if (i == other_vars.size())
            return std::all_of(frags.begin(), frags.end(), [&](const Pattern& p) { return contained(image_of(h, p)); });
        for (const auto& u : pool) {
            h[other_vars[i]] = u;
            if (assign_others(i + 1)) return true;
        }
        h.erase(other_vars[i]);
        return false;
    };

    std::vector<std::size_t> lens(first_vars.size());
    for (std::size_t start = 0; start < w.size(); ++start) {
        std::function<bool(std::size_t, std::size_t)> assign_lengths = [&](std::size_t i, std::size_t total) -> bool {
            if (i == first_vars.size()) {
                h.clear();
                std::map<std::string, std::size_t> len_of;
                for (std::size_t j = 0; j < first_vars.size(); ++j) len_of[first_vars[j]] = lens[j];
                std::size_t pos = start;
                for (const auto& s : first) {
                    const std::size_t len = len_of[s.var];
                    std::vector<Letter> seg(w.vec().begin() + pos, w.vec().begin() + pos + len);
                    if (s.mirrored) std::reverse(seg.begin(), seg.end());
                    auto it = h.find(s.var);
                    if (it == h.end())
                        h.emplace(s.var, Word(seg));
                    else if (it->second.vec() != seg)
                        return false;
                    pos += len;
                }
                return assign_others(0);
            }
            for (std::size_t len = 1; len <= image_bound; ++len) {
                const std::size_t t = total + len * count[first_vars[i]];
                if (start + t > w.size()) break;
                lens[i] = len;
                if (assign_lengths(i + 1, t)) return true;
            }
            return false;
        };
        if (assign_lengths(0, 0)) return h;
    }
    return std::nullopt;
}

Rational brute_force_max_exponent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("brute_force_max_exponent: empty word");
    Rational best(1);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
            const std::size_t len = j - i;
            for (std::size_t p = 1; p <= len; ++p) {
                bool periodic = true;
                for (std::size_t t = i; t + p < j && periodic; ++t) periodic = w[t] == w[t + p];
                if (periodic) {
                    Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
                    if (e > best) best = e;
                    break;
                }
            }
        }
    return best;
}

}  // namespace revform
