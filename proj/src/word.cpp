#include "revform/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace revform {

Letter make_pair_letter(Letter left, Letter right) {
    if (is_pair_letter(left) || is_pair_letter(right) || left > 0x7fffu || right > 0x7fffu)
        throw std::invalid_argument("direct product of product letters is not supported");
    return kPairBit | (left << 15) | right;
}

Letter digit_letter(std::size_t i) {
    static constexpr std::string_view glyphs = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (i >= glyphs.size()) throw std::out_of_range("alphabet too large for digit glyphs");
    return static_cast<unsigned char>(glyphs[i]);
}

Letter alpha_letter(std::size_t i) {
    static constexpr std::string_view glyphs = "abcdefghijklmnopqrstuvwxyz";
    if (i >= glyphs.size()) throw std::out_of_range("alphabet too large for letter glyphs");
    return static_cast<unsigned char>(glyphs[i]);
}

Word Word::from_string(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(static_cast<unsigned char>(c));
    return Word(std::move(out));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string letter_str(Letter a) {
    if (is_pair_letter(a)) return letter_str(pair_first(a)) + "," + letter_str(pair_second(a));
    if (a < 0x80) return std::string(1, static_cast<char>(a));
    return "#" + std::to_string(a);
}

std::string Word::str() const {
    std::string out;
    for (auto a : letters_) {
        if (is_pair_letter(a))
            out += "(" + letter_str(a) + ")";
        else
            out += letter_str(a);
    }
    return out;
}

Word reverse(const Word& w) {
    return Word(std::vector<Letter>(w.vec().rbegin(), w.vec().rend()));
}

bool is_factor(std::span<const Letter> u, std::span<const Letter> w) {
    if (u.size() > w.size()) return false;
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

Word direct_product(const Word& v, const Word& w) {
    if (v.size() != w.size()) throw std::invalid_argument("direct_product: length mismatch");
    std::vector<Letter> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = make_pair_letter(v[i], w[i]);
    return Word(std::move(out));
}

Word project_first(const Word& w) {
    std::vector<Letter> out;
    for (auto a : w) out.push_back(is_pair_letter(a) ? pair_first(a) : a);
    return Word(std::move(out));
}

Word project_second(const Word& w) {
    std::vector<Letter> out;
    for (auto a : w) out.push_back(is_pair_letter(a) ? pair_second(a) : a);
    return Word(std::move(out));
}

Word periodic_prefix(const Word& period, std::size_t len) {
    if (period.empty()) throw std::invalid_argument("periodic_prefix: empty period");
    std::vector<Letter> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = period[i % period.size()];
    return Word(std::move(out));
}

// For each period p the longest factor with period p is p plus the longest
// run of positions i with w[i] == w[i+p].
Rational max_exponent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("max_exponent: empty word");
    const std::size_t n = w.size();
    Rational best(1);
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0, best_run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            run = (w[i] == w[i + p]) ? run + 1 : 0;
            best_run = std::max(best_run, run);
        }
        if (best_run == 0) continue;
        Rational e(static_cast<std::int64_t>(best_run + p), static_cast<std::int64_t>(p));
        if (e > best) best = e;
    }
    return best;
}

std::size_t longest_suffix_with_period(std::span<const Letter> w, std::size_t p) {
    const std::size_t n = w.size();
    if (p == 0 || p >= n) return 0;
    std::size_t run = 0;
    while (run + p < n && w[n - 1 - run] == w[n - 1 - run - p]) ++run;
    return run + p;
}

std::set<Word> reversible_factors(const Word& w, std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("reversible_factors: max_len must be >= 1");
    std::set<Word> out;
    for (std::size_t len = 1; len <= std::min(max_len, w.size()); ++len) {
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            Word u = w.slice(i, len);
            if (out.count(u)) continue;
            if (is_factor(reverse(u), w)) out.insert(std::move(u));
        }
    }
    return out;
}

OmegaWordSpec OmegaWordSpec::periodic_word(Word period) {
    if (period.empty()) throw std::invalid_argument("periodic word needs a nonempty period");
    OmegaWordSpec s;
    s.kind = Kind::periodic;
    s.period = std::move(period);
    return s;
}

OmegaWordSpec OmegaWordSpec::product(OmegaWordSpec l, OmegaWordSpec r) {
    OmegaWordSpec s;
    s.kind = Kind::direct_product;
    s.left = std::make_shared<const OmegaWordSpec>(std::move(l));
    s.right = std::make_shared<const OmegaWordSpec>(std::move(r));
    return s;
}

OmegaWordSpec OmegaWordSpec::generated_word(std::size_t alphabet_size, Word prefix,
                                            std::optional<Rational> exponent, std::string avoids) {
    OmegaWordSpec s;
    s.kind = Kind::generated;
    s.alphabet_size = alphabet_size;
    s.prefix = std::move(prefix);
    s.forbidden_exponent = exponent;
    s.avoids = std::move(avoids);
    return s;
}

Word OmegaWordSpec::materialize(std::size_t len) const {
    switch (kind) {
        case Kind::periodic:
            return periodic_prefix(period, len);
        case Kind::direct_product:
            return direct_product(left->materialize(len), right->materialize(len));
        case Kind::generated:
            if (prefix.size() < len)
                throw std::runtime_error("generated witness prefix has length " +
                                         std::to_string(prefix.size()) + ", need " +
                                         std::to_string(len));
            return prefix.slice(0, len);
    }
    throw std::logic_error("bad OmegaWordSpec kind");
}

}  // namespace revform
