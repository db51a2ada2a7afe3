// Concrete finite words over small alphabets.
#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revform {

/// Letters are interned integers. Plain letters carry their glyph code
/// (< 2^15); product letters pack two plain letters behind the top bit.
using Letter = std::uint32_t;

/// Exact exponent arithmetic. Never compare exponents in floating point.
using Rational = boost::rational<std::int64_t>;

constexpr Letter kPairBit = 0x8000'0000u;

constexpr bool is_pair_letter(Letter a) { return (a & kPairBit) != 0; }
Letter make_pair_letter(Letter left, Letter right);
constexpr Letter pair_first(Letter a) { return (a >> 15) & 0x7fffu; }
constexpr Letter pair_second(Letter a) { return a & 0x7fffu; }

/// Glyph for the i-th letter of a generated alphabet ("1".."9", then "A"...).
Letter digit_letter(std::size_t i);
/// Glyph for the i-th letter of a search alphabet ("a", "b", ...).
Letter alpha_letter(std::size_t i);

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    /// One letter per byte of `text`.
    static Word from_string(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }
    const std::vector<Letter>& vec() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word slice(std::size_t pos, std::size_t len) const;

    /// Glyph string; product letters render as "(a,1)".
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

std::string letter_str(Letter a);

Word reverse(const Word& w);
bool is_factor(std::span<const Letter> u, std::span<const Letter> w);
inline bool is_factor(const Word& u, const Word& w) { return is_factor(u.letters(), w.letters()); }

/// Position-wise pairing; throws std::invalid_argument on length mismatch.
Word direct_product(const Word& v, const Word& w);
Word project_first(const Word& w);
Word project_second(const Word& w);

Word periodic_prefix(const Word& period, std::size_t len);

/// Maximum of |f|/p over factors f and periods p of f. Throws on the empty word.
Rational max_exponent(const Word& w);

/// Length of the longest suffix of `w` having period `p` (0 if p >= |w|).
std::size_t longest_suffix_with_period(std::span<const Letter> w, std::size_t p);

/// Factors u with |u| <= max_len whose reversal is also a factor.
std::set<Word> reversible_factors(const Word& w, std::size_t max_len);

/// Finite description of an infinite word.
struct OmegaWordSpec {
    enum class Kind { periodic, direct_product, generated };

    Kind kind = Kind::periodic;
    Word period;                                  // periodic
    std::shared_ptr<const OmegaWordSpec> left;    // direct_product
    std::shared_ptr<const OmegaWordSpec> right;   // direct_product
    std::size_t alphabet_size = 0;                // generated
    std::optional<Rational> forbidden_exponent;   // generated, power-free words
    std::string avoids;                           // generated, pattern-avoiding words
    Word prefix;                                  // generated: stored verified prefix

    static OmegaWordSpec periodic_word(Word period);
    static OmegaWordSpec product(OmegaWordSpec l, OmegaWordSpec r);
    static OmegaWordSpec generated_word(std::size_t alphabet_size, Word prefix,
                                        std::optional<Rational> exponent, std::string avoids = {});

    /// Prefix of the described word; throws if a generated component is too short.
    Word materialize(std::size_t len) const;
};

}  // namespace revform

template <>
struct std::hash<revform::Word> {
    std::size_t operator()(const revform::Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto a : w) h = (h ^ a) * 1099511628211ull;
        return h;
    }
};
