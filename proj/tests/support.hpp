// Shared helpers for the test executables.
#pragma once

#include "revform/formula.hpp"
#include "revform/word.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

inline revform::Formula F(const char* text) { return revform::Formula::parse(text); }
inline revform::Pattern P(const char* text) { return revform::Pattern::parse(text); }
inline revform::Word W(const char* text) { return revform::Word::from_string(text); }

inline revform::Word random_word(std::mt19937& rng, std::size_t len, std::size_t k) {
    std::vector<revform::Letter> out;
    std::uniform_int_distribution<std::size_t> d(0, k - 1);
    for (std::size_t i = 0; i < len; ++i) out.push_back(revform::alpha_letter(d(rng)));
    return revform::Word(std::move(out));
}

inline revform::Pattern random_pattern(std::mt19937& rng, std::size_t len, std::size_t vars, bool mirrors) {
    static const char* names[] = {"x", "y", "z", "u", "v"};
    std::vector<revform::Sym> out;
    std::uniform_int_distribution<std::size_t> d(0, vars - 1);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < len; ++i) out.emplace_back(names[d(rng)], mirrors && coin(rng));
    return revform::Pattern(std::move(out));
}

/// All patterns of exactly `len` symbols over the first `vars` names.
inline std::vector<revform::Pattern> all_patterns(std::size_t len, std::size_t vars, bool mirrors) {
    static const char* names[] = {"x", "y", "z", "u", "v"};
    const std::size_t base = vars * (mirrors ? 2 : 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= base;
    std::vector<revform::Pattern> out;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<revform::Sym> syms;
        std::size_t c = code;
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t s = c % base;
            c /= base;
            syms.emplace_back(names[mirrors ? s / 2 : s], mirrors && s % 2 == 1);
        }
        out.emplace_back(std::move(syms));
    }
    return out;
}

}  // namespace testing_support
