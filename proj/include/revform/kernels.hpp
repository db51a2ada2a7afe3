// Data-parallel kernels. Each has a serial reference in kernels::serial with
// identical results; the tests compare the two and bench/ times them.
#pragma once

#include "revform/decide.hpp"
#include "revform/formula.hpp"

#include <cstddef>
#include <vector>

namespace revform::kernels {

/// Throws std::length_error when k^length > 2^20, std::runtime_error when an
/// occurrence check runs out of steps.
bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length);

/// Results in input order. jobs == 0 means one per core.
std::vector<Verdict> decide_batch(const std::vector<Formula>& formulas, const DecideOptions& opts = {},
                                  unsigned jobs = 0);

/// k^length, or nullopt past 2^20.
std::optional<std::uint64_t> word_count(std::size_t k, std::size_t length);

/// The i-th word of length `length` over letters a, b, ... in lexicographic order.
Word nth_word(std::uint64_t i, std::size_t k, std::size_t length);

namespace serial {
bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length);
std::vector<Verdict> decide_batch(const std::vector<Formula>& formulas, const DecideOptions& opts = {});
}  // namespace serial

}  // namespace revform::kernels
