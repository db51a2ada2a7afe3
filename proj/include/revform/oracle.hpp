// Brute-force ground truth for the decision procedures.
#pragma once

#include "revform/formula.hpp"
#include "revform/morphism.hpp"
#include "revform/word.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace revform {

struct OracleStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// `tree_exhausted`: no word of the target length exists over the alphabet.
/// `budget_exhausted`: the node budget ran out first.
enum class GenerationStatus { found, tree_exhausted, budget_exhausted };
const char* to_string(GenerationStatus s);

struct GenerationResult {
    GenerationStatus status = GenerationStatus::tree_exhausted;
    std::optional<Word> word;
    std::size_t longest = 0;  // longest valid prefix reached
    OracleStats stats;
};

struct OracleBudget {
    std::uint64_t max_nodes = 2'000'000;
    /// Step budget for each occurrence check inside the search.
    std::uint64_t max_check_steps = 50'000'000;
};

/// Depth-first, new letters introduced in order (avoidance is invariant under
/// renaming letters). A lowest-letter-first pass is followed by restarts with
/// shuffled, fixed-seed letter orders and doubling node caps; any pass that
/// finishes under its cap is complete. Short guided passes restricted to
/// square-free (k >= 3) and cube-free words run first; only the unrestricted
/// search reports tree_exhausted. Letters are "a", "b", ...
GenerationResult search_avoiding_word(const Formula& phi, std::size_t k, std::size_t length, OracleBudget budget = {});

/// Every word of length `length` over `k` letters encounters `phi`.
/// Throws std::length_error when k^length > 2^20.
bool all_words_encounter(const Formula& phi, std::size_t k, std::size_t length);

/// Word over q letters with max_exponent < alpha.
GenerationResult generate_power_free(std::size_t q, Rational alpha, std::size_t length, OracleBudget budget = {});

struct OracleReport {
    enum class Mode { avoider_found, all_encounter, witness_ok, failed };
    Mode mode = Mode::failed;
    std::optional<Word> word;
    std::size_t length = 0;
    std::size_t alphabet_size = 0;
    std::size_t prefix_len = 0;
    std::size_t image_bound = 0;
    std::string reason;
    OracleStats stats;

    bool ok() const { return mode != Mode::failed; }
};
const char* to_string(OracleReport::Mode m);

/// Bounded sanity check: no occurrence with images of length <= image_bound
/// in the first prefix_len letters. Not a proof of avoidance.
OracleReport verify_witness_prefix(const OmegaWordSpec& spec, const Formula& phi, std::size_t prefix_len,
                                   std::size_t image_bound, std::uint64_t max_steps = 500'000'000);

/// Occurrence search by plain enumeration, sharing no code with the
/// backtracking engine. Only for small inputs.
std::optional<ConcreteMorphism> brute_force_occurs(const Formula& phi, const Word& w, std::size_t image_bound);

/// Naive all-windows, all-periods exponent scan.
Rational brute_force_max_exponent(const Word& w);

}  // namespace revform
