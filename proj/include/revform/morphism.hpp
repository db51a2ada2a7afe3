// Bounded backtracking search for occurrences and divisions.
#pragma once

#include "revform/formula.hpp"
#include "revform/word.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revform {

/// Non-erasing; h(x~) = reverse(h(x)).
using ConcreteMorphism = std::map<std::string, Word>;
/// Non-erasing; h(x~) = d_reverse(h(x)).
using SymbolicMorphism = std::map<std::string, Pattern>;

struct SearchBudget {
    /// Capped by the engine at the sound bound of each search.
    std::size_t max_image_len = std::numeric_limits<std::size_t>::max();
    std::uint64_t max_steps = 10'000'000;
};

/// `absent` is a proof of non-existence; `bounded_absent` only covers images
/// up to the requested length; `exhausted` means the step budget ran out.
enum class SearchStatus { found, absent, bounded_absent, exhausted };
const char* to_string(SearchStatus s);

template <class M>
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<M> morphism;
    std::uint64_t steps = 0;
    std::size_t image_bound = 0;

    bool found() const { return status == SearchStatus::found; }
    bool none() const { return status == SearchStatus::absent || status == SearchStatus::bounded_absent; }
};

/// Throws std::out_of_range for an unassigned variable.
Word apply_concrete(const ConcreteMorphism& h, const Pattern& p);
Pattern apply_symbolic(const SymbolicMorphism& h, const Pattern& p);

/// f∘h: a concrete morphism on the variables of h's domain.
ConcreteMorphism compose(const ConcreteMorphism& f, const SymbolicMorphism& h);

bool verify_occurrence(const Formula& phi, const Word& w, const ConcreteMorphism& h);
bool verify_common_image(const Formula& phi, const Word& w, const ConcreteMorphism& h);
bool verify_division(const Formula& phi, const Formula& psi, const SymbolicMorphism& h);

SearchResult<ConcreteMorphism> occurs(const Formula& phi, const Word& w, SearchBudget budget = {});

/// Occurrence in which every fragment has the same image.
SearchResult<ConcreteMorphism> occurs_common_image(const Formula& phi, const Word& w, SearchBudget budget = {});

/// Division of `phi` into `psi`; variables in `pinned` keep the given images.
SearchResult<SymbolicMorphism> divides(const Formula& phi, const Formula& psi, SearchBudget budget = {},
                                       const SymbolicMorphism& pinned = {});

/// Mutual division; nullopt when a budget ran out before either answer was definite.
std::optional<bool> equivalent(const Formula& phi, const Formula& psi, SearchBudget budget = {});

namespace detail {

/// A formula with variables interned as indices.
struct CompiledFormula {
    struct Occ {
        std::size_t var;
        bool mirrored;
    };
    std::vector<std::vector<Occ>> fragments;
    std::vector<std::string> names;

    explicit CompiledFormula(const Formula& phi);
    std::size_t index_of(const std::string& name) const;
};

/// One search problem for the matcher. Targets are words over interned
/// letters; in symbolic mode the mirror of a letter toggles its low bit.
struct MatchSpec {
    const CompiledFormula* formula = nullptr;
    std::vector<std::vector<Letter>> targets;
    bool symbolic = false;
    std::vector<std::optional<std::vector<Letter>>> pinned;
    /// Letters a variable's image may contain; empty means unrestricted.
    std::function<bool(std::size_t var, Letter)> allowed;
    /// This fragment must start at position 0 of target 0.
    std::optional<std::size_t> anchored_fragment;
    bool common_image = false;
    std::size_t max_image_len = std::numeric_limits<std::size_t>::max();
    std::uint64_t max_steps = 10'000'000;
};

struct MatchResult {
    SearchStatus status = SearchStatus::absent;
    std::vector<std::vector<Letter>> images;
    std::uint64_t steps = 0;
    std::size_t image_bound = 0;
};

MatchResult match(const MatchSpec& spec);

}  // namespace detail

}  // namespace revform
