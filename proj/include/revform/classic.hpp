// Reversal-free theory: adjacency graphs, free sets, reductions, Zimin words.
#pragma once

#include "revform/formula.hpp"
#include "revform/morphism.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace revform {

/// Bipartite graph on left/right copies of each variable; {x^l, y^r} is an
/// edge iff xy is a factor of the formula.
class AdjacencyGraph {
public:
    explicit AdjacencyGraph(const Formula& phi);

    const std::vector<std::string>& variables() const { return vars_; }
    /// Pairs (x, y) such that xy is a factor.
    const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }
    bool left_right_connected(const std::string& x, const std::string& y) const;
    std::size_t component_count() const;

private:
    std::size_t left(std::size_t i) const { return 2 * i; }
    std::size_t right(std::size_t i) const { return 2 * i + 1; }
    std::size_t index(const std::string& v) const;

    std::vector<std::string> vars_;
    std::set<std::pair<std::string, std::string>> edges_;
    std::vector<std::size_t> component_;
};

using VarSet = std::set<std::string>;

/// Throws std::invalid_argument when `phi` has mirrored symbols.
AdjacencyGraph adjacency_graph(const Formula& phi);

bool is_free_set(const Formula& phi, const VarSet& f);
/// All free sets, ordered by size, then lexicographically.
std::vector<VarSet> free_sets(const Formula& phi);

/// Deletes every occurrence of the variables in `f` without splitting
/// fragments. Throws std::invalid_argument when `f` is not free.
Formula delete_free_set(const Formula& phi, const VarSet& f);

struct ReductionStep {
    Formula formula;
    VarSet deleted;
};
/// Each step's formula reduces to the next step's formula; the last step
/// reduces to the empty formula.
using ReductionChain = std::vector<ReductionStep>;

std::optional<ReductionChain> find_reduction(const Formula& phi);
bool verify_reduction(const Formula& phi, const ReductionChain& chain);

/// Z_n over x1..xn; Z_0 is the empty formula.
Formula zimin_word(unsigned n);

struct ClassicVerdict {
    SearchStatus division_status = SearchStatus::absent;
    bool unavoidable = false;
    std::optional<SymbolicMorphism> division;
    std::optional<ReductionChain> chain;
};

/// Unavoidable iff `phi` divides Z_n, n = number of variables.
ClassicVerdict decide_classic(const Formula& phi, SearchBudget budget = {});

/// Division into Z_n sending every variable of `f` to x1.
SearchResult<SymbolicMorphism> divide_into_zimin_constrained(const Formula& phi, const VarSet& f,
                                                             SearchBudget budget = {});

}  // namespace revform
