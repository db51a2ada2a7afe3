#include "revform/classic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace revform {

namespace {

void require_reversal_free(const Formula& phi, const char* what) {
    if (phi.has_mirrors()) throw std::invalid_argument(std::string(what) + ": formula has mirrored symbols");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

AdjacencyGraph::AdjacencyGraph(const Formula& phi) {
    require_reversal_free(phi, "adjacency_graph");
    auto vs = phi.variables();
    vars_.assign(vs.begin(), vs.end());
    std::vector<std::size_t> parent(2 * vars_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& p : phi) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            edges_.emplace(p[i].var, p[i + 1].var);
            auto a = find_root(parent, left(index(p[i].var)));
            auto b = find_root(parent, right(index(p[i + 1].var)));
            parent[a] = b;
        }
    }
    component_.resize(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) component_[i] = find_root(parent, i);
}

std::size_t AdjacencyGraph::index(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) throw std::out_of_range("variable '" + v + "' not in formula");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool AdjacencyGraph::left_right_connected(const std::string& x, const std::string& y) const {
    return component_[left(index(x))] == component_[right(index(y))];
}

std::size_t AdjacencyGraph::component_count() const {
    std::set<std::size_t> roots(component_.begin(), component_.end());
    return roots.size();
}

AdjacencyGraph adjacency_graph(const Formula& phi) { return AdjacencyGraph(phi); }

bool is_free_set(const Formula& phi, const VarSet& f) {
    if (f.empty()) return false;
    AdjacencyGraph g(phi);
    auto vars = phi.variables();
    for (const auto& x : f) {
        if (!vars.count(x)) return false;
        for (const auto& y : f)
            if (g.left_right_connected(x, y)) return false;
    }
    return true;
}

std::vector<VarSet> free_sets(const Formula& phi) {
    AdjacencyGraph g(phi);
    const auto& vars = g.variables();
    if (vars.size() > 20) throw std::length_error("free_sets: too many variables");
    std::vector<VarSet> out;
    for (std::uint32_t mask = 1; mask < (1u << vars.size()); ++mask) {
        VarSet f;
        bool ok = true;
        for (std::size_t i = 0; i < vars.size() && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (std::size_t j = 0; j < vars.size() && ok; ++j)
                if ((mask >> j & 1u) && g.left_right_connected(vars[i], vars[j])) ok = false;
            f.insert(vars[i]);
        }
        if (ok) out.push_back(std::move(f));
    }
    std::stable_sort(out.begin(), out.end(), [](const VarSet& a, const VarSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Formula delete_free_set(const Formula& phi, const VarSet& f) {
    if (!is_free_set(phi, f)) throw std::invalid_argument("delete_free_set: set is not free");
    return erase_variables(phi, f);
}

namespace {

bool reduce_rec(const Formula& phi, ReductionChain& chain, std::set<Formula>& dead) {
    if (phi.empty()) return true;
    if (dead.count(phi)) return false;
    for (const auto& f : free_sets(phi)) {
        Formula next = erase_variables(phi, f);
        chain.push_back({phi, f});
        if (reduce_rec(next, chain, dead)) return true;
        chain.pop_back();
    }
    dead.insert(phi);
    return false;
}

}  // namespace

std::optional<ReductionChain> find_reduction(const Formula& phi) {
    require_reversal_free(phi, "find_reduction");
    ReductionChain chain;
    std::set<Formula> dead;
    if (reduce_rec(phi, chain, dead)) return chain;
    return std::nullopt;
}

bool verify_reduction(const Formula& phi, const ReductionChain& chain) {
    Formula cur = phi;
    for (const auto& step : chain) {
        if (step.formula != cur || !is_free_set(cur, step.deleted)) return false;
        cur = erase_variables(cur, step.deleted);
    }
    return cur.empty();
}

Formula zimin_word(unsigned n) {
    if (n == 0) return Formula();
    if (n > 20) throw std::length_error("zimin_word: n too large");
    std::vector<Sym> z;
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Sym> next = z;
        next.emplace_back("x" + std::to_string(i));
        next.insert(next.end(), z.begin(), z.end());
        z = std::move(next);
    }
    return Formula({Pattern(std::move(z))});
}

ClassicVerdict decide_classic(const Formula& phi, SearchBudget budget) {
    require_reversal_free(phi, "decide_classic");
    ClassicVerdict v;
    auto n = static_cast<unsigned>(phi.variables().size());
    auto r = divides(phi, zimin_word(n), budget);
    v.division_status = r.status;
    v.unavoidable = r.found();
    v.division = r.morphism;
    if (v.unavoidable) v.chain = find_reduction(phi);
    return v;
}

SearchResult<SymbolicMorphism> divide_into_zimin_constrained(const Formula& phi, const VarSet& f,
                                                             SearchBudget budget) {
    require_reversal_free(phi, "divide_into_zimin_constrained");
    if (!is_free_set(phi, f)) throw std::invalid_argument("divide_into_zimin_constrained: set is not free");
    auto rest = decide_classic(erase_variables(phi, f), budget);
    if (!rest.unavoidable)
        throw std::invalid_argument("divide_into_zimin_constrained: deleting the free set leaves an avoidable formula");
    SymbolicMorphism pinned;
    for (const auto& y : f) pinned.emplace(y, Pattern({Sym("x1")}));
    auto n = static_cast<unsigned>(phi.variables().size());
    return divides(phi, zimin_word(n), budget, pinned);
}

}  // namespace revform
