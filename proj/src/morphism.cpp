#include "revform/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace revform {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::bounded_absent: return "bounded_absent";
        case SearchStatus::exhausted: return "exhausted";
    }
    return "?";
}

Word apply_concrete(const ConcreteMorphism& h, const Pattern& p) {
    std::vector<Letter> out;
    for (const auto& s : p) {
        auto it = h.find(s.var);
        if (it == h.end()) throw std::out_of_range("unassigned variable '" + s.var + "'");
        const auto& img = it->second.vec();
        if (s.mirrored)
            out.insert(out.end(), img.rbegin(), img.rend());
        else
            out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out));
}

Pattern apply_symbolic(const SymbolicMorphism& h, const Pattern& p) {
    std::vector<Sym> out;
    for (const auto& s : p) {
        auto it = h.find(s.var);
        if (it == h.end()) throw std::out_of_range("unassigned variable '" + s.var + "'");
        const auto& img = s.mirrored ? d_reverse(it->second) : it->second;
        out.insert(out.end(), img.begin(), img.end());
    }
    return Pattern(std::move(out));
}

ConcreteMorphism compose(const ConcreteMorphism& f, const SymbolicMorphism& h) {
    ConcreteMorphism out;
    for (const auto& [v, img] : h) out[v] = apply_concrete(f, img);
    return out;
}

namespace {

bool non_erasing_covers(const Formula& phi, const auto& h) {
    for (const auto& v : phi.variables()) {
        auto it = h.find(v);
        if (it == h.end() || it->second.size() == 0) return false;
    }
    return true;
}

bool is_pattern_factor(const Pattern& u, const Pattern& p) {
    if (u.size() > p.size()) return false;
    return std::search(p.begin(), p.end(), u.begin(), u.end()) != p.end();
}

}  // namespace

bool verify_occurrence(const Formula& phi, const Word& w, const ConcreteMorphism& h) {
    if (!non_erasing_covers(phi, h)) return false;
    return std::all_of(phi.begin(), phi.end(),
                       [&](const Pattern& p) { return is_factor(apply_concrete(h, p), w); });
}

bool verify_common_image(const Formula& phi, const Word& w, const ConcreteMorphism& h) {
    if (!verify_occurrence(phi, w, h)) return false;
    if (phi.empty()) return true;
    Word first = apply_concrete(h, phi.fragments().front());
    return std::all_of(phi.begin(), phi.end(), [&](const Pattern& p) { return apply_concrete(h, p) == first; });
}

bool verify_division(const Formula& phi, const Formula& psi, const SymbolicMorphism& h) {
    if (!non_erasing_covers(phi, h)) return false;
    for (const auto& p : phi) {
        Pattern img = apply_symbolic(h, p);
        if (std::none_of(psi.begin(), psi.end(), [&](const Pattern& q) { return is_pattern_factor(img, q); }))
            return false;
    }
    return true;
}

namespace detail {

CompiledFormula::CompiledFormula(const Formula& phi) {
    auto vars = phi.variables();
    names.assign(vars.begin(), vars.end());
    for (const auto& p : phi) {
        std::vector<Occ> frag;
        for (const auto& s : p) frag.push_back({index_of(s.var), s.mirrored});
        fragments.push_back(std::move(frag));
    }
}

std::size_t CompiledFormula::index_of(const std::string& name) const {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) throw std::out_of_range("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

namespace {

struct StepLimit {};

struct VecHash {
    std::size_t operator()(const std::vector<Letter>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto a : v) h = (h ^ a) * 1099511628211ull;
        return h;
    }
};

constexpr Letter kSeparator = ~Letter{0};

// Fragments are matched one at a time, longest first. Within a fragment,
// symbols are matched left to right at a fixed start position; a fresh
// variable takes the next 1, 2, ... letters of the target. At each fragment
// boundary the current assignment is deduplicated and the assigned runs of
// all later fragments must already be factors of a target.
class Matcher {
public:
    explicit Matcher(const MatchSpec& spec) : s_(spec), f_(*spec.formula) {
        const std::size_t nv = f_.names.size();
        img_.resize(nv);
        mimg_.resize(nv);
        assigned_.assign(nv, false);
        for (std::size_t v = 0; v < spec.pinned.size() && v < nv; ++v)
            if (spec.pinned[v]) assign(v, *spec.pinned[v]);

        order_.resize(f_.fragments.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return f_.fragments[a].size() > f_.fragments[b].size();
        });
        if (s_.anchored_fragment) {
            auto it = std::find(order_.begin(), order_.end(), *s_.anchored_fragment);
            std::rotate(order_.begin(), it, it + 1);
        }
        seen_.resize(order_.size());

        for (const auto& t : s_.targets) sound_bound_ = std::max(sound_bound_, t.size());
        bound_ = std::min(s_.max_image_len, sound_bound_);
    }

    MatchResult run() {
        MatchResult r;
        r.image_bound = bound_;
        try {
            if (solve(0)) {
                r.status = SearchStatus::found;
                r.images = img_;
            } else {
                r.status = s_.max_image_len >= sound_bound_ ? SearchStatus::absent : SearchStatus::bounded_absent;
            }
        } catch (const StepLimit&) {
            r.status = SearchStatus::exhausted;
        }
        r.steps = steps_;
        return r;
    }

private:
    std::vector<Letter> mirror(std::span<const Letter> seg) const {
        std::vector<Letter> out(seg.rbegin(), seg.rend());
        if (s_.symbolic)
            for (auto& a : out) a ^= 1u;
        return out;
    }

    void assign(std::size_t v, std::vector<Letter> image) {
        mimg_[v] = mirror(image);
        img_[v] = std::move(image);
        assigned_[v] = true;
    }

    void unassign(std::size_t v) { assigned_[v] = false; }

    const std::vector<Letter>& oriented(std::size_t v, bool mirrored) const { return mirrored ? mimg_[v] : img_[v]; }

    bool factor_of_targets(std::span<const Letter> u) const {
        if (s_.common_image && have_common_) return is_factor(u, common_);
        return std::any_of(s_.targets.begin(), s_.targets.end(),
                           [&](const std::vector<Letter>& t) { return is_factor(u, t); });
    }

    bool assigned_runs_ok(std::size_t from_level) const {
        std::vector<Letter> run;
        for (std::size_t lv = from_level; lv < order_.size(); ++lv) {
            for (const auto& occ : f_.fragments[order_[lv]]) {
                if (assigned_[occ.var]) {
                    const auto& im = oriented(occ.var, occ.mirrored);
                    run.insert(run.end(), im.begin(), im.end());
                    continue;
                }
                if (!run.empty() && !factor_of_targets(run)) return false;
                run.clear();
            }
            if (!run.empty() && !factor_of_targets(run)) return false;
            run.clear();
        }
        return true;
    }

    bool solve(std::size_t level) {
        if (level == order_.size()) return true;
        const auto& frag = f_.fragments[order_[level]];

        if (s_.common_image && level > 0) return match(level, 0, common_, 0, 0);
        if (s_.anchored_fragment && level == 0) {
            if (s_.targets.empty()) return false;
            return match(level, 0, s_.targets[0], 0, 0);
        }
        for (const auto& t : s_.targets) {
            if (t.size() < frag.size()) continue;
            for (std::size_t start = 0; start + frag.size() <= t.size(); ++start)
                if (match(level, 0, t, start, start)) return true;
        }
        return false;
    }

    bool finish_fragment(std::size_t level, const std::vector<Letter>& t, std::size_t start, std::size_t pos) {
        if (s_.common_image) {
            if (level == 0) {
                common_.assign(t.begin() + start, t.begin() + pos);
                have_common_ = true;
            } else if (pos != common_.size()) {
                return false;
            }
        }
        std::vector<Letter> key;
        for (std::size_t v = 0; v < assigned_.size(); ++v) {
            if (!assigned_[v]) continue;
            key.insert(key.end(), img_[v].begin(), img_[v].end());
            key.push_back(kSeparator);
        }
        if (!seen_[level].insert(std::move(key)).second) return false;
        if (!assigned_runs_ok(level + 1)) return false;
        bool ok = solve(level + 1);
        if (!ok && s_.common_image && level == 0) have_common_ = false;
        return ok;
    }

    bool match(std::size_t level, std::size_t k, const std::vector<Letter>& t, std::size_t start, std::size_t pos) {
        if (++steps_ > s_.max_steps) throw StepLimit{};
        const auto& frag = f_.fragments[order_[level]];
        if (k == frag.size()) return finish_fragment(level, t, start, pos);

        const auto [v, mirrored] = frag[k];
        if (assigned_[v]) {
            const auto& im = oriented(v, mirrored);
            if (pos + im.size() > t.size()) return false;
            if (!std::equal(im.begin(), im.end(), t.begin() + pos)) return false;
            return match(level, k + 1, t, start, pos + im.size());
        }

        const std::size_t rest = frag.size() - k - 1;
        if (pos + rest >= t.size()) return false;
        const std::size_t max_len = std::min(bound_, t.size() - pos - rest);
        for (std::size_t len = 1; len <= max_len; ++len) {
            if (s_.allowed && !s_.allowed(v, t[pos + len - 1])) break;
            std::span<const Letter> seg(t.data() + pos, len);
            assign(v, mirrored ? mirror(seg) : std::vector<Letter>(seg.begin(), seg.end()));
            if (match(level, k + 1, t, start, pos + len)) return true;
            unassign(v);
        }
        return false;
    }

    const MatchSpec& s_;
    const CompiledFormula& f_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<Letter>> img_, mimg_;
    std::vector<bool> assigned_;
    std::vector<std::unordered_set<std::vector<Letter>, VecHash>> seen_;
    std::vector<Letter> common_;
    bool have_common_ = false;
    std::uint64_t steps_ = 0;
    std::size_t sound_bound_ = 0;
    std::size_t bound_ = 0;
};

}  // namespace

MatchResult match(const MatchSpec& spec) {
    if (spec.formula == nullptr) throw std::invalid_argument("match: no formula");
    return Matcher(spec).run();
}

}  // namespace detail

namespace {

// Symbols read before the matcher first meets a variable it has already
// assigned; fewer means earlier pruning.
std::size_t fresh_prefix(const Formula& phi) {
    std::size_t total = 0;
    for (const auto& p : phi) {
        std::set<std::string> seen;
        std::size_t i = 0;
        while (i < p.size() && seen.insert(p[i].var).second) ++i;
        total += i;
    }
    return total;
}

SearchResult<ConcreteMorphism> concrete_search(const Formula& phi, const Word& w, SearchBudget budget, bool common) {
    SearchResult<ConcreteMorphism> out;
    if (phi.empty()) {
        out.status = SearchStatus::found;
        out.morphism = ConcreteMorphism{};
        return out;
    }
    // h maps phi into w iff it maps d_reverse(phi) into reverse(w), so search
    // whichever side constrains the assignment sooner.
    const Formula reversed = d_reverse(phi);
    const bool flip = fresh_prefix(reversed) < fresh_prefix(phi);
    detail::CompiledFormula cf(flip ? reversed : phi);
    detail::MatchSpec spec;
    spec.formula = &cf;
    spec.targets = {flip ? std::vector<Letter>(w.vec().rbegin(), w.vec().rend()) : w.vec()};
    spec.common_image = common;
    spec.max_image_len = budget.max_image_len;
    spec.max_steps = budget.max_steps;
    auto r = detail::match(spec);
    out.status = r.status;
    out.steps = r.steps;
    out.image_bound = r.image_bound;
    if (r.status == SearchStatus::found) {
        ConcreteMorphism h;
        for (std::size_t v = 0; v < cf.names.size(); ++v) h[cf.names[v]] = Word(r.images[v]);
        bool ok = common ? verify_common_image(phi, w, h) : verify_occurrence(phi, w, h);
        if (!ok) throw std::logic_error("occurrence search returned an unverifiable morphism");
        out.morphism = std::move(h);
    }
    return out;
}

}  // namespace

SearchResult<ConcreteMorphism> occurs(const Formula& phi, const Word& w, SearchBudget budget) {
    return concrete_search(phi, w, budget, false);
}

SearchResult<ConcreteMorphism> occurs_common_image(const Formula& phi, const Word& w, SearchBudget budget) {
    return concrete_search(phi, w, budget, true);
}

SearchResult<SymbolicMorphism> divides(const Formula& phi, const Formula& psi, SearchBudget budget,
                                       const SymbolicMorphism& pinned) {
    SearchResult<SymbolicMorphism> out;
    if (phi.empty()) {
        out.status = SearchStatus::found;
        out.morphism = SymbolicMorphism{};
        return out;
    }
    detail::CompiledFormula cf(phi);
    detail::CompiledFormula target(psi);

    // Pinned images may name variables outside psi; intern those too.
    std::vector<std::string> names = target.names;
    for (const auto& [v, img] : pinned)
        for (const auto& s : img)
            if (!std::binary_search(target.names.begin(), target.names.end(), s.var)) names.push_back(s.var);
    auto encode = [&](const Sym& s) {
        auto it = std::find(names.begin(), names.end(), s.var);
        return static_cast<Letter>(2 * (it - names.begin()) + (s.mirrored ? 1 : 0));
    };

    detail::MatchSpec spec;
    spec.formula = &cf;
    spec.symbolic = true;
    for (const auto& q : psi) {
        std::vector<Letter> t;
        for (const auto& s : q) t.push_back(encode(s));
        spec.targets.push_back(std::move(t));
    }
    spec.pinned.resize(cf.names.size());
    for (const auto& [v, img] : pinned) {
        auto it = std::lower_bound(cf.names.begin(), cf.names.end(), v);
        if (it == cf.names.end() || *it != v) continue;
        std::vector<Letter> enc;
        for (const auto& s : img) enc.push_back(encode(s));
        spec.pinned[static_cast<std::size_t>(it - cf.names.begin())] = std::move(enc);
    }
    spec.max_image_len = budget.max_image_len;
    spec.max_steps = budget.max_steps;

    auto r = detail::match(spec);
    out.status = r.status;
    out.steps = r.steps;
    out.image_bound = r.image_bound;
    if (r.status == SearchStatus::found) {
        SymbolicMorphism h;
        for (std::size_t v = 0; v < cf.names.size(); ++v) {
            std::vector<Sym> syms;
            for (auto a : r.images[v]) syms.emplace_back(names[a >> 1], (a & 1u) != 0);
            h.emplace(cf.names[v], Pattern(std::move(syms)));
        }
        if (!verify_division(phi, psi, h)) throw std::logic_error("division search returned an unverifiable morphism");
        out.morphism = std::move(h);
    }
    return out;
}

std::optional<bool> equivalent(const Formula& phi, const Formula& psi, SearchBudget budget) {
    auto a = divides(phi, psi, budget);
    if (a.status == SearchStatus::absent) return false;
    auto b = divides(psi, phi, budget);
    if (b.status == SearchStatus::absent) return false;
    if (a.found() && b.found()) return true;
    return std::nullopt;
}

}  // namespace revform
