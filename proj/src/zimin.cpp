#include "revform/zimin.hpp"

#include <algorithm>
#include <stdexcept>

namespace revform {

std::string zimin_x(std::size_t i) { return "x" + std::to_string(i); }
std::string zimin_y(std::size_t j) { return "y" + std::to_string(j); }

ZiminStats zimin_stats(unsigned m, unsigned n) {
    ZiminStats s;
    BigInt blocks = BigInt(1) << n;
    if (blocks * m > 1'000'000) throw std::length_error("zimin_stats: fragment count exponent too large");
    s.fragment_count = BigInt(1) << static_cast<unsigned>(blocks * m);
    s.fragment_length = (BigInt(m) + 1) * blocks - 1;
    return s;
}

ZiminTemplate::ZiminTemplate(unsigned m, unsigned n) : m_(m), n_(n) {
    if (n > 24 || ((static_cast<std::uint64_t>(m) + 1) << n) > (1u << 22))
        throw std::length_error("ZiminTemplate: slot sequence too long");
    for (unsigned i = 1; i <= m; ++i) slots_.push_back({true, i});
    for (unsigned j = 1; j <= n; ++j) {
        std::vector<Slot> next = slots_;
        next.push_back({false, j});
        next.insert(next.end(), slots_.begin(), slots_.end());
        slots_ = std::move(next);
    }
}

std::string ZiminTemplate::str() const {
    std::string out;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (i) out += ' ';
        out += (slots_[i].two_way ? "X" : "y") + std::to_string(slots_[i].index);
    }
    return out;
}

std::vector<Letter> ZiminTemplate::flat_letters() const {
    std::vector<Letter> out;
    out.reserve(slots_.size());
    for (const auto& s : slots_)
        out.push_back(static_cast<Letter>(s.two_way ? s.index - 1 : m_ + s.index - 1));
    return out;
}

namespace {

// Slot letter for a symbol, or nullopt when the symbol can never appear.
std::optional<Letter> slot_letter(const Sym& s, unsigned m, unsigned n) {
    if (s.var.size() < 2 || (s.var[0] != 'x' && s.var[0] != 'y')) return std::nullopt;
    const std::string digits = s.var.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits[0] == '0' || digits.size() > 9)
        return std::nullopt;
    const unsigned long idx = std::stoul(digits);
    if (s.var[0] == 'x') {
        if (idx > m) return std::nullopt;
        return static_cast<Letter>(idx - 1);
    }
    if (idx > n || s.mirrored) return std::nullopt;
    return static_cast<Letter>(m + idx - 1);
}

}  // namespace

bool ZiminTemplate::matches_factor(const Pattern& u) const {
    std::vector<Letter> flat;
    for (const auto& s : u) {
        auto a = slot_letter(s, m_, n_);
        if (!a) return false;
        flat.push_back(*a);
    }
    return is_factor(flat, flat_letters());
}

Formula enumerate_fragments(unsigned m, unsigned n) {
    auto stats = zimin_stats(m, n);
    if (stats.fragment_count > 65536) throw std::length_error("enumerate_fragments: more than 65536 fragments");
    ZiminTemplate t(m, n);
    if (t.length() == 0) return Formula();
    std::vector<std::size_t> two_way_slots;
    for (std::size_t i = 0; i < t.length(); ++i)
        if (t.slots()[i].two_way) two_way_slots.push_back(i);

    std::vector<Pattern> frags;
    const std::uint64_t combos = std::uint64_t{1} << two_way_slots.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        std::vector<Sym> syms;
        std::size_t bit = 0;
        for (const auto& slot : t.slots()) {
            if (slot.two_way)
                syms.emplace_back(zimin_x(slot.index), (mask >> bit++ & 1u) != 0);
            else
                syms.emplace_back(zimin_y(slot.index), false);
        }
        frags.emplace_back(std::move(syms));
    }
    return Formula(std::move(frags));
}

bool is_zimin_factor(const Pattern& u, unsigned m, unsigned n) { return ZiminTemplate(m, n).matches_factor(u); }

// The orientation of x-letters inside an image never matters (every X slot
// takes both), so division reduces to a reversal-respecting occurrence in the
// flat slot word, with two-way variables barred from y-letters: their
// mirrored images would carry mirrored y's.
SearchResult<SymbolicMorphism> divides_zimin(const Formula& phi, unsigned m, unsigned n, SearchBudget budget) {
    SearchResult<SymbolicMorphism> out;
    if (phi.empty()) {
        out.status = SearchStatus::found;
        out.morphism = SymbolicMorphism{};
        return out;
    }
    ZiminTemplate tmpl(m, n);
    detail::CompiledFormula cf(phi);
    auto classes = classify_vars(phi);
    std::vector<bool> two_way(cf.names.size()), only_mirrored(cf.names.size(), true);
    for (std::size_t v = 0; v < cf.names.size(); ++v) two_way[v] = classes.at(cf.names[v]) == VarClass::two_way;
    for (const auto& frag : cf.fragments)
        for (const auto& occ : frag)
            if (!occ.mirrored) only_mirrored[occ.var] = false;

    detail::MatchSpec spec;
    spec.formula = &cf;
    spec.targets = {tmpl.flat_letters()};
    spec.allowed = [&](std::size_t v, Letter a) { return !two_way[v] || a < m; };
    spec.max_image_len = budget.max_image_len;
    spec.max_steps = budget.max_steps;

    auto r = detail::match(spec);
    out.status = r.status;
    out.steps = r.steps;
    out.image_bound = r.image_bound;
    if (r.status != SearchStatus::found) return out;

    SymbolicMorphism h;
    for (std::size_t v = 0; v < cf.names.size(); ++v) {
        std::vector<Sym> syms;
        for (auto a : r.images[v]) {
            if (a < m)
                syms.emplace_back(zimin_x(a + 1), false);
            else
                syms.emplace_back(zimin_y(a - m + 1), only_mirrored[v]);
        }
        h.emplace(cf.names[v], Pattern(std::move(syms)));
    }
    for (const auto& p : phi)
        if (!tmpl.matches_factor(apply_symbolic(h, p)))
            throw std::logic_error("divides_zimin produced an image outside Z_{m,n}");
    out.morphism = std::move(h);
    return out;
}

BigInt sufficient_length(unsigned m, unsigned n, unsigned k) {
    if (k < 1) throw std::invalid_argument("sufficient_length: k must be >= 1");
    BigInt len = m;
    for (unsigned j = 1; j <= n; ++j) {
        if (len > 100'000) throw std::overflow_error("sufficient_length: bound too large to represent");
        const auto l = static_cast<unsigned>(len);
        len = boost::multiprecision::pow(BigInt(k), l) * (len + 1) + len;
    }
    return len;
}

}  // namespace revform
