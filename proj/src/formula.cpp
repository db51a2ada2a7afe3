#include "revform/formula.hpp"

#include <algorithm>
#include <cctype>

namespace revform {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// Parses a symbol sequence in text[pos, end). Stops at '.' or end.
std::vector<Sym> parse_symbols(std::string_view text, std::size_t& pos) {
    std::vector<Sym> out;
    while (pos < text.size()) {
        char c = text[pos];
        if (is_space(c)) {
            ++pos;
            continue;
        }
        if (c == '.') break;
        if (!is_ident_start(c)) throw ParseError(std::string("unexpected character '") + c + "'", pos);
        std::size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        Sym s(std::string(text.substr(start, pos - start)));
        if (pos < text.size() && text[pos] == '~') {
            s.mirrored = true;
            ++pos;
        }
        if (pos < text.size() && !is_space(text[pos]) && text[pos] != '.')
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

bool is_valid_variable_name(std::string_view name) {
    if (name.empty() || !is_ident_start(name.front())) return false;
    return std::all_of(name.begin(), name.end(), is_ident_char);
}

Pattern::Pattern(std::vector<Sym> syms) : syms_(std::move(syms)) {
    if (syms_.empty()) throw std::invalid_argument("pattern must be nonempty");
    for (const auto& s : syms_)
        if (!is_valid_variable_name(s.var)) throw std::invalid_argument("invalid variable name '" + s.var + "'");
}

Pattern Pattern::parse(std::string_view text) {
    std::size_t pos = 0;
    auto syms = parse_symbols(text, pos);
    if (pos < text.size()) throw ParseError("unexpected '.' in pattern", pos);
    if (syms.empty()) throw ParseError("empty pattern", 0);
    return Pattern(std::move(syms));
}

std::set<std::string> Pattern::variables() const {
    std::set<std::string> out;
    for (const auto& s : syms_) out.insert(s.var);
    return out;
}

std::string Pattern::str() const {
    std::string out;
    for (std::size_t i = 0; i < syms_.size(); ++i) {
        if (i) out += ' ';
        out += syms_[i].str();
    }
    return out;
}

Formula::Formula(std::vector<Pattern> fragments) : fragments_(std::move(fragments)) {
    for (const auto& f : fragments_)
        if (f.size() == 0) throw std::invalid_argument("formula fragments must be nonempty");
    std::sort(fragments_.begin(), fragments_.end());
    fragments_.erase(std::unique(fragments_.begin(), fragments_.end()), fragments_.end());
}

Formula Formula::from_sequences(const std::vector<std::vector<Sym>>& seqs) {
    std::vector<Pattern> frags;
    for (const auto& s : seqs)
        if (!s.empty()) frags.emplace_back(s);
    return Formula(std::move(frags));
}

Formula Formula::parse(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && is_space(text[first])) ++first;
    std::size_t last = text.size();
    while (last > first && is_space(text[last - 1])) --last;
    if (first == last) throw ParseError("empty formula text (write {} for the empty formula)", first);
    if (text.substr(first, last - first) == "{}") return Formula();

    std::vector<Pattern> frags;
    std::size_t pos = 0;
    while (true) {
        std::size_t frag_start = pos;
        auto syms = parse_symbols(text, pos);
        if (syms.empty()) throw ParseError("empty fragment", pos < text.size() ? pos : frag_start);
        frags.emplace_back(std::move(syms));
        if (pos >= text.size()) break;
        ++pos;  // '.'
    }
    return Formula(std::move(frags));
}

std::string Formula::str() const {
    if (fragments_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < fragments_.size(); ++i) {
        if (i) out += " . ";
        out += fragments_[i].str();
    }
    return out;
}

std::set<std::string> Formula::variables() const {
    std::set<std::string> out;
    for (const auto& f : fragments_)
        for (const auto& s : f) out.insert(s.var);
    return out;
}

std::size_t Formula::longest_fragment() const {
    std::size_t best = 0;
    for (const auto& f : fragments_) best = std::max(best, f.size());
    return best;
}

bool Formula::has_mirrors() const {
    for (const auto& f : fragments_)
        for (const auto& s : f)
            if (s.mirrored) return true;
    return false;
}

const char* to_string(VarClass c) {
    switch (c) {
        case VarClass::two_way: return "two_way";
        case VarClass::one_way: return "one_way";
        case VarClass::absent: return "absent";
    }
    return "?";
}

Pattern flatten(const Pattern& p) {
    std::vector<Sym> out;
    out.reserve(p.size());
    for (const auto& s : p) out.emplace_back(s.var, false);
    return Pattern(std::move(out));
}

Formula flatten(const Formula& phi) {
    std::vector<Pattern> out;
    for (const auto& f : phi) out.push_back(flatten(f));
    return Formula(std::move(out));
}

Pattern d_reverse(const Pattern& p) {
    std::vector<Sym> out;
    out.reserve(p.size());
    for (auto it = p.syms().rbegin(); it != p.syms().rend(); ++it) out.push_back(it->toggled());
    return Pattern(std::move(out));
}

Formula d_reverse(const Formula& phi) {
    std::vector<Pattern> out;
    for (const auto& f : phi) out.push_back(d_reverse(f));
    return Formula(std::move(out));
}

std::map<std::string, VarClass> classify_vars(const Formula& phi) {
    std::map<std::string, std::pair<bool, bool>> seen;  // plain, mirrored
    for (const auto& f : phi)
        for (const auto& s : f) (s.mirrored ? seen[s.var].second : seen[s.var].first) = true;
    std::map<std::string, VarClass> out;
    for (const auto& [v, pm] : seen) out[v] = (pm.first && pm.second) ? VarClass::two_way : VarClass::one_way;
    return out;
}

VarCounts count_vars(const Formula& phi) {
    VarCounts c;
    for (const auto& [v, cls] : classify_vars(phi)) (cls == VarClass::two_way ? c.two_way : c.one_way)++;
    return c;
}

Formula normalize(const Formula& phi) {
    std::map<std::string, bool> has_plain;
    for (const auto& f : phi)
        for (const auto& s : f) has_plain[s.var] = has_plain[s.var] || !s.mirrored;
    std::vector<std::vector<Sym>> seqs;
    for (const auto& f : phi) {
        std::vector<Sym> seq;
        for (const auto& s : f) seq.push_back(has_plain[s.var] ? s : s.toggled());
        seqs.push_back(std::move(seq));
    }
    return Formula::from_sequences(seqs);
}

std::set<Pattern> factors_of(const Formula& phi, std::size_t len) {
    if (len < 1) throw std::invalid_argument("factors_of: len must be >= 1");
    std::set<Pattern> out;
    for (const auto& f : phi) {
        if (f.size() < len) continue;
        for (std::size_t i = 0; i + len <= f.size(); ++i)
            out.emplace(std::vector<Sym>(f.syms().begin() + i, f.syms().begin() + i + len));
    }
    return out;
}

Formula erase_variables(const Formula& phi, const std::set<std::string>& vars) {
    std::vector<std::vector<Sym>> seqs;
    for (const auto& f : phi) {
        std::vector<Sym> seq;
        for (const auto& s : f)
            if (!vars.count(s.var)) seq.push_back(s);
        seqs.push_back(std::move(seq));
    }
    return Formula::from_sequences(seqs);
}

Formula rename(const Formula& phi, const std::map<std::string, std::string>& names) {
    std::vector<std::vector<Sym>> seqs;
    for (const auto& f : phi) {
        std::vector<Sym> seq;
        for (const auto& s : f) {
            auto it = names.find(s.var);
            seq.emplace_back(it == names.end() ? s.var : it->second, s.mirrored);
        }
        seqs.push_back(std::move(seq));
    }
    return Formula::from_sequences(seqs);
}

}  // namespace revform
