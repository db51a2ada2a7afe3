// Patterns and formulas with reversal.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revform {

/// A variable or its mirror image. Names match [A-Za-z][A-Za-z0-9_]*.
struct Sym {
    std::string var;
    bool mirrored = false;

    Sym() = default;
    Sym(std::string v, bool m = false) : var(std::move(v)), mirrored(m) {}

    Sym toggled() const { return Sym(var, !mirrored); }
    std::string str() const { return mirrored ? var + "~" : var; }

    friend bool operator==(const Sym&, const Sym&) = default;
    friend auto operator<=>(const Sym&, const Sym&) = default;
};

bool is_valid_variable_name(std::string_view name);

/// Nonempty word over variables and their mirror images.
class Pattern {
public:
    Pattern() = default;
    /// Throws std::invalid_argument when `syms` is empty.
    explicit Pattern(std::vector<Sym> syms);

    /// Whitespace-separated symbols, e.g. "x y~ x".
    static Pattern parse(std::string_view text);

    std::size_t size() const { return syms_.size(); }
    const Sym& operator[](std::size_t i) const { return syms_[i]; }
    const std::vector<Sym>& syms() const { return syms_; }
    auto begin() const { return syms_.begin(); }
    auto end() const { return syms_.end(); }

    std::set<std::string> variables() const;
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<Sym> syms_;
};

/// Canonical sorted, duplicate-free set of fragments. The empty formula is allowed.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<Pattern> fragments);
    /// Sequences that end up empty are discarded.
    static Formula from_sequences(const std::vector<std::vector<Sym>>& seqs);

    static Formula parse(std::string_view text);
    std::string str() const;

    bool empty() const { return fragments_.empty(); }
    std::size_t size() const { return fragments_.size(); }
    const std::vector<Pattern>& fragments() const { return fragments_; }
    auto begin() const { return fragments_.begin(); }
    auto end() const { return fragments_.end(); }

    std::set<std::string> variables() const;
    std::size_t longest_fragment() const;
    bool has_mirrors() const;

    friend bool operator==(const Formula&, const Formula&) = default;
    friend auto operator<=>(const Formula&, const Formula&) = default;

private:
    std::vector<Pattern> fragments_;
};

/// Syntax error with the byte offset where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

enum class VarClass { two_way, one_way, absent };
const char* to_string(VarClass c);

Pattern flatten(const Pattern& p);
Formula flatten(const Formula& phi);

/// Reverse the sequence and toggle every mirror flag.
Pattern d_reverse(const Pattern& p);
Formula d_reverse(const Formula& phi);

/// Only variables occurring in `phi` are reported.
std::map<std::string, VarClass> classify_vars(const Formula& phi);

struct VarCounts {
    std::size_t two_way = 0;
    std::size_t one_way = 0;
};
VarCounts count_vars(const Formula& phi);

/// Swap orientations of every one-way variable that only occurs mirrored.
Formula normalize(const Formula& phi);

/// All length-`len` contiguous subsequences of all fragments.
std::set<Pattern> factors_of(const Formula& phi, std::size_t len);

/// Remove every occurrence (either orientation) of the given variables.
Formula erase_variables(const Formula& phi, const std::set<std::string>& vars);

/// Rename variables; names missing from the map are kept.
Formula rename(const Formula& phi, const std::map<std::string, std::string>& names);

}  // namespace revform
