// Zimin formulas with reversal Z_{m,n}.
//
// Z_{m,0} is the block x1# ... xm# (each xi# standing for either xi or xi~),
// and Z_{m,n} = Z_{m,n-1} yn Z_{m,n-1}. Every fragment realizes the same slot
// sequence with an independent orientation per X slot, so factor queries work
// on the slot sequence alone.
#pragma once

#include "revform/formula.hpp"
#include "revform/morphism.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace revform {

using BigInt = boost::multiprecision::cpp_int;

std::string zimin_x(std::size_t i);  // "x<i>", 1-based
std::string zimin_y(std::size_t j);  // "y<j>", 1-based

struct ZiminStats {
    BigInt fragment_count;   // (2^m)^(2^n)
    BigInt fragment_length;  // (m+1) 2^n - 1
};
ZiminStats zimin_stats(unsigned m, unsigned n);

class ZiminTemplate {
public:
    struct Slot {
        bool two_way;
        std::size_t index;  // 1-based
    };

    /// Throws std::length_error when the slot sequence would be unreasonably long.
    ZiminTemplate(unsigned m, unsigned n);

    unsigned m() const { return m_; }
    unsigned n() const { return n_; }
    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t length() const { return slots_.size(); }

    /// "X1 y1 X1" style rendering; two-way slots are uppercase.
    std::string str() const;

    /// Slot sequence as concrete letters: X_i -> i-1, y_j -> m+j-1.
    std::vector<Letter> flat_letters() const;

    /// True iff `u` matches some window of the slot sequence.
    bool matches_factor(const Pattern& u) const;

private:
    unsigned m_, n_;
    std::vector<Slot> slots_;
};

/// Explicit fragment set; throws std::length_error above 65536 fragments.
Formula enumerate_fragments(unsigned m, unsigned n);

/// u is a factor of some fragment of Z_{m,n}. Foreign variables and
/// mirrored y's give false.
bool is_zimin_factor(const Pattern& u, unsigned m, unsigned n);

/// Division of a normalized formula into Z_{m,n}. Images are bounded by the
/// fragment length, so `absent` is a proof of non-division.
SearchResult<SymbolicMorphism> divides_zimin(const Formula& phi, unsigned m, unsigned n, SearchBudget budget = {});

/// N(m,0,k) = m, N(m,j,k) = k^l (l+1) + l with l = N(m,j-1,k): every word of
/// this length over k letters meets Z_{m,n} with a common fragment image.
BigInt sufficient_length(unsigned m, unsigned n, unsigned k);

}  // namespace revform
