#pragma once

#include <map>
#include <utility>
#include <vector>

#include "foel/laurent.hpp"

namespace foel {

/// Noncrossing perfect matching between a bottom boundary points (the domain)
/// and b top points (the codomain). Points are numbered 0..a-1 bottom
/// left-to-right, then a..a+b-1 top left-to-right. Diagrams are read bottom to
/// top; composition stacks the second diagram on top of the first.
///
/// The stored involution is the canonical form: equal diagrams compare equal.
class PlanarDiagram {
public:
    PlanarDiagram(int bottom, int top, const std::vector<std::pair<int, int>>& pairs);

    static PlanarDiagram identity(int n);
    /// Cap: 2 -> 0 (epsilon). Cup: 0 -> 2 (delta).
    static PlanarDiagram cap();
    static PlanarDiagram cup();
    /// k nested caps: 2k -> 0, pairing (i, 2k-1-i). Nested cups: 0 -> 2k.
    static PlanarDiagram nested_cap(int k);
    static PlanarDiagram nested_cup(int k);
    /// U_i on n strands (1-based i, 1 <= i <= n-1).
    static PlanarDiagram u_gen(int n, int i);

    int bottom_count() const { return bottom_; }
    int top_count() const { return top_; }
    int partner(int point) const { return pair_[point]; }
    bool is_identity() const;

    /// Pairs with both ends on the bottom boundary, as (left, right) positions.
    std::vector<std::pair<int, int>> bottom_pairs() const;
    /// Pairs with both ends on the top boundary, positions 0-based within the top row.
    std::vector<std::pair<int, int>> top_pairs() const;
    /// Through strands as (bottom position, top position within the top row).
    std::vector<std::pair<int, int>> through_pairs() const;

    bool operator==(const PlanarDiagram& o) const;
    bool operator<(const PlanarDiagram& o) const;

    std::string str() const;

private:
    void validate() const;

    int bottom_ = 0, top_ = 0;
    std::vector<int> pair_;
};

/// All noncrossing matchings in Hom(a, b), sorted by canonical form.
/// For a = b = n the count is the Catalan number C_n.
std::vector<PlanarDiagram> enumerate_tl_basis(int a, int b);

/// Moves the rightmost top point around the right side down to the bottom,
/// giving Hom(a+1, b-1). Pure relabeling (planar isotopy), no loop factors.
PlanarDiagram bend_top_down(const PlanarDiagram& d);
/// Inverse bend: rightmost bottom point up, Hom(a-1, b+1).
PlanarDiagram bend_bottom_up(const PlanarDiagram& d);

/// Formal sum of diagrams in a fixed Hom(a, b) with coefficients in C
/// (LaurentPoly for fraction-free work, LaurentFraction in general).
/// Zero coefficients are never stored.
template <class C>
class DiagramSum {
public:
    DiagramSum(int dom, int cod) : dom_(dom), cod_(cod) {}
    explicit DiagramSum(const PlanarDiagram& d, C coeff = C(1))
        : dom_(d.bottom_count()), cod_(d.top_count()) {
        add(d, coeff);
    }

    static DiagramSum identity(int n) { return DiagramSum(PlanarDiagram::identity(n)); }

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<PlanarDiagram, C>& terms() const { return terms_; }

    void add(const PlanarDiagram& d, const C& coeff);
    C coeff(const PlanarDiagram& d) const;

    DiagramSum operator+(const DiagramSum& o) const;
    DiagramSum operator-(const DiagramSum& o) const;
    DiagramSum operator*(const C& scalar) const;
    bool operator==(const DiagramSum& o) const;
    bool operator!=(const DiagramSum& o) const { return !(*this == o); }

    std::string str() const;

private:
    int dom_, cod_;
    std::map<PlanarDiagram, C> terms_;
};

using DiagramCombination = DiagramSum<LaurentFraction>;  // general TL morphism
using IntDiagramSum = DiagramSum<LaurentPoly>;           // fraction-free carrier

/// Stacks g on top of f (g after f). Every closed loop evaluates to -[2].
PlanarDiagram tensor_diagram(const PlanarDiagram& f, const PlanarDiagram& g);

template <class C>
DiagramSum<C> compose(const DiagramSum<C>& f, const DiagramSum<C>& g);
template <class C>
DiagramSum<C> tensor(const DiagramSum<C>& f, const DiagramSum<C>& g);

DiagramCombination to_fraction_sum(const IntDiagramSum& s);

extern template class DiagramSum<LaurentPoly>;
extern template class DiagramSum<LaurentFraction>;
extern template DiagramSum<LaurentPoly> compose(const DiagramSum<LaurentPoly>&,
                                                const DiagramSum<LaurentPoly>&);
extern template DiagramSum<LaurentFraction> compose(const DiagramSum<LaurentFraction>&,
                                                    const DiagramSum<LaurentFraction>&);
extern template DiagramSum<LaurentPoly> tensor(const DiagramSum<LaurentPoly>&,
                                               const DiagramSum<LaurentPoly>&);
extern template DiagramSum<LaurentFraction> tensor(const DiagramSum<LaurentFraction>&,
                                                   const DiagramSum<LaurentFraction>&);

}  // namespace foel
