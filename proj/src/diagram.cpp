#include "foel/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace foel {

namespace {

// Boundary points in planar cyclic order, cut at the bottom-left corner:
// bottom left-to-right, then top right-to-left. A matching is noncrossing
// exactly when it nests properly in this sequence.
std::vector<int> boundary_order(int a, int b) {
    std::vector<int> ord;
    ord.reserve(a + b);
    for (int i = 0; i < a; ++i) ord.push_back(i);
    for (int t = b - 1; t >= 0; --t) ord.push_back(a + t);
    return ord;
}

}  // namespace

PlanarDiagram::PlanarDiagram(int bottom, int top, const std::vector<std::pair<int, int>>& pairs)
    : bottom_(bottom), top_(top), pair_(bottom + top, -1) {
    if (bottom < 0 || top < 0) throw DomainError("negative boundary size");
    if ((bottom + top) % 2 != 0) throw DomainError("odd number of boundary points");
    if (static_cast<int>(pairs.size()) * 2 != bottom + top)
        throw ShapeError("pairing is not perfect");
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= bottom + top || y >= bottom + top || x == y)
            throw ShapeError("bad pair");
        if (pair_[x] != -1 || pair_[y] != -1) throw ShapeError("point paired twice");
        pair_[x] = y;
        pair_[y] = x;
    }
    validate();
}

void PlanarDiagram::validate() const {
    std::vector<int> ord = boundary_order(bottom_, top_);
    std::vector<int> pos(bottom_ + top_);
    for (int i = 0; i < bottom_ + top_; ++i) pos[ord[i]] = i;
    std::vector<int> stack;
    for (int p : ord) {
        int q = pair_[p];
        if (!stack.empty() && stack.back() == q) {
            stack.pop_back();
        } else if (pos[q] > pos[p]) {
            stack.push_back(p);
        } else {
            throw ShapeError("crossing strands");
        }
    }
    if (!stack.empty()) throw ShapeError("unmatched points");
}

PlanarDiagram PlanarDiagram::identity(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, n + i});
    return PlanarDiagram(n, n, pairs);
}

PlanarDiagram PlanarDiagram::cap() { return PlanarDiagram(2, 0, {{0, 1}}); }
PlanarDiagram PlanarDiagram::cup() { return PlanarDiagram(0, 2, {{0, 1}}); }

PlanarDiagram PlanarDiagram::nested_cap(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({i, 2 * k - 1 - i});
    return PlanarDiagram(2 * k, 0, pairs);
}

PlanarDiagram PlanarDiagram::nested_cup(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({i, 2 * k - 1 - i});
    return PlanarDiagram(0, 2 * k, pairs);
}

PlanarDiagram PlanarDiagram::u_gen(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("U_i index out of range");
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < n; ++p) {
        if (p == i - 1) {
            pairs.push_back({i - 1, i});            // bottom cap
            pairs.push_back({n + i - 1, n + i});    // top cup
        } else if (p != i) {
            pairs.push_back({p, n + p});
        }
    }
    return PlanarDiagram(n, n, pairs);
}

bool PlanarDiagram::is_identity() const {
    if (bottom_ != top_) return false;
    for (int i = 0; i < bottom_; ++i)
        if (pair_[i] != bottom_ + i) return false;
    return true;
}

std::vector<std::pair<int, int>> PlanarDiagram::bottom_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < bottom_; ++i)
        if (pair_[i] < bottom_ && i < pair_[i]) out.push_back({i, pair_[i]});
    return out;
}

std::vector<std::pair<int, int>> PlanarDiagram::top_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = bottom_; i < bottom_ + top_; ++i)
        if (pair_[i] >= bottom_ && i < pair_[i])
            out.push_back({i - bottom_, pair_[i] - bottom_});
    return out;
}

std::vector<std::pair<int, int>> PlanarDiagram::through_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < bottom_; ++i)
        if (pair_[i] >= bottom_) out.push_back({i, pair_[i] - bottom_});
    return out;
}

bool PlanarDiagram::operator==(const PlanarDiagram& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && pair_ == o.pair_;
}

bool PlanarDiagram::operator<(const PlanarDiagram& o) const {
    if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
    if (top_ != o.top_) return top_ < o.top_;
    return pair_ < o.pair_;
}

std::string PlanarDiagram::str() const {
    std::ostringstream os;
    os << "{" << bottom_ << "->" << top_ << ":";
    for (int i = 0; i < bottom_ + top_; ++i)
        if (i < pair_[i]) os << " (" << i << "," << pair_[i] << ")";
    os << "}";
    return os.str();
}

namespace {

using Matching = std::vector<std::pair<int, int>>;

// All noncrossing matchings of a linearly ordered point list: the first point
// pairs at odd distance, splitting into independent inside and outside parts.
std::vector<Matching> noncrossing_matchings(const std::vector<int>& pts) {
    if (pts.empty()) return {Matching{}};
    std::vector<Matching> out;
    for (size_t j = 1; j < pts.size(); j += 2) {
        std::vector<int> inside(pts.begin() + 1, pts.begin() + j);
        std::vector<int> outside(pts.begin() + j + 1, pts.end());
        for (const Matching& in : noncrossing_matchings(inside)) {
            for (const Matching& rest : noncrossing_matchings(outside)) {
                Matching m;
                m.push_back({pts[0], pts[j]});
                m.insert(m.end(), in.begin(), in.end());
                m.insert(m.end(), rest.begin(), rest.end());
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<PlanarDiagram> enumerate_tl_basis(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("negative boundary size");
    if ((a + b) % 2 != 0) throw DomainError("odd number of boundary points");
    std::vector<PlanarDiagram> out;
    for (const Matching& m : noncrossing_matchings(boundary_order(a, b)))
        out.push_back(PlanarDiagram(a, b, m));
    std::sort(out.begin(), out.end());
    return out;
}

PlanarDiagram bend_top_down(const PlanarDiagram& d) {
    int a = d.bottom_count(), b = d.top_count();
    if (b == 0) throw ShapeError("no top strand to bend");
    auto relabel = [&](int p) {
        if (p < a) return p;                  // old bottoms stay
        if (p == a + b - 1) return a;         // bent point: new rightmost bottom
        return p + 1;                         // remaining tops shift
    };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a + b; ++i)
        if (i < d.partner(i)) pairs.push_back({relabel(i), relabel(d.partner(i))});
    return PlanarDiagram(a + 1, b - 1, pairs);
}

PlanarDiagram bend_bottom_up(const PlanarDiagram& d) {
    int a = d.bottom_count(), b = d.top_count();
    if (a == 0) throw ShapeError("no bottom strand to bend");
    auto relabel = [&](int p) {
        if (p == a - 1) return a + b - 1;  // bent point: new rightmost top
        if (p < a - 1) return p;
        return p - 1;  // old tops shift down by one
    };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a + b; ++i)
        if (i < d.partner(i)) pairs.push_back({relabel(i), relabel(d.partner(i))});
    return PlanarDiagram(a - 1, b + 1, pairs);
}

PlanarDiagram tensor_diagram(const PlanarDiagram& f, const PlanarDiagram& g) {
    int af = f.bottom_count(), bf = f.top_count();
    int ag = g.bottom_count(), bg = g.top_count();
    auto mapf = [&](int p) { return p < af ? p : (af + ag) + (p - af); };
    auto mapg = [&](int p) { return p < ag ? af + p : (af + ag) + bf + (p - ag); };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < af + bf; ++i)
        if (i < f.partner(i)) pairs.push_back({mapf(i), mapf(f.partner(i))});
    for (int i = 0; i < ag + bg; ++i)
        if (i < g.partner(i)) pairs.push_back({mapg(i), mapg(g.partner(i))});
    return PlanarDiagram(af + ag, bf + bg, pairs);
}

namespace {

// Stacks dg over df; returns the boundary pairing and the number of closed loops.
PlanarDiagram stack_diagrams(const PlanarDiagram& df, const PlanarDiagram& dg, int* loops) {
    int a = df.bottom_count(), b = df.top_count(), c = dg.top_count();
    std::vector<bool> visited(b, false);
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> claimed(a + c, false);

    auto trace = [&](bool start_in_f, int start_pt) -> int {
        bool in_f = start_in_f;
        int pt = start_pt;
        for (;;) {
            if (in_f) {
                int q = df.partner(pt);
                if (q < a) return q;  // final bottom
                visited[q - a] = true;
                in_f = false;
                pt = q - a;
            } else {
                int q = dg.partner(pt);
                if (q >= b) return a + (q - b);  // final top
                visited[q] = true;
                in_f = true;
                pt = a + q;
            }
        }
    };

    for (int i = 0; i < a; ++i) {
        if (claimed[i]) continue;
        int end = trace(true, i);
        claimed[i] = true;
        claimed[end] = true;
        pairs.push_back({i, end});
    }
    for (int t = 0; t < c; ++t) {
        if (claimed[a + t]) continue;
        int end = trace(false, b + t);
        claimed[a + t] = true;
        claimed[end] = true;
        pairs.push_back({a + t, end});
    }

    int nloops = 0;
    for (int j = 0; j < b; ++j) {
        if (visited[j]) continue;
        // closed component: alternate f/g hops until we come back
        int cur = j;
        do {
            visited[cur] = true;
            int q = df.partner(a + cur);   // f-side hop
            visited[q - a] = true;
            cur = dg.partner(q - a);        // g-side hop
        } while (cur != j);
        ++nloops;
    }
    *loops = nloops;
    return PlanarDiagram(a, c, pairs);
}

}  // namespace

template <class C>
void DiagramSum<C>::add(const PlanarDiagram& d, const C& coeff) {
    if (d.bottom_count() != dom_ || d.top_count() != cod_)
        throw ShapeError("diagram shape does not match the combination");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <class C>
C DiagramSum<C>::coeff(const PlanarDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? C(0) : it->second;
}

template <class C>
DiagramSum<C> DiagramSum<C>::operator+(const DiagramSum& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_) throw ShapeError("adding mismatched shapes");
    DiagramSum out(*this);
    for (const auto& [d, c] : o.terms_) out.add(d, c);
    return out;
}

template <class C>
DiagramSum<C> DiagramSum<C>::operator-(const DiagramSum& o) const {
    if (dom_ != o.dom_ || cod_ != o.cod_) throw ShapeError("subtracting mismatched shapes");
    DiagramSum out(*this);
    for (const auto& [d, c] : o.terms_) out.add(d, C(0) - c);
    return out;
}

template <class C>
DiagramSum<C> DiagramSum<C>::operator*(const C& scalar) const {
    DiagramSum out(dom_, cod_);
    if (scalar.is_zero()) return out;
    for (const auto& [d, c] : terms_) out.add(d, c * scalar);
    return out;
}

template <class C>
bool DiagramSum<C>::operator==(const DiagramSum& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && terms_ == o.terms_;
}

template <class C>
std::string DiagramSum<C>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << d.str();
    }
    return os.str();
}

template <class C>
DiagramSum<C> compose(const DiagramSum<C>& f, const DiagramSum<C>& g) {
    if (f.cod() != g.dom())
        throw ShapeError("compose: codomain/domain mismatch");
    DiagramSum<C> out(f.dom(), g.cod());
    const LaurentPoly neg_loop = -q_integer(2);
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            int loops = 0;
            PlanarDiagram d = stack_diagrams(df, dg, &loops);
            C coeff = cf * cg;
            for (int l = 0; l < loops; ++l) coeff = coeff * C(neg_loop);
            out.add(d, coeff);
        }
    }
    return out;
}

template <class C>
DiagramSum<C> tensor(const DiagramSum<C>& f, const DiagramSum<C>& g) {
    DiagramSum<C> out(f.dom() + g.dom(), f.cod() + g.cod());
    for (const auto& [df, cf] : f.terms())
        for (const auto& [dg, cg] : g.terms())
            out.add(tensor_diagram(df, dg), cf * cg);
    return out;
}

DiagramCombination to_fraction_sum(const IntDiagramSum& s) {
    DiagramCombination out(s.dom(), s.cod());
    for (const auto& [d, c] : s.terms()) out.add(d, LaurentFraction(c));
    return out;
}

template class DiagramSum<LaurentPoly>;
template class DiagramSum<LaurentFraction>;
template DiagramSum<LaurentPoly> compose(const DiagramSum<LaurentPoly>&,
                                         const DiagramSum<LaurentPoly>&);
template DiagramSum<LaurentFraction> compose(const DiagramSum<LaurentFraction>&,
                                             const DiagramSum<LaurentFraction>&);
template DiagramSum<LaurentPoly> tensor(const DiagramSum<LaurentPoly>&,
                                        const DiagramSum<LaurentPoly>&);
template DiagramSum<LaurentFraction> tensor(const DiagramSum<LaurentFraction>&,
                                            const DiagramSum<LaurentFraction>&);

}  // namespace foel
