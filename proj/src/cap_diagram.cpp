#include "foel/cap_diagram.hpp"

#include <algorithm>
#include <sstream>

namespace foel {

std::vector<int> CapDiagram::right_legs() const {
    std::vector<int> out;
    for (auto [l, r] : arcs) out.push_back(r);
    return out;
}

PlanarDiagram CapDiagram::to_planar() const {
    const int t = static_cast<int>(through.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < t; ++i) pairs.push_back({i, t + through[i]});
    for (auto [l, r] : arcs) pairs.push_back({t + l, t + r});
    return PlanarDiagram(t, L, pairs);
}

bool CapDiagram::operator<(const CapDiagram& o) const {
    if (L != o.L) return L < o.L;
    return right_legs() < o.right_legs();
}

std::string CapDiagram::str() const {
    std::ostringstream os;
    os << "caps(L=" << L << ";";
    for (auto [l, r] : arcs) os << " " << l + 1 << "-" << r + 1;
    os << ")";
    return os.str();
}

bool cap_from_right_legs(int L, const std::vector<int>& right_legs, CapDiagram* out) {
    std::vector<bool> is_right(L, false);
    for (int r : right_legs) {
        if (r < 0 || r >= L || is_right[r]) return false;
        is_right[r] = true;
    }
    std::vector<int> stack;
    std::vector<std::pair<int, int>> arcs;
    for (int p = 0; p < L; ++p) {
        if (is_right[p]) {
            if (stack.empty()) return false;  // no left leg available
            arcs.push_back({stack.back(), p});
            stack.pop_back();
        } else {
            stack.push_back(p);
        }
    }
    if (out) {
        std::sort(arcs.begin(), arcs.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        out->L = L;
        out->arcs = std::move(arcs);
        out->through = std::move(stack);
    }
    return true;
}

std::vector<CapDiagram> enumerate_caps(int L, int k) {
    if (L < 0 || k < 0 || 2 * k > L) throw DomainError("enumerate_caps needs 0 <= 2k <= L");
    std::vector<CapDiagram> out;
    std::vector<int> legs(k);
    // lexicographic combinations of right-leg candidates
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == k) {
            CapDiagram c;
            if (cap_from_right_legs(L, legs, &c)) out.push_back(std::move(c));
            return;
        }
        for (int p = next; p < L; ++p) {
            legs[depth] = p;
            self(self, p + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::vector<int>> cap_to_syt(const CapDiagram& c) {
    std::vector<bool> is_right(c.L, false);
    for (int r : c.right_legs()) is_right[r] = true;
    std::vector<std::vector<int>> rows(2);
    for (int p = 0; p < c.L; ++p) (is_right[p] ? rows[1] : rows[0]).push_back(p + 1);
    for (size_t i = 0; i < rows[1].size(); ++i) {
        if (rows[0][i] >= rows[1][i])
            throw InvariantViolation("cap diagram produced a non-standard tableau");
    }
    return rows;
}

CapDiagram syt_to_cap(int L, const std::vector<std::vector<int>>& rows) {
    if (rows.size() != 2) throw DomainError("expected two tableau rows");
    const auto& top = rows[0];
    const auto& bottom = rows[1];
    if (static_cast<int>(top.size() + bottom.size()) != L || top.size() < bottom.size())
        throw DomainError("bad tableau shape");
    std::vector<bool> seen(L + 1, false);
    for (const auto& row : rows) {
        if (!std::is_sorted(row.begin(), row.end())) throw DomainError("rows must increase");
        for (int e : row) {
            if (e < 1 || e > L || seen[e]) throw DomainError("bad tableau entry");
            seen[e] = true;
        }
    }
    for (size_t i = 0; i < bottom.size(); ++i)
        if (top[i] >= bottom[i]) throw DomainError("columns must increase");
    std::vector<int> legs;
    for (int e : bottom) legs.push_back(e - 1);
    CapDiagram out;
    if (!cap_from_right_legs(L, legs, &out))
        throw DomainError("tableau second row is not an admissible right-leg set");
    return out;
}

}  // namespace foel
