#pragma once

#include <map>
#include <string>
#include <vector>

#include "foel/rational.hpp"

namespace foel {

/// Row-major sparse matrix over an exact or floating scalar. All structural
/// operations are dimension-checked; stored entries are nonzero. Optional
/// basis labels ride along for reports and exports.
template <class T>
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
        if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, T(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const T& v) {
        check(r, c);
        if (v == T(0)) data_[r].erase(c);
        else data_[r][c] = v;
    }
    void add(int r, int c, const T& v) {
        check(r, c);
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            if (!(v == T(0))) data_[r].emplace(c, v);
        } else {
            it->second += v;
            if (it->second == T(0)) data_[r].erase(it);
        }
    }
    T at(int r, int c) const {
        check(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? T(0) : it->second;
    }
    const std::map<int, T>& row(int r) const { return data_[r]; }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    SparseMatrix operator+(const SparseMatrix& o) const {
        require_same_shape(o, "add");
        SparseMatrix out(*this);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.data_[r]) out.add(r, c, v);
        return out;
    }
    SparseMatrix operator-(const SparseMatrix& o) const {
        require_same_shape(o, "subtract");
        SparseMatrix out(*this);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.data_[r]) out.add(r, c, T(0) - v);
        return out;
    }
    SparseMatrix operator*(const T& s) const {
        SparseMatrix out(rows_, cols_);
        if (s == T(0)) return out;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) out.set(r, c, v * s);
        return out;
    }
    SparseMatrix operator*(const SparseMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeError("matmul shape mismatch");
        SparseMatrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [k, v] : data_[r])
                for (const auto& [c, w] : o.data_[k]) out.add(r, c, v * w);
        return out;
    }
    bool operator==(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        return data_ == o.data_;
    }
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    SparseMatrix transpose() const {
        SparseMatrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) out.set(c, r, v);
        return out;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r])
                if (!(at(c, r) == v)) return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw ShapeError("matvec shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    /// Kronecker product, row-major index convention: (r1, r2) -> r1*o.rows + r2.
    SparseMatrix kron(const SparseMatrix& o) const {
        SparseMatrix out(rows_ * o.rows_, cols_ * o.cols_);
        for (int r1 = 0; r1 < rows_; ++r1)
            for (const auto& [c1, v1] : data_[r1])
                for (int r2 = 0; r2 < o.rows_; ++r2)
                    for (const auto& [c2, v2] : o.data_[r2])
                        out.set(r1 * o.rows_ + r2, c1 * o.cols_ + c2, v1 * v2);
        return out;
    }

    std::vector<std::string> row_labels, col_labels;

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw ShapeError("matrix index out of range");
    }
    void require_same_shape(const SparseMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError(std::string(what) + ": shape mismatch");
    }

    int rows_, cols_;
    std::vector<std::map<int, T>> data_;
};

using RatMatrix = SparseMatrix<Rational>;
using RealMatrix = SparseMatrix<double>;

inline RealMatrix to_real(const RatMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) out.set(r, c, v.get_d());
    return out;
}

}  // namespace foel
