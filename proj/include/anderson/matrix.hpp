#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace anderson {

// Dense row-major matrix. Holds eigenvector bases and the (non-symmetric)
// propagator products. Desk scale only; no sparsity.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative size");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    double max_abs() const;

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

// Symmetric matrix with full dense storage. All mutation goes through set()
// and add(), which write both triangles, so A(i,j) == A(j,i) always holds.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n, double fill = 0.0)
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
        if (n < 0) throw std::invalid_argument("SymmetricMatrix: negative order");
    }

    static SymmetricMatrix identity(int n) {
        SymmetricMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    void add(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] += v;
        if (i != j) a_[static_cast<std::size_t>(j) * n_ + i] += v;
    }

    double max_abs() const;

    // Raw row-major buffer; used by the eigensolver to seed its working copy.
    const std::vector<double>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

std::vector<double> operator*(const SymmetricMatrix& m, const std::vector<double>& x);

}  // namespace anderson
