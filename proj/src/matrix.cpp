#include "anderson/matrix.hpp"

#include <cmath>

namespace anderson {

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("DenseMatrix: shape mismatch");
    DenseMatrix out(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i) {
        for (int k = 0; k < x.cols(); ++k) {
            const double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols(); ++j) out(i, j) += v * y(k, j);
        }
    }
    return out;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

std::vector<double> operator*(const SymmetricMatrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.order())
        throw std::invalid_argument("SymmetricMatrix: vector length mismatch");
    const int n = m.order();
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

}  // namespace anderson
