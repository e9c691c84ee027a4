#include "anderson/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace anderson {

namespace {
constexpr int kMaxVertices = 1 << 20;
}

TorusGrid::TorusGrid(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("TorusGrid: dims must be nonempty");
    long long n = 1;
    for (int L : dims_) {
        if (L <= 2) throw std::invalid_argument("TorusGrid: every side length must exceed 2");
        n *= L;
        if (n > kMaxVertices) throw std::invalid_argument("TorusGrid: grid too large");
    }
    n_ = static_cast<int>(n);
    strides_.assign(dims_.size(), 1);
    for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
        strides_[i] = strides_[i + 1] * dims_[i + 1];
}

void TorusGrid::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("TorusGrid: vertex out of range");
}

int TorusGrid::index_of(const std::vector<int>& coords) const {
    if (coords.size() != dims_.size())
        throw std::invalid_argument("TorusGrid: coordinate count mismatch");
    int v = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= dims_[i])
            throw std::out_of_range("TorusGrid: coordinate out of range");
        v += coords[i] * strides_[i];
    }
    return v;
}

std::vector<int> TorusGrid::coords_of(int v) const {
    check_vertex(v);
    std::vector<int> coords(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        coords[i] = v / strides_[i];
        v -= coords[i] * strides_[i];
    }
    return coords;
}

std::vector<int> TorusGrid::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(2 * dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const int c = (v / strides_[i]) % dims_[i];
        const int base = v - c * strides_[i];
        const int up = (c + 1) % dims_[i];
        const int down = (c + dims_[i] - 1) % dims_[i];
        out.push_back(base + up * strides_[i]);
        out.push_back(base + down * strides_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int TorusGrid::distance(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    int d = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const int ca = (a / strides_[i]) % dims_[i];
        const int cb = (b / strides_[i]) % dims_[i];
        const int diff = std::abs(ca - cb);
        d += std::min(diff, dims_[i] - diff);
    }
    return d;
}

std::vector<int> TorusGrid::ball(int center, int r) const {
    check_vertex(center);
    if (r < 0) throw std::invalid_argument("TorusGrid: negative radius");
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (distance(center, v) <= r) out.push_back(v);
    return out;
}

SymmetricMatrix laplacian(const TorusGrid& grid) {
    const int n = grid.size();
    const double deg = 2.0 * grid.dim_count();
    SymmetricMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.set(v, v, deg);
        for (int u : grid.neighbors(v)) m.set(v, u, -1.0);
    }
    return m;
}

}  // namespace anderson
