#pragma once

#include <vector>

#include "anderson/matrix.hpp"

namespace anderson {

// Periodic box: the product of cycles of lengths dims[0..d-1], every side
// length > 2. Vertices are indexed row-major over coordinate tuples (the last
// coordinate varies fastest); that order is fixed so that potentials
// serialize stably as flat vectors.
class TorusGrid {
public:
    explicit TorusGrid(std::vector<int> dims);

    int dim_count() const { return static_cast<int>(dims_.size()); }
    int side(int axis) const { return dims_[axis]; }
    const std::vector<int>& dims() const { return dims_; }
    int size() const { return n_; }

    int index_of(const std::vector<int>& coords) const;
    std::vector<int> coords_of(int v) const;

    // The 2d neighbors of v (distinct even for side length 3), ascending.
    std::vector<int> neighbors(int v) const;

    // Graph distance: sum over axes of the wrapped coordinate difference.
    int distance(int a, int b) const;

    // All vertices within graph distance r of center, ascending.
    std::vector<int> ball(int center, int r) const;

private:
    void check_vertex(int v) const;

    std::vector<int> dims_;
    std::vector<int> strides_;
    int n_ = 0;
};

// Graph Laplacian: 2d on the diagonal, -1 on edges, zero row sums.
SymmetricMatrix laplacian(const TorusGrid& grid);

}  // namespace anderson
