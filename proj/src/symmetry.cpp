#include "anderson/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace anderson {

namespace {

int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::string PermDescriptor::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Shift: {
            os << "shift(";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) os << ",";
                os << params[i];
            }
            os << ")";
            break;
        }
        case Kind::Reflection: {
            os << "reflection(";
            bool first = true;
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (params[i] < 0) continue;
                if (!first) os << ",";
                os << "axis" << i << "@" << params[i];
                first = false;
            }
            os << ")";
            break;
        }
        case Kind::AxisSwap: {
            os << "axis_swap(";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) os << ",";
                os << params[i];
            }
            os << ")";
            break;
        }
        case Kind::Composite: {
            os << "composite[";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << " then ";
                os << parts[i].to_string();
            }
            os << "]";
            break;
        }
    }
    return os.str();
}

bool VertexPermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image[i] != i) return false;
    return true;
}

int VertexPermutation::order() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = image[j];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

std::vector<int> VertexPermutation::fixed_points() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (image[i] == i) out.push_back(i);
    return out;
}

namespace {

// Canonical form of every automorphism this module works with: first permute
// axes, then negate some coordinates, then shift. Coordinate m of the result
// reads coordinate axis_src[m] of the argument:
//   out[m] = sign[m] * in[axis_src[m]] + offset[m]   (mod dims[m])
// Swapped axes always have equal side lengths, so composition stays closed.
struct Affine {
    std::vector<int> axis_src;
    std::vector<int> sign;  // +1 or -1
    std::vector<int> offset;

    bool operator==(const Affine&) const = default;
};

Affine affine_identity(int d) {
    Affine f;
    f.axis_src.resize(d);
    std::iota(f.axis_src.begin(), f.axis_src.end(), 0);
    f.sign.assign(d, 1);
    f.offset.assign(d, 0);
    return f;
}

// f after g: out = f(g(in)).
Affine compose(const TorusGrid& grid, const Affine& f, const Affine& g) {
    const int d = grid.dim_count();
    Affine h;
    h.axis_src.resize(d);
    h.sign.resize(d);
    h.offset.resize(d);
    for (int m = 0; m < d; ++m) {
        const int a = f.axis_src[m];
        h.axis_src[m] = g.axis_src[a];
        h.sign[m] = f.sign[m] * g.sign[a];
        h.offset[m] = mod(f.sign[m] * g.offset[a] + f.offset[m], grid.side(m));
    }
    return h;
}

std::vector<int> affine_image(const TorusGrid& grid, const Affine& f) {
    const int d = grid.dim_count();
    const int n = grid.size();
    std::vector<int> image(n);
    std::vector<int> out(d);
    for (int v = 0; v < n; ++v) {
        const std::vector<int> c = grid.coords_of(v);
        for (int m = 0; m < d; ++m)
            out[m] = mod(f.sign[m] * c[f.axis_src[m]] + f.offset[m], grid.side(m));
        image[v] = grid.index_of(out);
    }
    return image;
}

bool is_axis_identity(const Affine& f) {
    for (std::size_t m = 0; m < f.axis_src.size(); ++m)
        if (f.axis_src[m] != static_cast<int>(m)) return false;
    return true;
}

// Readable descriptor for a canonical element: plain shift / reflection /
// axis swap when the element is one, otherwise the swap-negate-shift
// decomposition spelled out as a composite.
PermDescriptor describe(const TorusGrid& grid, const Affine& f) {
    const int d = grid.dim_count();
    const bool axes_id = is_axis_identity(f);
    const bool all_plus = std::all_of(f.sign.begin(), f.sign.end(), [](int s) { return s == 1; });
    const bool no_shift = std::all_of(f.offset.begin(), f.offset.end(), [](int o) { return o == 0; });

    if (axes_id && all_plus) {
        PermDescriptor desc;
        desc.kind = PermDescriptor::Kind::Shift;
        desc.params = f.offset;
        return desc;
    }

    if (axes_id) {
        // r -> -r + offset reflects about center c with 2c = offset; solvable
        // always for odd sides, and for even offsets on even sides.
        PermDescriptor desc;
        desc.kind = PermDescriptor::Kind::Reflection;
        desc.params.assign(d, -1);
        bool ok = true;
        for (int m = 0; m < d && ok; ++m) {
            const int L = grid.side(m);
            if (f.sign[m] == 1) {
                ok = f.offset[m] == 0;
            } else if (L % 2 == 1) {
                desc.params[m] = mod(f.offset[m] * ((L + 1) / 2), L);
            } else if (f.offset[m] % 2 == 0) {
                desc.params[m] = f.offset[m] / 2;
            } else {
                ok = false;
            }
        }
        if (ok) return desc;
    }

    if (!axes_id && all_plus && no_shift) {
        PermDescriptor desc;
        desc.kind = PermDescriptor::Kind::AxisSwap;
        desc.params = f.axis_src;
        return desc;
    }

    PermDescriptor desc;
    desc.kind = PermDescriptor::Kind::Composite;
    if (!axes_id) {
        PermDescriptor swap;
        swap.kind = PermDescriptor::Kind::AxisSwap;
        swap.params = f.axis_src;
        desc.parts.push_back(std::move(swap));
    }
    if (!all_plus) {
        PermDescriptor refl;
        refl.kind = PermDescriptor::Kind::Reflection;
        refl.params.assign(d, -1);
        for (int m = 0; m < d; ++m)
            if (f.sign[m] == -1) refl.params[m] = 0;
        desc.parts.push_back(std::move(refl));
    }
    if (!no_shift) {
        PermDescriptor shift;
        shift.kind = PermDescriptor::Kind::Shift;
        shift.params = f.offset;
        desc.parts.push_back(std::move(shift));
    }
    if (desc.parts.size() == 1) return desc.parts[0];
    return desc;
}

VertexPermutation to_permutation(const TorusGrid& grid, const Affine& f) {
    VertexPermutation p;
    p.image = affine_image(grid, f);
    p.descriptor = describe(grid, f);
    return p;
}

// Adjacency preservation, i.e. exact commutation with the Laplacian.
void check_laplacian_commutes(const TorusGrid& grid, const std::vector<int>& image) {
    for (int v = 0; v < grid.size(); ++v)
        for (int u : grid.neighbors(v))
            if (grid.distance(image[v], image[u]) != 1)
                throw std::logic_error("automorphism_pool: element breaks adjacency");
}

}  // namespace

std::vector<int> descriptor_image(const TorusGrid& grid, const PermDescriptor& desc) {
    const int d = grid.dim_count();
    const int n = grid.size();

    auto apply_coords = [&](const PermDescriptor& dd, std::vector<int>& c) {
        auto self = [&](const PermDescriptor& x, std::vector<int>& cc, auto&& rec) -> void {
            switch (x.kind) {
                case PermDescriptor::Kind::Shift:
                    for (int m = 0; m < d; ++m) cc[m] = mod(cc[m] + x.params[m], grid.side(m));
                    break;
                case PermDescriptor::Kind::Reflection:
                    for (int m = 0; m < d; ++m)
                        if (x.params[m] >= 0) cc[m] = mod(2 * x.params[m] - cc[m], grid.side(m));
                    break;
                case PermDescriptor::Kind::AxisSwap: {
                    std::vector<int> src = cc;
                    for (int m = 0; m < d; ++m) cc[m] = src[x.params[m]];
                    break;
                }
                case PermDescriptor::Kind::Composite:
                    for (const PermDescriptor& part : x.parts) rec(part, cc, rec);
                    break;
            }
        };
        self(dd, c, self);
    };

    std::vector<int> image(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> c = grid.coords_of(v);
        apply_coords(desc, c);
        image[v] = grid.index_of(c);
    }
    return image;
}

VertexPermutation shift_perm(const TorusGrid& grid, int axis, int amount) {
    if (axis < 0 || axis >= grid.dim_count())
        throw std::out_of_range("shift_perm: axis out of range");
    Affine f = affine_identity(grid.dim_count());
    f.offset[axis] = mod(amount, grid.side(axis));
    return to_permutation(grid, f);
}

VertexPermutation reflection_perm(const TorusGrid& grid, const std::vector<int>& centers) {
    const int d = grid.dim_count();
    if (static_cast<int>(centers.size()) != d)
        throw std::invalid_argument("reflection_perm: need one center per axis");
    Affine f = affine_identity(d);
    for (int m = 0; m < d; ++m) {
        if (centers[m] < 0 || centers[m] >= grid.side(m))
            throw std::out_of_range("reflection_perm: center out of range");
        f.sign[m] = -1;
        f.offset[m] = mod(2 * centers[m], grid.side(m));
    }
    VertexPermutation p;
    p.image = affine_image(grid, f);
    p.descriptor.kind = PermDescriptor::Kind::Reflection;
    p.descriptor.params = centers;
    return p;
}

VertexPermutation axis_swap_perm(const TorusGrid& grid, int axis_a, int axis_b) {
    const int d = grid.dim_count();
    if (axis_a < 0 || axis_a >= d || axis_b < 0 || axis_b >= d)
        throw std::out_of_range("axis_swap_perm: axis out of range");
    if (grid.side(axis_a) != grid.side(axis_b))
        throw std::invalid_argument("axis_swap_perm: side lengths differ");
    Affine f = affine_identity(d);
    std::swap(f.axis_src[axis_a], f.axis_src[axis_b]);
    return to_permutation(grid, f);
}

bool commutes_with_potential(const VertexPermutation& perm, const Potential& v) {
    if (perm.image.size() != v.values.size())
        throw std::invalid_argument("commutes_with_potential: size mismatch");
    for (std::size_t x = 0; x < perm.image.size(); ++x)
        if (v.values[perm.image[x]] != v.values[x]) return false;
    return true;
}

namespace {

struct PoolBuild {
    std::vector<VertexPermutation> pool;
    bool truncated = false;
};

PoolBuild build_pool(const TorusGrid& grid, std::size_t cap) {
    const int d = grid.dim_count();

    std::vector<Affine> seeds;
    for (int axis = 0; axis < d; ++axis)
        for (int amount = 1; amount < grid.side(axis); ++amount) {
            Affine f = affine_identity(d);
            f.offset[axis] = amount;
            seeds.push_back(std::move(f));
        }
    for (int axis = 0; axis < d; ++axis)
        for (int center = 0; center < grid.side(axis); ++center) {
            Affine f = affine_identity(d);
            f.sign[axis] = -1;
            f.offset[axis] = mod(2 * center, grid.side(axis));
            seeds.push_back(std::move(f));
        }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (grid.side(a) == grid.side(b)) {
                Affine f = affine_identity(d);
                std::swap(f.axis_src[a], f.axis_src[b]);
                seeds.push_back(std::move(f));
            }

    PoolBuild out;
    std::set<std::vector<int>> seen;
    seen.insert(affine_image(grid, affine_identity(d)));  // exclude the identity

    std::vector<Affine> elements;
    auto try_insert = [&](const Affine& f) -> bool {
        std::vector<int> image = affine_image(grid, f);
        if (!seen.insert(image).second) return true;
        if (out.pool.size() >= cap) {
            out.truncated = true;
            return false;
        }
        check_laplacian_commutes(grid, image);
        VertexPermutation p;
        p.image = std::move(image);
        p.descriptor = describe(grid, f);
        out.pool.push_back(std::move(p));
        elements.push_back(f);
        return true;
    };

    for (const Affine& f : seeds)
        if (!try_insert(f)) return out;

    // Close under products, round by round: candidate = element then
    // generator applied on top.
    std::size_t round_begin = 0;
    while (round_begin < elements.size()) {
        const std::size_t round_end = elements.size();
        for (std::size_t i = round_begin; i < round_end; ++i)
            for (const Affine& g : seeds) {
                const Affine prod = compose(grid, g, elements[i]);
                if (!try_insert(prod)) return out;
            }
        round_begin = round_end;
    }
    return out;
}

}  // namespace

std::vector<VertexPermutation> automorphism_pool(const TorusGrid& grid, std::size_t cap) {
    PoolBuild built = build_pool(grid, cap);
    if (built.truncated)
        throw PoolCapError("automorphism_pool: group larger than the configured cap");
    return built.pool;
}

PoolResult automorphism_pool_capped(const TorusGrid& grid, std::size_t cap) {
    PoolBuild built = build_pool(grid, cap);
    return PoolResult{std::move(built.pool), built.truncated};
}

const char* to_string(CertReason r) {
    switch (r) {
        case CertReason::DegenerateSpectrum: return "degenerate-spectrum";
        case CertReason::VanishingAtFixedPoint: return "vanishing-at-fixed-point";
        case CertReason::OddNPermutation: return "odd-n-permutation";
    }
    return "unknown";
}

CertificateSearch find_certificate(const TorusGrid& grid, const Potential& v,
                                   const std::vector<VertexPermutation>& pool,
                                   bool truncated) {
    v.validate(grid);
    CertificateSearch result;
    result.pool_size = pool.size();
    for (const VertexPermutation& perm : pool) {
        if (!commutes_with_potential(perm, v)) continue;
        const int ord = perm.order();
        if (ord > 2) {
            result.status = CertSearchStatus::Found;
            result.certificate =
                SymmetryCertificate{perm, ord, perm.fixed_points(), CertReason::DegenerateSpectrum};
            return result;
        }
        std::vector<int> fixed = perm.fixed_points();
        if (!fixed.empty()) {
            result.status = CertSearchStatus::Found;
            result.certificate = SymmetryCertificate{perm, ord, std::move(fixed),
                                                     CertReason::VanishingAtFixedPoint};
            return result;
        }
        // Order 2 with no fixed point moves an even number of vertices, so it
        // cannot exist on an odd grid; on even grids it certifies nothing.
        assert(grid.size() % 2 == 0);
    }
    result.status = truncated ? CertSearchStatus::PoolCapExceeded : CertSearchStatus::NoneFound;
    return result;
}

CertificateSearch find_certificate(const TorusGrid& grid, const Potential& v, std::size_t cap) {
    PoolBuild built = build_pool(grid, cap);
    return find_certificate(grid, v, built.pool, built.truncated);
}

std::optional<int> reflection_center(const std::vector<double>& v) {
    const int L = static_cast<int>(v.size());
    for (int j = 0; j < L; ++j) {
        bool ok = true;
        for (int i = 1; i <= L / 2 && ok; ++i)
            ok = v[(j + i) % L] == v[((j - i) % L + L) % L];
        if (ok) return j;
    }
    return std::nullopt;
}

}  // namespace anderson
