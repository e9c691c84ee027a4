#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anderson/grid.hpp"
#include "anderson/spectral.hpp"

namespace anderson {

// How a grid automorphism was built. A Composite applies its parts in order,
// first part first. Reflection params hold one center per axis, -1 on axes
// the reflection leaves alone. AxisSwap params map each axis to the axis it
// reads from.
struct PermDescriptor {
    enum class Kind { Shift, Reflection, AxisSwap, Composite };

    Kind kind = Kind::Shift;
    std::vector<int> params;
    std::vector<PermDescriptor> parts;

    std::string to_string() const;
};

struct VertexPermutation {
    std::vector<int> image;  // image[x] is where x is sent
    PermDescriptor descriptor;

    int size() const { return static_cast<int>(image.size()); }
    bool is_identity() const;
    int order() const;  // smallest m >= 1 with perm^m = identity
    std::vector<int> fixed_points() const;
};

// Evaluates a descriptor on the grid coordinates; the result must reproduce
// the permutation's image (tested invariant).
std::vector<int> descriptor_image(const TorusGrid& grid, const PermDescriptor& d);

// Rotation of one axis by `amount` (mod the side length; zero gives the
// identity permutation).
VertexPermutation shift_perm(const TorusGrid& grid, int axis, int amount);

// Simultaneous per-axis reflection r -> 2*center - r; always an involution.
// Takes one center per axis.
VertexPermutation reflection_perm(const TorusGrid& grid, const std::vector<int>& centers);

// Exchange of two axes of equal side length.
VertexPermutation axis_swap_perm(const TorusGrid& grid, int axis_a, int axis_b);

// A diagonal potential commutes with a permutation exactly when the values
// are constant on every orbit; this checks v(P(x)) == v(x) with exact
// equality.
bool commutes_with_potential(const VertexPermutation& perm, const Potential& v);

inline constexpr std::size_t kDefaultPoolCap = 1'000'000;

class PoolCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every non-identity element of the group generated by single-axis shifts,
// single-axis reflections, and swaps of equal-length axes, deduplicated by
// image. Deterministic order: shifts (by axis, then amount), reflections (by
// axis, then center), swaps, then closure products round by round. Each
// element is checked to preserve adjacency, i.e. to commute with the
// Laplacian. Throws PoolCapError if the group is larger than `cap`.
std::vector<VertexPermutation> automorphism_pool(const TorusGrid& grid,
                                                 std::size_t cap = kDefaultPoolCap);

// Non-throwing variant: whatever fit under the cap, plus a truncation flag.
struct PoolResult {
    std::vector<VertexPermutation> pool;
    bool truncated = false;
};
PoolResult automorphism_pool_capped(const TorusGrid& grid, std::size_t cap = kDefaultPoolCap);

enum class CertReason {
    DegenerateSpectrum,     // order > 2: the spectrum is degenerate for every t
    VanishingAtFixedPoint,  // order 2 with a fixed point: an eigenvector vanishes there for every t
    OddNPermutation,        // odd n fallback; unreachable via find_certificate (asserted)
};

const char* to_string(CertReason r);

struct SymmetryCertificate {
    VertexPermutation perm;        // non-identity, commutes with the Laplacian and with diag(v)
    int order = 0;
    std::vector<int> fixed_points;
    CertReason reason = CertReason::DegenerateSpectrum;
};

enum class CertSearchStatus { Found, NoneFound, PoolCapExceeded };

struct CertificateSearch {
    CertSearchStatus status = CertSearchStatus::NoneFound;
    std::optional<SymmetryCertificate> certificate;
    std::size_t pool_size = 0;
};

// Scans the automorphism pool in order for a non-identity permutation that
// commutes with v. Order > 2 certifies a permanently degenerate spectrum;
// order 2 with a fixed point certifies a permanently vanishing entry; an
// order-2 element without fixed points certifies nothing on its own (even n
// only; impossible for odd n) and the scan continues. If the pool was
// truncated at the cap and nothing was found, the result is PoolCapExceeded,
// never a false NoneFound.
CertificateSearch find_certificate(const TorusGrid& grid, const Potential& v,
                                   std::size_t cap = kDefaultPoolCap);
CertificateSearch find_certificate(const TorusGrid& grid, const Potential& v,
                                   const std::vector<VertexPermutation>& pool, bool truncated);

// Smallest j with v(j+i) == v(j-i) for all i (indices mod the cycle length),
// or nullopt. Cycle potentials only.
std::optional<int> reflection_center(const std::vector<double>& v);

}  // namespace anderson
