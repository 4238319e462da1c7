#pragma once

#include "vko/plmap.hpp"
#include "vko/simplicial.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vko {

/// A chain of `complex` realized affinely by vertex coordinates.
struct CoordinatizedCycle {
    SimplicialComplex complex;
    std::vector<RationalVector> coords;
    IntegerChain cycle;
};

/// Fundamental cycle of a closed, connected, orientable pseudomanifold: ±1
/// on every top simplex, +1 on the first. Throws InvalidInput otherwise.
IntegerChain fundamentalCycle(const SimplicialComplex& k);

struct OrnamentComponent {
    SimplicialComplex complex; // triangulated sphere
    std::vector<RationalVector> coords;
    int orientation = 1;       // multiplies the fundamental cycle
};

/// r spheres of dimension k(r-1)-1 mapped into the boundary of [0,1]^{kr}
/// with empty common intersection.
struct Ornament {
    int d = 0;
    std::vector<OrnamentComponent> components;
    std::string name;

    int r() const noexcept { return static_cast<int>(components.size()); }
    int k() const noexcept { return r() > 0 ? d / r() : 0; }
};

/// Throws DimensionMismatch for inconsistent dimensions, InvalidInput for
/// coordinates off the cube boundary or components that are not oriented
/// closed pseudomanifolds, GenericityViolation when the empty common
/// intersection cannot be certified over the r-tuples of top simplices.
void validateOrnament(const Ornament& orn);

/// Oriented cycle of one component: orientation × fundamental cycle.
CoordinatizedCycle componentCycle(const Ornament& orn, std::size_t i);

/// Cones over the components from interior apexes, certified generic: every
/// r-tuple of top coned simplices is disjoint or meets transversely in one
/// interior point.
struct ConedExtension {
    std::vector<RationalVector> apexes;
    std::vector<SimplicialComplex> cones;              // apex = last vertex
    std::vector<std::vector<RationalVector>> coords;   // includes the apex
    int attempts = 0;
    long long linkingNumber = 0;  // Σ over tuples of coefficient product × r-intersection sign
    std::size_t intersections = 0;
};

ConedExtension conedExtension(const Ornament& orn, std::uint64_t seed, int retries = 32);

/// lk = gD1 · ... · gDr for the cones D_i over the component cycles.
long long rLinkingNumber(const Ornament& orn, std::uint64_t seed);

/// Replaces component i by its mirror image in a coordinate hyperplane
/// x_a = 1/2, preferring an axis that maps the vertex images onto themselves.
Ornament reflectComponent(const Ornament& orn, std::size_t i);

bool apexIndependence(const Ornament& orn, const std::vector<std::uint64_t>& seeds);

/// Linking number mod 2. Cycles of dimensions a + b = D - 1 in R^D: parity of
/// z1 ∩ Cone(z2). Cycles in the boundary of [0,1]^D with a + b = D - 2
/// (linking inside the sphere): parity of Cone(z1) ∩ Cone(z2).
int mod2Linking(const CoordinatizedCycle& z1, const CoordinatizedCycle& z2, std::uint64_t seed);

/// (|z1 ∩ C2 ∩ C3|, |C1 ∩ z2 ∩ C3|, |C1 ∩ C2 ∩ z3|) mod 2 for generic cones C_i
/// over z_i; needs pairwise disjoint supports and dimensions summing to 2D - 2.
std::array<int, 3> coneTripleTerms(const CoordinatizedCycle& z1, const CoordinatizedCycle& z2,
                                   const CoordinatizedCycle& z3, std::uint64_t seed);

/// Component i = boundary of the cube on all coordinate blocks except block i,
/// which is fixed at the center; facets carry the staircase triangulation.
Ornament productOrnament(int k, int r);

/// Boundaries of small pairwise disjoint cubes inside the facet x_0 = 0.
Ornament splitOrnament(int k, int r);

/// Three circles in the face z = 1 of [0,1]^3: two rectangles crossing in
/// p1, p2 (positive) and n1, n2 (negative) and a figure-8 winding +1 around
/// p1, -1 around p2 and 0 around n1, n2. Postconditions are checked on
/// construction.
Ornament cnld1Ornament();

struct Cnld1Certificate {
    std::array<RationalVector, 4> points;   // p1, p2, n1, n2 in the face chart (x, y)
    std::array<int, 4> crossingSigns{};     // sign of det(t2, t3) at each point
    std::array<int, 4> windings{};          // winding number of component 1
    std::size_t crossingCount = 0;          // crossings of components 2 and 3 found
    bool passed = false;
};

Cnld1Certificate cnld1Postconditions(const Ornament& orn);

/// Torus ∂[0,1]^2 × ∂[0,1]^2 (4×4 grid) and two boundaries of thin tetrahedra
/// near the disks spanned by its two circle factors; the supports are pairwise disjoint.
std::array<CoordinatizedCycle, 3> cliffordTriple();

} // namespace vko
