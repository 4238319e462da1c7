#pragma once

#include "vko/exactlin.hpp"
#include "vko/simplicial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace vko {

/// Record of a passed general-position check for r-tuples.
struct GenericityCertificate {
    int r = 2;
    std::size_t tuplesChecked = 0;   // pairwise disjoint r-tuples with codimension sum >= d
    std::size_t transversePoints = 0; // tuples meeting in one interior point
    int attempts = 1;                 // samples drawn by randomGenericMap
};

/// Map K -> R^d, affine on every simplex, given by its vertex images.
class PLMap {
public:
    /// Throws DimensionMismatch unless there is one length-d vector per vertex.
    PLMap(SimplicialComplex complex, int d, std::vector<RationalVector> coords);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    int ambientDim() const noexcept { return d_; }
    const std::vector<RationalVector>& coords() const noexcept { return coords_; }
    /// Vertex images in the order the simplex lists its vertices.
    SimplexImage image(const Simplex& s) const;

    const std::optional<GenericityCertificate>& certificate() const noexcept { return certificate_; }
    /// Runs the general-position predicate for r-tuples and stores the
    /// certificate on success; throws GenericityViolation otherwise.
    void certify(int r);

private:
    friend PLMap randomGenericMap(const SimplicialComplex&, int, std::uint64_t, int, int);

    SimplicialComplex complex_;
    int d_ = 0;
    std::vector<RationalVector> coords_;
    std::optional<GenericityCertificate> certificate_;
};

/// Why the general-position predicate failed, or nullopt when it passed.
/// Checks every r-tuple of pairwise disjoint simplices whose codimensions sum
/// to at least d: equality requires empty or one interior transverse point,
/// excess requires disjoint flats.
std::optional<std::string> genericityFailure(const PLMap& f, int r, GenericityCertificate* stats = nullptr);

/// Vertices on the moment curve t -> (t, ..., t^d) at distinct random
/// rational parameters; resampled until certify(r) passes or `retries`
/// samples are used up (then GenericityViolation).
PLMap randomGenericMap(const SimplicialComplex& k, int d, std::uint64_t seed, int r = 2, int retries = 32);

/// Global r-fold point: r pairwise disjoint top simplices whose images meet.
struct RFoldPoint {
    std::vector<std::size_t> tuple; // indices into K.simplices(dim K), increasing
    FlatIntersection location;
    int sign = 0;
};

/// Sign of det[N(σ1) | ... | N(σr)] for simplex images in the given vertex
/// orders. Throws GenericityViolation unless the point is interior to every
/// simplex, DimensionMismatch unless the codimensions sum to d.
int rIntersectionSign(std::span<const SimplexImage> images, const FlatIntersection& point);
int rIntersectionSign(const PLMap& f, std::span<const Simplex> tuple, const FlatIntersection& point);

/// Algebraic intersection number of the oriented simplex images (vertex order
/// = orientation). Requires a certificate for r = tuple.size().
int intersectionNumber(const PLMap& f, std::span<const Simplex> tuple);

/// All unordered r-tuples of pairwise disjoint top simplices whose images
/// meet, in lexicographic order, each with the sign of its increasing tuple.
/// Requires dim K = k(r-1) and d = kr.
std::vector<RFoldPoint> globalRFoldPoints(const PLMap& f, int r);

/// v(g) mod 2 for `trials` fresh generic maps (r = 2).
std::vector<int> vanKampenParity(const SimplicialComplex& k, int d, int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Incremental flat intersection, used by every tuple enumeration.

/// Simplex image with the data needed to intersect its affine hull quickly.
struct PreparedSimplex {
    SimplexImage image;
    RationalVector base;                 // first vertex
    std::vector<RationalVector> normal;  // positive normal frame
    RationalMatrix coordinates;          // m x d; barycentric tail = coordinates (y - base)
    std::vector<Rational> lower, upper;  // bounding box

    int dimension() const noexcept { return static_cast<int>(image.size()) - 1; }
    int codimension() const noexcept { return static_cast<int>(normal.size()); }
};

/// Throws GenericityViolation for an affinely dependent image.
PreparedSimplex prepareSimplex(SimplexImage image);

/// Affine subspace { point + Σ t_i direction_i }.
struct AffineFlat {
    RationalVector point;
    std::vector<RationalVector> directions;
};

AffineFlat hullOf(const PreparedSimplex& s);
/// flat ∩ aff(s), or nullopt when empty.
std::optional<AffineFlat> restrictFlat(const AffineFlat& flat, const PreparedSimplex& s);
/// Classifies a fully restricted flat against the simplices it came from;
/// same semantics as intersectFlats.
FlatIntersectionResult classifyFlat(const AffineFlat& flat, std::span<const PreparedSimplex* const> simplices);
/// intersectFlats on prepared simplices, restricting one simplex at a time.
FlatIntersectionResult intersectPrepared(std::span<const PreparedSimplex* const> simplices);
/// Sign of the block determinant of the normal frames (codimensions must sum to d).
int normalFrameSign(std::span<const PreparedSimplex* const> simplices);
bool boxesMeet(std::span<const PreparedSimplex* const> simplices);

} // namespace vko
