#pragma once

#include "vko/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace vko {

/// Vertex images of an affine simplex in R^d, listed in orientation order.
using SimplexImage = std::vector<RationalVector>;

/// Reduced row echelon form computed in place; returns the pivot column of
/// each nonzero row.
std::vector<std::size_t> reduceToEchelon(RationalMatrix& m);

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
int signDet(const RationalMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column of the echelon form.
std::vector<RationalVector> kernelBasis(const RationalMatrix& m);

struct LinearSolution {
    enum class Kind { Inconsistent, Unique, Underdetermined };
    Kind kind = Kind::Inconsistent;
    RationalVector particular;        // meaningful unless Inconsistent
    std::vector<RationalVector> kernel; // nonempty iff Underdetermined
};

/// Exact solution set of a x = b by rank computation.
LinearSolution solveLinear(const RationalMatrix& a, const RationalVector& b);

/// Tangent frame (v1 - v0, ..., vm - v0) of a simplex image.
std::vector<RationalVector> tangentFrame(const SimplexImage& simplex);

/// Normal frame N of an oriented m-simplex in R^d: d - m vectors spanning the
/// orthogonal complement of the tangent frame T, unnormalized, with
/// det[T | N] > 0. Throws GenericityViolation when the vertices are affinely
/// dependent.
std::vector<RationalVector> positiveNormalFrame(const SimplexImage& simplex);

/// y in f(sigma_1) ∩ ... ∩ f(sigma_r) together with its barycentric
/// coordinates in each simplex.
struct FlatIntersection {
    RationalVector point;
    std::vector<RationalVector> barycentric;
};

struct FlatIntersectionResult {
    enum class Kind {
        Empty,         // flats disjoint, or their unique common point lies outside a simplex
        Interior,      // unique common point, every barycentric coordinate in (0, 1)
        Boundary,      // unique common point on the closed simplices with some coordinate 0
        NonTransverse, // the common solution set has positive dimension
    };
    Kind kind = Kind::Empty;
    std::optional<FlatIntersection> location; // set for Interior and Boundary
};

/// Solves the barycentric system Σ_j λ_ij v_ij = Σ_j λ_0j v_0j,
/// Σ_j λ_ij = 1 for a tuple of simplex images in a common R^d.
FlatIntersectionResult intersectFlats(std::span<const SimplexImage> simplices);

/// True when every barycentric vector sums to 1 and rebuilds the point exactly.
bool reconstructs(const FlatIntersection& x, std::span<const SimplexImage> simplices);

/// Whether the convex hulls of two point sets share a point, decided exactly
/// as a linear feasibility problem (also when their affine hulls meet in a
/// positive-dimensional flat).
bool convexHullsMeet(const SimplexImage& a, const SimplexImage& b);

} // namespace vko
