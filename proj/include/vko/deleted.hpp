#pragma once

#include "vko/lattice.hpp"
#include "vko/simplicial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vko {

/// Ordered tuple of simplex ids (see DeletedProductComplex::simplexId).
using Cell = std::vector<std::uint32_t>;
/// perm[i] = π(i); acts on cells by (π·e)_{π(i)} = e_i.
using Permutation = std::vector<int>;

enum class OrbitOrder {
    Lexicographic,       // representative = increasing tuple
    ReverseLexicographic // representative = decreasing tuple
};

struct DeletedProductOptions {
    OrbitOrder order = OrbitOrder::Lexicographic;
    std::size_t cellBudget = 1'000'000;
};

/// Per-cell orbit data: the cell equals π·rep for its representative rep.
struct OrbitEntry {
    std::size_t orbit = 0;
    Permutation perm;
    int koszul = 1;    // Koszul sign of π on rep
    int permSign = 1;  // sign(π)
};

/// The r-fold deleted product of K: products of r pairwise vertex-disjoint
/// simplices, with the symmetric group permuting the factors.
class DeletedProductComplex {
public:
    const SimplicialComplex& base() const noexcept { return base_; }
    int r() const noexcept { return r_; }
    int topDimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
    OrbitOrder order() const noexcept { return order_; }

    /// Cells of dimension q in lexicographic order of their id tuples.
    const std::vector<Cell>& cells(int q) const;
    std::size_t cellCount() const noexcept;
    std::optional<std::size_t> cellIndex(int q, const Cell& c) const;

    const OrbitEntry& orbitOf(int q, std::size_t cell) const { return orbitEntries_.at(q).at(cell); }
    std::size_t orbitCount(int q) const;
    /// Cell index of the representative of the given orbit.
    std::size_t representative(int q, std::size_t orbit) const { return representatives_.at(q).at(orbit); }

    /// Simplex ids order simplices by dimension, then lexicographically.
    std::uint32_t simplexId(int dim, std::size_t index) const { return static_cast<std::uint32_t>(offsets_.at(dim) + index); }
    int simplexDim(std::uint32_t id) const;
    const Simplex& simplex(std::uint32_t id) const;
    int cellDimension(const Cell& c) const;

    /// Weight w(π, e) = sign(π)^{kr} · Koszul(π, e) of a cell in the orbit table.
    int weight(int q, std::size_t cell, int k) const;

private:
    friend DeletedProductComplex deletedProduct(const SimplicialComplex&, int, const DeletedProductOptions&);

    SimplicialComplex base_;
    int r_ = 2;
    OrbitOrder order_ = OrbitOrder::Lexicographic;
    std::vector<std::size_t> offsets_; // first id per simplex dimension
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<OrbitEntry>> orbitEntries_;
    std::vector<std::vector<std::size_t>> representatives_;
};

/// Throws InvalidInput for r < 2, BudgetExceeded above options.cellBudget cells.
DeletedProductComplex deletedProduct(const SimplicialComplex& k, int r, const DeletedProductOptions& options = {});

/// Leibniz boundary: Σ_i (-1)^{dim σ1 + ... + dim σ_{i-1}} σ1 × ... × ∂σi × ... × σr,
/// as (cell index in dimension q-1, coefficient) pairs.
std::vector<std::pair<std::size_t, int>> cellBoundary(const DeletedProductComplex& x, int q, std::size_t cell);

int permutationSign(const Permutation& p);
/// (-1)^{Σ_{i<j, π(i)>π(j)} dim σi · dim σj}
int koszulSign(const Permutation& p, const std::vector<int>& dims);
/// w(π, e) = sign(π)^{kr} · koszulSign(π, dims of e)
int koszulWeight(const Permutation& p, const std::vector<int>& dims, int k);
Cell applyPermutation(const Permutation& p, const Cell& c);
Permutation compose(const Permutation& a, const Permutation& b); // (a∘b)(i) = a(b(i))

/// Full coboundary δ: C^{q-1} -> C^q (rows q-cells, columns (q-1)-cells).
SparseIntMatrix coboundaryMatrix(const DeletedProductComplex& x, int q);

/// Coboundary on w-equivariant cochains stored on orbit representatives
/// (rows q-orbits, columns (q-1)-orbits).
SparseIntMatrix equivariantCoboundaryMatrix(const DeletedProductComplex& x, int q, int k);

/// Extends values on representatives to every q-cell: φ(π·rep) = w(π, rep) φ(rep).
IntegerVector unfoldCochain(const DeletedProductComplex& x, int q, int k, const IntegerVector& folded);

/// Text dump, one "dim: (σ1|σ2|...) orbit-rep π w" line per cell.
std::string dumpCells(const DeletedProductComplex& x, int k);

} // namespace vko
