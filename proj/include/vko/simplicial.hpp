#pragma once

#include "vko/lattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vko {

using Vertex = int;
/// Strictly increasing vertex list; the increasing order is the canonical
/// orientation.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex on vertices 0..vertexCount-1, stored
/// fully expanded (every face of every dimension). Every vertex is a
/// 0-simplex. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closes the given simplices under faces. Throws InvalidInput on vertex
    /// indices out of range or repeated vertices inside a simplex.
    static SimplicialComplex fromMaximal(int vertexCount, std::vector<Simplex> maximal, std::string name = {});

    int vertexCount() const noexcept { return vertexCount_; }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(byDim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int q) const;
    std::size_t count(int q) const { return simplices(q).size(); }
    std::optional<std::size_t> indexOf(const Simplex& s) const;
    bool contains(const Simplex& s) const { return indexOf(s).has_value(); }
    /// Simplices that are not a proper face of another, sorted lexicographically.
    std::vector<Simplex> maximalSimplices() const;
    long eulerCharacteristic() const;

    const std::string& name() const noexcept { return name_; }
    void setName(std::string name) { name_ = std::move(name); }

    /// Distinguished subcomplexes, each given by its maximal simplices.
    const std::map<std::string, std::vector<Simplex>>& marked() const noexcept { return marked_; }
    /// Throws InvalidInput unless every simplex is in the complex.
    void mark(const std::string& label, std::vector<Simplex> simplices);
    /// The marked subcomplex as a complex on the same vertex set.
    SimplicialComplex markedSubcomplex(const std::string& label) const;

    bool hasSubcomplex(const std::vector<Simplex>& simplices) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertexCount_ == b.vertexCount_ && a.byDim_ == b.byDim_ && a.name_ == b.name_ &&
               a.marked_ == b.marked_;
    }

private:
    struct SimplexHash {
        std::size_t operator()(const Simplex& s) const noexcept;
    };

    int vertexCount_ = 0;
    std::vector<std::vector<Simplex>> byDim_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::string name_;
    std::map<std::string, std::vector<Simplex>> marked_;
};

/// Integer chain (or cochain) of a fixed dimension, keyed by simplex index.
struct IntegerChain {
    int dimension = 0;
    std::map<std::size_t, long long> coefficients;

    friend bool operator==(const IntegerChain&, const IntegerChain&) = default;
};
using IntegerCochain = IntegerChain;

IntegerChain reduceMod2(const IntegerChain& c);
/// Sum of q-simplices with coefficient 1 each (a Z/2 chain as a support set).
IntegerChain chainOf(const SimplicialComplex& k, const std::vector<Simplex>& simplices);

/// Rows indexed by (q-1)-simplices, columns by q-simplices;
/// ∂[v0..vq] = Σ_i (-1)^i [v0..v̂i..vq].
SparseIntMatrix boundaryOperator(const SimplicialComplex& k, int q);
IntegerChain boundary(const SimplicialComplex& k, const IntegerChain& c);

/// dim H_q(K; Z/2).
std::size_t bettiMod2(const SimplicialComplex& k, int q);

/// n-skeleton of the N-simplex on vertices 0..N.
SimplicialComplex skeleton(int n, int bigN);

/// a×b grid triangulation of the torus; vertex (i, j) has index i*b + j and
/// every grid square is split along the diagonal (i, j)-(i+1, j+1). Marked
/// "meridian" = S¹×{0} (vertices (i, 0)) and "parallel" = {0}×S¹ (vertices (0, j)).
SimplicialComplex torusGrid(int a, int b);

/// The two-dimensional complex (P₋ ∪_{p1=m1} M₋) ∪ T built from two punctured
/// 2-skeleta of the 6-simplex and a 3×3 torus. Vertex layout: p1..p7 → 0..6,
/// m2..m7 → 7..12 (m1 = p1), the four inner torus vertices → 13..16.
/// Marked: "p", "m", "S2_p", "S2_m", "meridian", "parallel", "P_minus",
/// "M_minus", "torus".
SimplicialComplex fktComplex();

/// K together with the cone apex * base, the apex being the new vertex
/// K.vertexCount(). Throws InvalidInput unless base is a subcomplex of K.
SimplicialComplex coneComplex(const SimplicialComplex& k, const std::vector<Simplex>& base);

/// Cone chain Σ z_σ [apex, σ] in apex-first orientation, expressed in the
/// canonical orientations of the coned complex (apex is the largest index).
IntegerChain coneChain(const SimplicialComplex& coned, Vertex apex, const SimplicialComplex& base,
                       const IntegerChain& z);

} // namespace vko
