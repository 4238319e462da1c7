#pragma once

#include "vko/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vko {

using IntegerVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swapRows(std::size_t a, std::size_t b);
    void swapCols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void addRowMultiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void addColMultiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negateRow(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntegerVector operator*(const IntMatrix& a, const IntegerVector& x);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// Sparse integer matrix stored as per-row coordinate lists, sorted by column.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::size_t, std::int64_t>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rowEntries_(rows) {}

    std::size_t rows() const noexcept { return rowEntries_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonZeros() const noexcept;

    /// Accumulates into (i, j); entries that cancel to zero are dropped.
    void add(std::size_t i, std::size_t j, std::int64_t value);
    std::int64_t at(std::size_t i, std::size_t j) const;
    const std::vector<Entry>& row(std::size_t i) const { return rowEntries_.at(i); }

    IntMatrix toDense() const;
    SparseIntMatrix transposed() const;
    IntegerVector operator*(const IntegerVector& x) const;

    /// Debug dump: one "row col value" line per nonzero.
    std::string toCoordinateText() const;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rowEntries_;
};

struct SNFDecomposition {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix S; // rows x cols, diagonal d1 | d2 | ... >= 0, zeros last
    IntMatrix V; // cols x cols, unimodular

    std::size_t rank() const;
};

/// U A V = S with unimodular U, V.
SNFDecomposition smithNormalForm(const IntMatrix& a);

struct UnsolvabilityCertificate {
    enum class Kind {
        ZeroRow,     // a row of the reduced system is 0 while its right-hand side is not
        Divisibility // s_i does not divide (U b)_i
    };
    Kind kind = Kind::ZeroRow;
    std::size_t index = 0;
    Integer divisor; // s_i (0 for ZeroRow)
    Integer value;   // the offending right-hand side entry

    std::string describe() const;
};

struct IntegerSolveResult {
    std::optional<IntegerVector> solution; // satisfies A x = b exactly when set
    std::optional<UnsolvabilityCertificate> certificate; // set when unsolvable

    bool solvable() const noexcept { return solution.has_value(); }
};

/// Dense route: y = U b, solvable iff s_i | y_i on the diagonal and y_i = 0
/// below the rank; x = V z.
IntegerSolveResult solveIntegerSystem(const IntMatrix& a, const IntegerVector& b);

struct SparseSolveOptions {
    std::size_t denseColumnLimit = 2000; // residual core densified only below this width
};

struct SparseSolveStats {
    std::size_t unitPivots = 0;
    std::size_t residualRows = 0;
    std::size_t residualCols = 0;
};

/// Sparse route for the large ±1 systems of the folded coboundary: Markowitz
/// elimination on unit pivots, then the dense normal-form route on the
/// remaining core. Throws BudgetExceeded when the core is wider than
/// options.denseColumnLimit.
IntegerSolveResult solveIntegerSystem(const SparseIntMatrix& a, const IntegerVector& b,
                                      const SparseSolveOptions& options = {},
                                      SparseSolveStats* stats = nullptr);

/// Bit-packed matrix over Z/2.
class Mod2Matrix {
public:
    Mod2Matrix() = default;
    Mod2Matrix(std::size_t rows, std::size_t cols);
    static Mod2Matrix fromSparse(const SparseIntMatrix& a);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);
    void flip(std::size_t i, std::size_t j);

    std::vector<std::uint8_t> operator*(const std::vector<std::uint8_t>& x) const;

private:
    friend std::optional<std::vector<std::uint8_t>> solveMod2System(const Mod2Matrix&, const std::vector<std::uint8_t>&);
    friend std::size_t rankMod2(Mod2Matrix);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t rankMod2(Mod2Matrix a);
/// One solution of A x = b over Z/2, or nullopt when inconsistent.
std::optional<std::vector<std::uint8_t>> solveMod2System(const Mod2Matrix& a, const std::vector<std::uint8_t>& b);

} // namespace vko
