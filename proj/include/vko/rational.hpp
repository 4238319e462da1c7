#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vko {

using Integer = mpz_class;
using Rational = mpq_class; // always kept canonical (lowest terms, positive denominator)
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of equal length).
    static RationalMatrix fromColumns(std::span<const RationalVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector column(std::size_t j) const;
    RationalMatrix transposed() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// "a/b" with b > 0 and gcd(a, b) = 1; integers are written "a/1".
std::string formatRational(const Rational& q);
/// Accepts "a/b" or "a"; throws InvalidInput on malformed text or zero denominator.
Rational parseRational(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& a);

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

} // namespace vko
