#include "vko/exactlin.hpp"

#include "vko/error.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace vko {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::fromColumns(std::span<const RationalVector> columns, std::size_t rows)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw DimensionMismatch("column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t j) const
{
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product: inner dimensions differ");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("matrix-vector product: dimensions differ");
    RationalVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

std::string formatRational(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parseRational(std::string_view text)
{
    auto isInteger = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!isInteger(num) || !isInteger(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw InvalidInput("zero denominator in rational: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference of different lengths");
    RationalVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum of different lengths");
    RationalVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

RationalVector operator*(const Rational& s, const RationalVector& a)
{
    RationalVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = s * a[i];
    return c;
}

std::vector<std::size_t> reduceToEchelon(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m)
{
    return reduceToEchelon(m).size();
}

Rational determinant(RationalMatrix m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(m(p, col)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(m(i, col)) == 0)
                continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

int signDet(const RationalMatrix& m)
{
    return sgn(determinant(m));
}

std::vector<RationalVector> kernelBasis(const RationalMatrix& m)
{
    RationalMatrix e = m;
    auto pivots = reduceToEchelon(e);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : pivots)
        isPivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free])
            continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -e(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solveLinear(const RationalMatrix& a, const RationalVector& b)
{
    if (a.rows() != b.size())
        throw DimensionMismatch("right-hand side length differs from row count");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = reduceToEchelon(aug);
    LinearSolution sol;
    if (!pivots.empty() && pivots.back() == a.cols())
        return sol;
    sol.particular.assign(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.particular[pivots[r]] = aug(r, a.cols());
    if (pivots.size() == a.cols()) {
        sol.kind = LinearSolution::Kind::Unique;
        return sol;
    }
    sol.kind = LinearSolution::Kind::Underdetermined;
    sol.kernel = kernelBasis(a);
    return sol;
}

std::vector<RationalVector> tangentFrame(const SimplexImage& simplex)
{
    std::vector<RationalVector> t;
    for (std::size_t i = 1; i < simplex.size(); ++i)
        t.push_back(simplex[i] - simplex[0]);
    return t;
}

std::vector<RationalVector> positiveNormalFrame(const SimplexImage& simplex)
{
    if (simplex.empty())
        throw InvalidInput("normal frame of an empty simplex");
    const std::size_t d = simplex[0].size();
    const std::size_t m = simplex.size() - 1;
    if (m > d)
        throw GenericityViolation("simplex has more vertices than an affinely independent set in R^d");
    auto tangent = tangentFrame(simplex);
    RationalMatrix tt(m, d);
    for (std::size_t i = 0; i < m; ++i) {
        if (tangent[i].size() != d)
            throw DimensionMismatch("simplex vertices of different dimension");
        for (std::size_t j = 0; j < d; ++j)
            tt(i, j) = tangent[i][j];
    }
    if (rank(tt) != m)
        throw GenericityViolation("degenerate simplex: affinely dependent vertices");

    // kernel of T^T is the orthogonal complement of span(T)
    auto normal = kernelBasis(tt);
    if (normal.empty())
        return normal;
    std::vector<RationalVector> frame = tangent;
    frame.insert(frame.end(), normal.begin(), normal.end());
    if (signDet(RationalMatrix::fromColumns(frame, d)) < 0)
        for (auto& x : normal.front())
            x = -x;
    return normal;
}

FlatIntersectionResult intersectFlats(std::span<const SimplexImage> simplices)
{
    using Kind = FlatIntersectionResult::Kind;
    if (simplices.empty())
        throw InvalidInput("intersectFlats needs at least one simplex");
    const std::size_t d = simplices[0].empty() ? 0 : simplices[0][0].size();
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& s : simplices) {
        if (s.empty())
            throw InvalidInput("empty simplex image");
        for (const auto& v : s)
            if (v.size() != d)
                throw DimensionMismatch("simplex images live in different ambient dimensions");
        offset.push_back(unknowns);
        unknowns += s.size();
    }
    const std::size_t r = simplices.size();
    RationalMatrix a(d * (r - 1) + r, unknowns);
    RationalVector b(a.rows());
    std::size_t row = 0;
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t c = 0; c < d; ++c, ++row) {
            for (std::size_t j = 0; j < simplices[i].size(); ++j)
                a(row, offset[i] + j) = simplices[i][j][c];
            for (std::size_t j = 0; j < simplices[0].size(); ++j)
                a(row, offset[0] + j) = -simplices[0][j][c];
        }
    for (std::size_t i = 0; i < r; ++i, ++row) {
        for (std::size_t j = 0; j < simplices[i].size(); ++j)
            a(row, offset[i] + j) = 1;
        b[row] = 1;
    }

    auto sol = solveLinear(a, b);
    FlatIntersectionResult result;
    if (sol.kind == LinearSolution::Kind::Inconsistent)
        return result;
    if (sol.kind == LinearSolution::Kind::Underdetermined) {
        result.kind = Kind::NonTransverse;
        return result;
    }

    bool touches = false;
    FlatIntersection loc;
    for (std::size_t i = 0; i < r; ++i) {
        RationalVector lambda(sol.particular.begin() + offset[i],
                              sol.particular.begin() + offset[i] + simplices[i].size());
        for (const auto& x : lambda) {
            if (sgn(x) < 0)
                return result;
            if (sgn(x) == 0)
                touches = true;
        }
        loc.barycentric.push_back(std::move(lambda));
    }
    loc.point.assign(d, Rational(0));
    for (std::size_t j = 0; j < simplices[0].size(); ++j)
        for (std::size_t c = 0; c < d; ++c)
            loc.point[c] += loc.barycentric[0][j] * simplices[0][j][c];
    // a single vertex has barycentric coordinate 1; only zeros count as touching
    result.kind = touches ? Kind::Boundary : Kind::Interior;
    result.location = std::move(loc);
    return result;
}

bool reconstructs(const FlatIntersection& x, std::span<const SimplexImage> simplices)
{
    if (x.barycentric.size() != simplices.size())
        return false;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (x.barycentric[i].size() != simplices[i].size())
            return false;
        Rational total = 0;
        RationalVector y(x.point.size());
        for (std::size_t j = 0; j < simplices[i].size(); ++j) {
            total += x.barycentric[i][j];
            if (simplices[i][j].size() != y.size())
                return false;
            for (std::size_t c = 0; c < y.size(); ++c)
                y[c] += x.barycentric[i][j] * simplices[i][j][c];
        }
        if (total != 1 || y != x.point)
            return false;
    }
    return true;
}

bool convexHullsMeet(const SimplexImage& a, const SimplexImage& b)
{
    if (a.empty() || b.empty())
        return false;
    const std::size_t d = a.front().size();
    const std::size_t n = a.size() + b.size();
    // λ, μ >= 0 with Σ λ_i a_i = Σ μ_j b_j and Σ λ = Σ μ = 1
    RationalMatrix m(d + 2, n);
    RationalVector rhs(d + 2);
    for (std::size_t j = 0; j < n; ++j) {
        const bool first = j < a.size();
        const RationalVector& v = first ? a[j] : b[j - a.size()];
        if (v.size() != d)
            throw DimensionMismatch("simplex images live in different dimensions");
        for (std::size_t i = 0; i < d; ++i)
            m(i, j) = first ? v[i] : Rational(-v[i]);
        m(first ? d : d + 1, j) = 1;
    }
    rhs[d] = rhs[d + 1] = 1;
    if (solveLinear(m, rhs).kind == LinearSolution::Kind::Inconsistent)
        return false;

    // a feasible system has a basic feasible solution: try every column basis
    const std::size_t rk = rank(m);
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(rk), pick.end(), 1);
    do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (pick[j])
                cols.push_back(j);
        RationalMatrix sub(d + 2, rk);
        for (std::size_t i = 0; i < d + 2; ++i)
            for (std::size_t c = 0; c < rk; ++c)
                sub(i, c) = m(i, cols[c]);
        const auto sol = solveLinear(sub, rhs);
        if (sol.kind == LinearSolution::Kind::Unique &&
            std::all_of(sol.particular.begin(), sol.particular.end(), [](const Rational& x) { return sgn(x) >= 0; }))
            return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

} // namespace vko
