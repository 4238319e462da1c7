#include "vko/lattice.hpp"

#include "vko/error.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vko {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(src, j) != 0)
            (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, src) != 0)
            (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negateRow(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("integer matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntegerVector operator*(const IntMatrix& a, const IntegerVector& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("integer matrix-vector product: dimensions differ");
    IntegerVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                y[i] += a(i, j) * x[j];
    return y;
}

Integer determinant(IntMatrix m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swapRows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t SparseIntMatrix::nonZeros() const noexcept
{
    std::size_t n = 0;
    for (const auto& r : rowEntries_)
        n += r.size();
    return n;
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, std::int64_t value)
{
    if (i >= rows() || j >= cols_)
        throw DimensionMismatch("sparse entry out of range");
    if (value == 0)
        return;
    auto& r = rowEntries_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        it->second += value;
        if (it->second == 0)
            r.erase(it);
    } else {
        r.insert(it, {j, value});
    }
}

std::int64_t SparseIntMatrix::at(std::size_t i, std::size_t j) const
{
    const auto& r = rowEntries_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : 0;
}

IntMatrix SparseIntMatrix::toDense() const
{
    IntMatrix m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rowEntries_[i])
            m(i, j) = static_cast<long>(v);
    return m;
}

SparseIntMatrix SparseIntMatrix::transposed() const
{
    SparseIntMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rowEntries_[i])
            t.rowEntries_[j].push_back({i, v});
    return t;
}

IntegerVector SparseIntMatrix::operator*(const IntegerVector& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("sparse matrix-vector product: dimensions differ");
    IntegerVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rowEntries_[i])
            y[i] += static_cast<long>(v) * x[j];
    return y;
}

std::string SparseIntMatrix::toCoordinateText() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rowEntries_[i])
            out << i << ' ' << j << ' ' << v << '\n';
    return out.str();
}

std::size_t SNFDecomposition::rank() const
{
    std::size_t r = 0;
    while (r < std::min(S.rows(), S.cols()) && S(r, r) != 0)
        ++r;
    return r;
}

namespace {

int cmpabs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Position of the nonzero entry of least absolute value in S[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallestEntry(const IntMatrix& s, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0)
                continue;
            if (!best || cmpabs(s(i, j), s(best->first, best->second)) < 0)
                best = {{i, j}};
            if (abs(s(i, j)) == 1)
                return best;
        }
    return best;
}

} // namespace

SNFDecomposition smithNormalForm(const IntMatrix& a)
{
    SNFDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& s = out.S;
    IntMatrix& u = out.U;
    IntMatrix& v = out.V;
    const std::size_t diag = std::min(s.rows(), s.cols());

    for (std::size_t t = 0; t < diag; ++t) {
        auto pos = smallestEntry(s, t);
        if (!pos)
            break;
        s.swapRows(t, pos->first);
        u.swapRows(t, pos->first);
        s.swapCols(t, pos->second);
        v.swapCols(t, pos->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                s.addRowMultiple(i, t, -q);
                u.addRowMultiple(i, t, -q);
                if (s(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                s.addColMultiple(j, t, -q);
                v.addColMultiple(j, t, -q);
                if (s(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // a remainder is now smaller than the pivot: move it to (t, t)
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < s.rows(); ++i)
                    if (s(i, t) != 0 && cmpabs(s(i, t), s(bi, bj)) < 0)
                        bi = i, bj = t;
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(t, j) != 0 && cmpabs(s(t, j), s(bi, bj)) < 0)
                        bi = t, bj = j;
                s.swapRows(t, bi);
                u.swapRows(t, bi);
                s.swapCols(t, bj);
                v.swapCols(t, bj);
                continue;
            }
            std::optional<std::size_t> badRow;
            for (std::size_t i = t + 1; i < s.rows() && !badRow; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) != 0 && !mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        badRow = i;
                        break;
                    }
            if (!badRow)
                break;
            s.addRowMultiple(t, *badRow, 1);
            u.addRowMultiple(t, *badRow, 1);
        }
        if (s(t, t) < 0) {
            s.negateRow(t);
            u.negateRow(t);
        }
    }
    return out;
}

std::string UnsolvabilityCertificate::describe() const
{
    std::ostringstream out;
    if (kind == Kind::ZeroRow)
        out << "reduced row " << index << " is zero but its right-hand side is " << value.get_str();
    else
        out << "invariant factor " << divisor.get_str() << " at position " << index << " does not divide "
            << value.get_str();
    return out.str();
}

IntegerSolveResult solveIntegerSystem(const IntMatrix& a, const IntegerVector& b)
{
    if (a.rows() != b.size())
        throw DimensionMismatch("right-hand side length differs from row count");
    IntegerSolveResult result;
    auto snf = smithNormalForm(a);
    IntegerVector y = snf.U * b;
    const std::size_t rk = snf.rank();
    IntegerVector z(a.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < rk) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), snf.S(i, i).get_mpz_t())) {
                result.certificate = UnsolvabilityCertificate{UnsolvabilityCertificate::Kind::Divisibility, i,
                                                              snf.S(i, i), y[i]};
                return result;
            }
            mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), snf.S(i, i).get_mpz_t());
        } else if (y[i] != 0) {
            result.certificate = UnsolvabilityCertificate{UnsolvabilityCertificate::Kind::ZeroRow, i, 0, y[i]};
            return result;
        }
    }
    IntegerVector x = snf.V * z;
    if (a * x != b)
        throw std::logic_error("Smith normal form solve produced a non-solution");
    result.solution = std::move(x);
    return result;
}

namespace {

// Row of the working system during sparse elimination.
using WorkRow = std::vector<std::pair<std::size_t, Integer>>;

// dst -= factor * src, keeping dst sorted and free of zeros; reports columns
// that appeared in or vanished from dst.
void subtractMultiple(WorkRow& dst, const WorkRow& src, const Integer& factor, std::vector<std::size_t>& appeared,
                      std::vector<std::size_t>& vanished)
{
    WorkRow merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            merged.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            merged.emplace_back(src[j].first, -factor * src[j].second);
            appeared.push_back(src[j].first);
            ++j;
        } else {
            Integer v = dst[i].second - factor * src[j].second;
            if (v != 0)
                merged.emplace_back(dst[i].first, std::move(v));
            else
                vanished.push_back(dst[i].first);
            ++i;
            ++j;
        }
    }
    dst = std::move(merged);
}

} // namespace

IntegerSolveResult solveIntegerSystem(const SparseIntMatrix& a, const IntegerVector& b,
                                      const SparseSolveOptions& options, SparseSolveStats* stats)
{
    if (a.rows() != b.size())
        throw DimensionMismatch("right-hand side length differs from row count");
    const std::size_t m = a.rows(), n = a.cols();

    std::vector<WorkRow> rows(m);
    std::vector<std::set<std::size_t>> colRows(n);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [j, v] : a.row(i)) {
            rows[i].emplace_back(j, static_cast<long>(v));
            colRows[j].insert(i);
        }
    IntegerVector rhs = b;
    std::vector<bool> rowActive(m, true), colActive(n, true);

    struct Pivot {
        std::size_t row, col;
        int sign;
    };
    std::vector<Pivot> pivots;
    std::vector<std::size_t> appeared, vanished;

    for (;;) {
        // Markowitz choice among unit entries
        std::optional<Pivot> best;
        std::size_t bestCost = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < m; ++i) {
            if (!rowActive[i] || rows[i].empty())
                continue;
            const std::size_t rowCost = rows[i].size() - 1;
            for (const auto& [j, v] : rows[i]) {
                if (abs(v) != 1)
                    continue;
                std::size_t cost = rowCost * (colRows[j].size() - 1);
                if (cost < bestCost) {
                    bestCost = cost;
                    best = Pivot{i, j, sgn(v)};
                }
            }
            if (bestCost == 0)
                break;
        }
        if (!best)
            break;
        const Pivot p = *best;
        const WorkRow& pivotRow = rows[p.row];
        std::vector<std::size_t> targets;
        for (auto i : colRows[p.col])
            if (i != p.row)
                targets.push_back(i);
        for (auto i : targets) {
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), p.col,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            Integer factor = it->second * p.sign;
            appeared.clear();
            vanished.clear();
            subtractMultiple(rows[i], pivotRow, factor, appeared, vanished);
            rhs[i] -= factor * rhs[p.row];
            for (auto c : appeared)
                colRows[c].insert(i);
            for (auto c : vanished)
                colRows[c].erase(i);
        }
        for (const auto& e : pivotRow)
            colRows[e.first].erase(p.row);
        rowActive[p.row] = false;
        colActive[p.col] = false;
        pivots.push_back(p);
    }

    IntegerSolveResult result;
    std::vector<std::size_t> coreRows, coreCols;
    for (std::size_t i = 0; i < m; ++i) {
        if (!rowActive[i])
            continue;
        if (rows[i].empty()) {
            if (rhs[i] != 0) {
                result.certificate = UnsolvabilityCertificate{UnsolvabilityCertificate::Kind::ZeroRow, i, 0, rhs[i]};
                if (stats)
                    *stats = {pivots.size(), 0, 0};
                return result;
            }
            continue;
        }
        coreRows.push_back(i);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (colActive[j])
            coreCols.push_back(j);
    if (stats)
        *stats = {pivots.size(), coreRows.size(), coreCols.size()};

    IntegerVector x(n);
    if (!coreRows.empty()) {
        if (coreCols.size() > options.denseColumnLimit)
            throw BudgetExceeded("residual integer system has " + std::to_string(coreCols.size()) +
                                 " columns, above the dense limit of " + std::to_string(options.denseColumnLimit));
        std::vector<std::size_t> colIndex(n, 0);
        for (std::size_t k = 0; k < coreCols.size(); ++k)
            colIndex[coreCols[k]] = k;
        IntMatrix core(coreRows.size(), coreCols.size());
        IntegerVector coreRhs(coreRows.size());
        for (std::size_t k = 0; k < coreRows.size(); ++k) {
            for (const auto& [j, v] : rows[coreRows[k]])
                core(k, colIndex[j]) = v;
            coreRhs[k] = rhs[coreRows[k]];
        }
        auto sub = solveIntegerSystem(core, coreRhs);
        if (!sub.solvable()) {
            result.certificate = sub.certificate;
            return result;
        }
        for (std::size_t k = 0; k < coreCols.size(); ++k)
            x[coreCols[k]] = (*sub.solution)[k];
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Integer acc = rhs[it->row];
        for (const auto& [j, v] : rows[it->row])
            if (j != it->col)
                acc -= v * x[j];
        x[it->col] = it->sign * acc;
    }
    if (a * x != b)
        throw std::logic_error("sparse integer elimination produced a non-solution");
    result.solution = std::move(x);
    return result;
}

Mod2Matrix::Mod2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 64) / 64), bits_(rows * words_, 0)
{
}

Mod2Matrix Mod2Matrix::fromSparse(const SparseIntMatrix& a)
{
    Mod2Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i))
            if (v % 2 != 0)
                m.set(i, j, true);
    return m;
}

bool Mod2Matrix::get(std::size_t i, std::size_t j) const
{
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

void Mod2Matrix::set(std::size_t i, std::size_t j, bool value)
{
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
}

void Mod2Matrix::flip(std::size_t i, std::size_t j)
{
    bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
}

std::vector<std::uint8_t> Mod2Matrix::operator*(const std::vector<std::uint8_t>& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("mod-2 matrix-vector product: dimensions differ");
    std::vector<std::uint8_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc ^= (get(i, j) && (x[j] & 1u)) ? 1u : 0u;
        y[i] = static_cast<std::uint8_t>(acc);
    }
    return y;
}

std::size_t rankMod2(Mod2Matrix a)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols_ && rank < a.rows_; ++col) {
        std::size_t p = rank;
        while (p < a.rows_ && !a.get(p, col))
            ++p;
        if (p == a.rows_)
            continue;
        if (p != rank)
            for (std::size_t w = 0; w < a.words_; ++w)
                std::swap(a.bits_[p * a.words_ + w], a.bits_[rank * a.words_ + w]);
        for (std::size_t i = 0; i < a.rows_; ++i)
            if (i != rank && a.get(i, col))
                for (std::size_t w = col / 64; w < a.words_; ++w)
                    a.bits_[i * a.words_ + w] ^= a.bits_[rank * a.words_ + w];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::uint8_t>> solveMod2System(const Mod2Matrix& a, const std::vector<std::uint8_t>& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length differs from row count");
    // augmented column lives at index cols_ (words_ reserves one spare bit)
    Mod2Matrix m = a;
    const std::size_t rhsCol = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
        m.set(i, rhsCol, b[i] & 1u);
    std::vector<std::size_t> pivotCols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t p = rank;
        while (p < a.rows() && !m.get(p, col))
            ++p;
        if (p == a.rows())
            continue;
        if (p != rank)
            for (std::size_t w = 0; w < m.words_; ++w)
                std::swap(m.bits_[p * m.words_ + w], m.bits_[rank * m.words_ + w]);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != rank && m.get(i, col))
                for (std::size_t w = col / 64; w < m.words_; ++w)
                    m.bits_[i * m.words_ + w] ^= m.bits_[rank * m.words_ + w];
        pivotCols.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < a.rows(); ++i)
        if (m.get(i, rhsCol))
            return std::nullopt;
    std::vector<std::uint8_t> x(a.cols(), 0);
    for (std::size_t r = 0; r < rank; ++r)
        x[pivotCols[r]] = m.get(r, rhsCol) ? 1 : 0;
    return x;
}

} // namespace vko
