#pragma once

// Independent reference computations used by the tests. Deliberately naive:
// nothing here calls into the library's linear algebra.

#include "vko/lattice.hpp"
#include "vko/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using SmallMatrix = std::vector<std::vector<long long>>;

// Laplace expansion along the first row.
inline vko::Integer cofactorDeterminant(const std::vector<std::vector<vko::Integer>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    vko::Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        std::vector<std::vector<vko::Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<vko::Integer> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        const vko::Integer term = m[0][j] * cofactorDeterminant(minor);
        total += j % 2 == 0 ? term : vko::Integer(-term);
    }
    return total;
}

inline vko::Rational cofactorDeterminant(const std::vector<std::vector<vko::Rational>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    vko::Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        std::vector<std::vector<vko::Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<vko::Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        vko::Rational term = m[0][j] * cofactorDeterminant(minor);
        if (j % 2 == 1)
            term = -term;
        total += term;
    }
    return total;
}

// Gaussian elimination over F_2 on plain bytes.
inline std::size_t rankMod2(std::vector<std::vector<std::uint8_t>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && !m[p][c])
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != rank && m[i][c])
                for (std::size_t j = c; j < cols; ++j)
                    m[i][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::uint8_t>> mod2Dense(const vko::SparseIntMatrix& a)
{
    std::vector<std::vector<std::uint8_t>> m(a.rows(), std::vector<std::uint8_t>(a.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i))
            m[i][j] = static_cast<std::uint8_t>(v & 1);
    return m;
}

// Some x in [-box, box]^n with A x = b, by exhaustive search.
inline std::optional<std::vector<long long>> bruteForceSolve(const SmallMatrix& a, const std::vector<long long>& b,
                                                             std::size_t n, long long box)
{
    std::vector<long long> x(n, -box);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += a[i][j] * x[j];
            ok = s == b[i];
        }
        if (ok)
            return x;
        std::size_t j = 0;
        while (j < n && x[j] == box)
            x[j++] = -box;
        if (j == n)
            return std::nullopt;
        ++x[j];
    }
}

// No solution modulo m (exhaustive over (Z/m)^n) proves there is no integer solution.
inline bool unsolvableModulo(const SmallMatrix& a, const std::vector<long long>& b, std::size_t n, long long m)
{
    std::vector<long long> x(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += a[i][j] * x[j];
            ok = ((s - b[i]) % m + m) % m == 0;
        }
        if (ok)
            return false;
        std::size_t j = 0;
        while (j < n && x[j] == m - 1)
            x[j++] = 0;
        if (j == n)
            return true;
        ++x[j];
    }
}

} // namespace oracle
