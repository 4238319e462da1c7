#include "vko/deleted.hpp"

#include "vko/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vko {

const std::vector<Cell>& DeletedProductComplex::cells(int q) const
{
    static const std::vector<Cell> none;
    if (q < 0 || q > topDimension())
        return none;
    return cells_[static_cast<std::size_t>(q)];
}

std::size_t DeletedProductComplex::cellCount() const noexcept
{
    std::size_t n = 0;
    for (const auto& level : cells_)
        n += level.size();
    return n;
}

std::optional<std::size_t> DeletedProductComplex::cellIndex(int q, const Cell& c) const
{
    const auto& level = cells(q);
    auto it = std::lower_bound(level.begin(), level.end(), c);
    if (it == level.end() || *it != c)
        return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

std::size_t DeletedProductComplex::orbitCount(int q) const
{
    if (q < 0 || q > topDimension())
        return 0;
    return representatives_[static_cast<std::size_t>(q)].size();
}

int DeletedProductComplex::simplexDim(std::uint32_t id) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::size_t>(id));
    return static_cast<int>(it - offsets_.begin()) - 1;
}

const Simplex& DeletedProductComplex::simplex(std::uint32_t id) const
{
    const int dim = simplexDim(id);
    return base_.simplices(dim).at(id - offsets_[static_cast<std::size_t>(dim)]);
}

int DeletedProductComplex::cellDimension(const Cell& c) const
{
    int dim = 0;
    for (auto id : c)
        dim += simplexDim(id);
    return dim;
}

int DeletedProductComplex::weight(int q, std::size_t cell, int k) const
{
    const auto& e = orbitOf(q, cell);
    return ((k * r_) % 2 == 1 ? e.permSign : 1) * e.koszul;
}

int permutationSign(const Permutation& p)
{
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                sign = -sign;
    return sign;
}

int koszulSign(const Permutation& p, const std::vector<int>& dims)
{
    long exponent = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                exponent += static_cast<long>(dims[i]) * dims[j];
    return exponent % 2 == 0 ? 1 : -1;
}

int koszulWeight(const Permutation& p, const std::vector<int>& dims, int k)
{
    const int r = static_cast<int>(p.size());
    const int s = (k * r) % 2 == 1 ? permutationSign(p) : 1;
    return s * koszulSign(p, dims);
}

Cell applyPermutation(const Permutation& p, const Cell& c)
{
    Cell out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[static_cast<std::size_t>(p[i])] = c[i];
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

DeletedProductComplex deletedProduct(const SimplicialComplex& k, int r, const DeletedProductOptions& options)
{
    if (r < 2)
        throw InvalidInput("deleted product needs r >= 2");
    DeletedProductComplex x;
    x.base_ = k;
    x.r_ = r;
    x.order_ = options.order;

    std::vector<const Simplex*> all;
    std::vector<int> dims;
    for (int q = 0; q <= k.dimension(); ++q) {
        x.offsets_.push_back(all.size());
        for (const auto& s : k.simplices(q)) {
            all.push_back(&s);
            dims.push_back(q);
        }
    }
    const std::size_t words = static_cast<std::size_t>(k.vertexCount() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks(all.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (auto v : *all[i])
            masks[i][static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);

    std::vector<std::uint64_t> used(words, 0);
    Cell current;
    std::size_t total = 0;
    std::function<void(int)> recurse = [&](int dimSoFar) {
        if (static_cast<int>(current.size()) == r) {
            if (++total > options.cellBudget)
                throw BudgetExceeded("deleted product exceeds the cell budget of " +
                                     std::to_string(options.cellBudget));
            if (x.cells_.size() <= static_cast<std::size_t>(dimSoFar))
                x.cells_.resize(static_cast<std::size_t>(dimSoFar) + 1);
            x.cells_[static_cast<std::size_t>(dimSoFar)].push_back(current);
            return;
        }
        for (std::size_t id = 0; id < all.size(); ++id) {
            bool free = true;
            for (std::size_t w = 0; w < words && free; ++w)
                free = (used[w] & masks[id][w]) == 0;
            if (!free)
                continue;
            for (std::size_t w = 0; w < words; ++w)
                used[w] |= masks[id][w];
            current.push_back(static_cast<std::uint32_t>(id));
            recurse(dimSoFar + dims[id]);
            current.pop_back();
            for (std::size_t w = 0; w < words; ++w)
                used[w] &= ~masks[id][w];
        }
    };
    recurse(0);

    const std::size_t levels = x.cells_.size();
    x.orbitEntries_.resize(levels);
    x.representatives_.resize(levels);
    for (std::size_t q = 0; q < levels; ++q) {
        const auto& level = x.cells_[q];
        std::vector<std::size_t> orbitOfRep(level.size(), SIZE_MAX);
        auto isRep = [&](const Cell& c) {
            return options.order == OrbitOrder::Lexicographic ? std::is_sorted(c.begin(), c.end())
                                                              : std::is_sorted(c.rbegin(), c.rend());
        };
        for (std::size_t i = 0; i < level.size(); ++i)
            if (isRep(level[i])) {
                orbitOfRep[i] = x.representatives_[q].size();
                x.representatives_[q].push_back(i);
            }
        x.orbitEntries_[q].resize(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Cell& c = level[i];
            Cell rep = c;
            if (options.order == OrbitOrder::Lexicographic)
                std::sort(rep.begin(), rep.end());
            else
                std::sort(rep.rbegin(), rep.rend());
            auto repIndex = x.cellIndex(static_cast<int>(q), rep);
            OrbitEntry& e = x.orbitEntries_[q][i];
            e.orbit = orbitOfRep.at(*repIndex);
            e.perm.resize(static_cast<std::size_t>(r));
            std::vector<int> repDims;
            for (std::size_t a = 0; a < rep.size(); ++a) {
                e.perm[a] = static_cast<int>(std::find(c.begin(), c.end(), rep[a]) - c.begin());
                repDims.push_back(dims[rep[a]]);
            }
            e.permSign = permutationSign(e.perm);
            e.koszul = koszulSign(e.perm, repDims);
        }
    }
    return x;
}

std::vector<std::pair<std::size_t, int>> cellBoundary(const DeletedProductComplex& x, int q, std::size_t cell)
{
    if (q < 1 || q > x.topDimension())
        throw DimensionMismatch("cell boundary needs a cell of positive dimension");
    const Cell& c = x.cells(q).at(cell);
    std::vector<std::pair<std::size_t, int>> out;
    int prefix = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int dim = x.simplexDim(c[i]);
        if (dim > 0) {
            const int blockSign = prefix % 2 == 0 ? 1 : -1;
            const Simplex& s = x.simplex(c[i]);
            for (std::size_t l = 0; l < s.size(); ++l) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(l));
                Cell f = c;
                f[i] = x.simplexId(dim - 1, *x.base().indexOf(face));
                auto idx = x.cellIndex(q - 1, f);
                out.emplace_back(*idx, blockSign * (l % 2 == 0 ? 1 : -1));
            }
        }
        prefix += dim;
    }
    return out;
}

SparseIntMatrix coboundaryMatrix(const DeletedProductComplex& x, int q)
{
    if (q < 1 || q > x.topDimension())
        throw DimensionMismatch("coboundary degree out of range");
    SparseIntMatrix m(x.cells(q).size(), x.cells(q - 1).size());
    for (std::size_t e = 0; e < x.cells(q).size(); ++e)
        for (const auto& [f, s] : cellBoundary(x, q, e))
            m.add(e, f, s);
    return m;
}

SparseIntMatrix equivariantCoboundaryMatrix(const DeletedProductComplex& x, int q, int k)
{
    if (q < 1 || q > x.topDimension())
        throw DimensionMismatch("coboundary degree out of range");
    SparseIntMatrix m(x.orbitCount(q), x.orbitCount(q - 1));
    for (std::size_t orbit = 0; orbit < x.orbitCount(q); ++orbit)
        for (const auto& [f, s] : cellBoundary(x, q, x.representative(q, orbit)))
            m.add(orbit, x.orbitOf(q - 1, f).orbit, s * x.weight(q - 1, f, k));
    return m;
}

IntegerVector unfoldCochain(const DeletedProductComplex& x, int q, int k, const IntegerVector& folded)
{
    if (folded.size() != x.orbitCount(q))
        throw DimensionMismatch("folded cochain length differs from the orbit count");
    IntegerVector out(x.cells(q).size());
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c] = x.weight(q, c, k) * folded[x.orbitOf(q, c).orbit];
    return out;
}

std::string dumpCells(const DeletedProductComplex& x, int k)
{
    std::ostringstream os;
    auto writeCell = [&](const Cell& c) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                os << '|';
            const Simplex& s = x.simplex(c[i]);
            for (std::size_t j = 0; j < s.size(); ++j)
                os << (j ? "," : "") << s[j];
        }
        os << ')';
    };
    for (int q = 0; q <= x.topDimension(); ++q)
        for (std::size_t i = 0; i < x.cells(q).size(); ++i) {
            const auto& e = x.orbitOf(q, i);
            os << q << ": ";
            writeCell(x.cells(q)[i]);
            os << ' ';
            writeCell(x.cells(q)[x.representative(q, e.orbit)]);
            os << ' ';
            for (std::size_t j = 0; j < e.perm.size(); ++j)
                os << (j ? "," : "") << e.perm[j];
            os << ' ' << (x.weight(q, i, k) > 0 ? "+1" : "-1") << '\n';
        }
    return os.str();
}

} // namespace vko
