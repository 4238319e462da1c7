#include "vko/simplicial.hpp"

#include "vko/error.hpp"

#include <algorithm>
#include <set>

namespace vko {

std::size_t SimplicialComplex::SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = s.size();
    for (auto v : s)
        h = h * 1000003u ^ static_cast<std::size_t>(v + 1);
    return h;
}

SimplicialComplex SimplicialComplex::fromMaximal(int vertexCount, std::vector<Simplex> maximal, std::string name)
{
    if (vertexCount < 0)
        throw InvalidInput("negative vertex count");
    std::vector<std::set<Simplex>> faces(vertexCount > 0 ? 1 : 0);
    for (Vertex v = 0; v < vertexCount; ++v)
        faces[0].insert(Simplex{v});

    for (auto& s : maximal) {
        std::sort(s.begin(), s.end());
        if (s.empty())
            throw InvalidInput("empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInput("simplex with a repeated vertex");
        if (s.front() < 0 || s.back() >= vertexCount)
            throw InvalidInput("simplex vertex out of range");
        if (s.size() > 31)
            throw InvalidInput("simplex dimension above 30 is not supported");
        const std::size_t n = s.size();
        if (faces.size() < n)
            faces.resize(n);
        // all nonempty subsets
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i))
                    f.push_back(s[i]);
            faces[f.size() - 1].insert(std::move(f));
        }
    }

    SimplicialComplex k;
    k.vertexCount_ = vertexCount;
    k.name_ = std::move(name);
    for (auto& level : faces) {
        k.byDim_.emplace_back(level.begin(), level.end());
        for (std::size_t i = 0; i < k.byDim_.back().size(); ++i)
            k.index_.emplace(k.byDim_.back()[i], i);
    }
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const
{
    static const std::vector<Simplex> none;
    if (q < 0 || q >= static_cast<int>(byDim_.size()))
        return none;
    return byDim_[q];
}

std::optional<std::size_t> SimplicialComplex::indexOf(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::maximalSimplices() const
{
    std::set<Simplex> covered;
    for (int q = 1; q <= dimension(); ++q)
        for (const auto& s : byDim_[q])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(i));
                covered.insert(std::move(f));
            }
    std::vector<Simplex> out;
    for (const auto& level : byDim_)
        for (const auto& s : level)
            if (!covered.count(s))
                out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

long SimplicialComplex::eulerCharacteristic() const
{
    long chi = 0;
    for (int q = 0; q <= dimension(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(byDim_[q].size());
    return chi;
}

bool SimplicialComplex::hasSubcomplex(const std::vector<Simplex>& simplices) const
{
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        if (!contains(s))
            return false;
    }
    return true;
}

void SimplicialComplex::mark(const std::string& label, std::vector<Simplex> simplices)
{
    for (auto& s : simplices)
        std::sort(s.begin(), s.end());
    if (!hasSubcomplex(simplices))
        throw InvalidInput("marked subcomplex '" + label + "' is not contained in the complex");
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    marked_[label] = std::move(simplices);
}

SimplicialComplex SimplicialComplex::markedSubcomplex(const std::string& label) const
{
    auto it = marked_.find(label);
    if (it == marked_.end())
        throw InvalidInput("no marked subcomplex '" + label + "'");
    return fromMaximal(vertexCount_, it->second, label);
}

IntegerChain reduceMod2(const IntegerChain& c)
{
    IntegerChain out{c.dimension, {}};
    for (const auto& [i, v] : c.coefficients)
        if (v % 2 != 0)
            out.coefficients[i] = 1;
    return out;
}

IntegerChain chainOf(const SimplicialComplex& k, const std::vector<Simplex>& simplices)
{
    IntegerChain c;
    c.dimension = simplices.empty() ? 0 : static_cast<int>(simplices.front().size()) - 1;
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        if (static_cast<int>(s.size()) - 1 != c.dimension)
            throw DimensionMismatch("chain of simplices with mixed dimensions");
        auto idx = k.indexOf(s);
        if (!idx)
            throw InvalidInput("chain refers to a simplex outside the complex");
        c.coefficients[*idx] += 1;
    }
    return c;
}

SparseIntMatrix boundaryOperator(const SimplicialComplex& k, int q)
{
    if (q < 1 || q > k.dimension())
        throw DimensionMismatch("boundary operator degree out of range");
    const auto& cols = k.simplices(q);
    SparseIntMatrix d(k.count(q - 1), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) {
            Simplex f = cols[j];
            f.erase(f.begin() + static_cast<long>(i));
            d.add(*k.indexOf(f), j, i % 2 == 0 ? 1 : -1);
        }
    return d;
}

IntegerChain boundary(const SimplicialComplex& k, const IntegerChain& c)
{
    IntegerChain out{c.dimension - 1, {}};
    if (c.dimension == 0)
        return out;
    const auto& simplices = k.simplices(c.dimension);
    for (const auto& [idx, coef] : c.coefficients) {
        const Simplex& s = simplices.at(idx);
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(i));
            auto& slot = out.coefficients[*k.indexOf(f)];
            slot += (i % 2 == 0 ? coef : -coef);
        }
    }
    std::erase_if(out.coefficients, [](const auto& e) { return e.second == 0; });
    return out;
}

std::size_t bettiMod2(const SimplicialComplex& k, int q)
{
    if (q < 0 || q > k.dimension())
        return 0;
    std::size_t rankOut = q >= 1 ? rankMod2(Mod2Matrix::fromSparse(boundaryOperator(k, q))) : 0;
    std::size_t rankIn = q + 1 <= k.dimension() ? rankMod2(Mod2Matrix::fromSparse(boundaryOperator(k, q + 1))) : 0;
    return k.count(q) - rankOut - rankIn;
}

SimplicialComplex skeleton(int n, int bigN)
{
    if (bigN < 0 || n < 0 || n > bigN)
        throw DimensionMismatch("skeleton dimension out of range");
    std::vector<Simplex> maximal;
    Simplex current;
    // all (n+1)-subsets of {0..N}
    auto recurse = [&](auto&& self, Vertex next) -> void {
        if (static_cast<int>(current.size()) == n + 1) {
            maximal.push_back(current);
            return;
        }
        for (Vertex v = next; v <= bigN; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return SimplicialComplex::fromMaximal(bigN + 1, std::move(maximal),
                                          "skeleton-" + std::to_string(n) + "-" + std::to_string(bigN));
}

SimplicialComplex torusGrid(int a, int b)
{
    if (a < 3 || b < 3)
        throw InvalidInput("torus grid needs at least 3 rows and 3 columns");
    auto at = [&](int i, int j) { return ((i % a + a) % a) * b + ((j % b + b) % b); };
    std::vector<Simplex> triangles;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            triangles.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            triangles.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
        }
    auto k = SimplicialComplex::fromMaximal(a * b, std::move(triangles),
                                            "torus-" + std::to_string(a) + "-" + std::to_string(b));
    std::vector<Simplex> meridian, parallel;
    for (int i = 0; i < a; ++i)
        meridian.push_back({at(i, 0), at(i + 1, 0)});
    for (int j = 0; j < b; ++j)
        parallel.push_back({at(0, j), at(0, j + 1)});
    k.mark("meridian", std::move(meridian));
    k.mark("parallel", std::move(parallel));
    return k;
}

SimplicialComplex fktComplex()
{
    // P₋ on p1..p7 = 0..6; M₋ on m1 = 0 and m2..m7 = 7..12
    const std::vector<Vertex> pv{0, 1, 2, 3, 4, 5, 6};
    const std::vector<Vertex> mv{0, 7, 8, 9, 10, 11, 12};
    auto punctured = [](const std::vector<Vertex>& labels) {
        std::vector<Simplex> out;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                for (int l = j + 1; l < 7; ++l)
                    if (!(i == 0 && j == 1 && l == 2))
                        out.push_back({labels[i], labels[j], labels[l]});
        return out;
    };
    auto pMinus = punctured(pv);
    auto mMinus = punctured(mv);

    // 3×3 torus: (i, 0) ↦ p_{i+1}, (0, j) ↦ m_{j+1}, inner vertices 13..16
    auto torusVertex = [&](int i, int j) -> Vertex {
        i = ((i % 3) + 3) % 3;
        j = ((j % 3) + 3) % 3;
        if (j == 0)
            return pv[i];
        if (i == 0)
            return mv[j];
        return 13 + (i - 1) * 2 + (j - 1);
    };
    std::vector<Simplex> torus;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            torus.push_back({torusVertex(i, j), torusVertex(i + 1, j), torusVertex(i + 1, j + 1)});
            torus.push_back({torusVertex(i, j), torusVertex(i, j + 1), torusVertex(i + 1, j + 1)});
        }

    std::vector<Simplex> all = pMinus;
    all.insert(all.end(), mMinus.begin(), mMinus.end());
    all.insert(all.end(), torus.begin(), torus.end());
    auto k = SimplicialComplex::fromMaximal(17, all, "fkt");

    auto cycle3 = [](Vertex a, Vertex b, Vertex c) { return std::vector<Simplex>{{a, b}, {b, c}, {a, c}}; };
    auto sphere = [](const std::vector<Vertex>& v) {
        return std::vector<Simplex>{{v[0], v[1], v[2]}, {v[0], v[1], v[3]}, {v[0], v[2], v[3]}, {v[1], v[2], v[3]}};
    };
    k.mark("p", cycle3(0, 1, 2));
    k.mark("m", cycle3(0, 7, 8));
    k.mark("meridian", cycle3(0, 1, 2));
    k.mark("parallel", cycle3(0, 7, 8));
    k.mark("S2_p", sphere({3, 4, 5, 6}));
    k.mark("S2_m", sphere({9, 10, 11, 12}));
    k.mark("P_minus", std::move(pMinus));
    k.mark("M_minus", std::move(mMinus));
    k.mark("torus", std::move(torus));
    return k;
}

SimplicialComplex coneComplex(const SimplicialComplex& k, const std::vector<Simplex>& base)
{
    if (!k.hasSubcomplex(base))
        throw InvalidInput("cone base is not a subcomplex");
    const Vertex apex = k.vertexCount();
    auto maximal = k.maximalSimplices();
    for (auto s : base) {
        std::sort(s.begin(), s.end());
        s.push_back(apex);
        maximal.push_back(std::move(s));
    }
    auto cone = SimplicialComplex::fromMaximal(k.vertexCount() + 1, std::move(maximal),
                                               k.name().empty() ? "cone" : "cone-" + k.name());
    return cone;
}

IntegerChain coneChain(const SimplicialComplex& coned, Vertex apex, const SimplicialComplex& base,
                       const IntegerChain& z)
{
    IntegerChain out{z.dimension + 1, {}};
    // [apex, v0..vq] = (-1)^{q+1} [v0..vq, apex]
    const long long sign = (z.dimension + 1) % 2 == 0 ? 1 : -1;
    for (const auto& [idx, coef] : z.coefficients) {
        Simplex s = base.simplices(z.dimension).at(idx);
        if (!s.empty() && s.back() >= apex)
            throw InvalidInput("cone apex must exceed every base vertex");
        s.push_back(apex);
        auto j = coned.indexOf(s);
        if (!j)
            throw InvalidInput("coned complex does not contain the cone over the chain");
        out.coefficients[*j] += sign * coef;
    }
    return out;
}

} // namespace vko
