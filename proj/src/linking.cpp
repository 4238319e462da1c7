#include "vko/linking.hpp"

#include "vko/error.hpp"
#include "vko/parallel.hpp"
#include "vko/random.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace vko {

namespace {

constexpr std::int64_t apexDenominator = 1009;

struct Slot {
    std::vector<PreparedSimplex> simplices;
    std::vector<long long> coefficients;
};

struct ScanResult {
    bool generic = true;
    FlatIntersectionResult::Kind failure = FlatIntersectionResult::Kind::Empty;
    long long sum = 0;
    std::size_t points = 0;
};

// Enumerates one simplex per slot. With requireEmpty every tuple must be
// disjoint; otherwise tuples may also meet in one interior point, which
// contributes the coefficient product (times the intersection sign if asked).
ScanResult scanTuples(const std::vector<Slot>& slots, bool signs, bool requireEmpty)
{
    using Kind = FlatIntersectionResult::Kind;
    ScanResult total;
    if (slots.empty() || slots[0].simplices.empty())
        return total;
    const std::size_t r = slots.size();
    std::vector<ScanResult> locals(slots[0].simplices.size());
    std::atomic<bool> failed{false};
    parallelFor(locals.size(), [&](std::size_t first) {
        ScanResult& out = locals[first];
        std::vector<const PreparedSimplex*> chain{&slots[0].simplices[first]};
        std::vector<AffineFlat> flats{hullOf(slots[0].simplices[first])};
        long long coef = slots[0].coefficients[first];
        auto recurse = [&](auto&& self, long long product) -> void {
            if (failed)
                return;
            if (chain.size() == r) {
                auto result = classifyFlat(flats.back(), chain);
                if (result.kind == Kind::Empty)
                    return;
                if (result.kind != Kind::Interior || requireEmpty) {
                    out.generic = false;
                    out.failure = result.kind;
                    failed = true;
                    return;
                }
                ++out.points;
                out.sum += product * (signs ? normalFrameSign(chain) : 1);
                return;
            }
            const Slot& slot = slots[chain.size()];
            for (std::size_t j = 0; j < slot.simplices.size() && out.generic; ++j) {
                chain.push_back(&slot.simplices[j]);
                if (boxesMeet(chain))
                    if (auto next = restrictFlat(flats.back(), slot.simplices[j])) {
                        flats.push_back(std::move(*next));
                        self(self, product * slot.coefficients[j]);
                        flats.pop_back();
                    }
                chain.pop_back();
            }
        };
        recurse(recurse, coef);
    });
    for (const auto& l : locals) {
        if (!l.generic) {
            total.generic = false;
            total.failure = l.failure;
            return total;
        }
        total.sum += l.sum;
        total.points += l.points;
    }
    return total;
}

SimplexImage imageOf(const std::vector<RationalVector>& coords, const Simplex& s)
{
    SimplexImage img;
    for (auto v : s)
        img.push_back(coords.at(static_cast<std::size_t>(v)));
    return img;
}

Slot cycleSlot(const CoordinatizedCycle& z, bool mod2)
{
    Slot slot;
    const auto& simplices = z.complex.simplices(z.cycle.dimension);
    for (const auto& [idx, c] : z.cycle.coefficients) {
        if (c == 0 || (mod2 && c % 2 == 0))
            continue;
        slot.simplices.push_back(prepareSimplex(imageOf(z.coords, simplices.at(idx))));
        slot.coefficients.push_back(mod2 ? 1 : c);
    }
    return slot;
}

// Cone chain Σ z_σ [apex, σ] with the apex listed first.
Slot coneSlot(const CoordinatizedCycle& z, const RationalVector& apex, bool mod2)
{
    Slot slot;
    const auto& simplices = z.complex.simplices(z.cycle.dimension);
    for (const auto& [idx, c] : z.cycle.coefficients) {
        if (c == 0 || (mod2 && c % 2 == 0))
            continue;
        SimplexImage img{apex};
        for (auto& p : imageOf(z.coords, simplices.at(idx)))
            img.push_back(std::move(p));
        slot.simplices.push_back(prepareSimplex(std::move(img)));
        slot.coefficients.push_back(mod2 ? 1 : c);
    }
    return slot;
}

RationalVector randomApex(Rng& rng, int d)
{
    RationalVector a(static_cast<std::size_t>(d));
    for (auto& x : a)
        x = rng.uniformRational(1, apexDenominator - 1, apexDenominator);
    return a;
}

bool simplexOnCubeBoundary(const SimplexImage& img)
{
    const std::size_t d = img.front().size();
    for (std::size_t c = 0; c < d; ++c) {
        for (int side = 0; side <= 1; ++side) {
            bool all = true;
            for (const auto& v : img)
                all = all && v[c] == side;
            if (all)
                return true;
        }
    }
    return false;
}

void requireOnCubeBoundary(const std::vector<RationalVector>& coords, const SimplicialComplex& k,
                           const std::string& what)
{
    for (const auto& v : coords)
        for (const auto& x : v)
            if (x < 0 || x > 1)
                throw InvalidInput(what + " has a vertex outside [0,1]^d");
    for (const auto& s : k.maximalSimplices())
        if (!simplexOnCubeBoundary(imageOf(coords, s)))
            throw InvalidInput(what + " has a simplex off the boundary of [0,1]^d");
}

void requireDisjoint(const std::vector<Slot>& pair, const std::string& what)
{
    using Kind = FlatIntersectionResult::Kind;
    for (const auto& s : pair[0].simplices)
        for (const auto& t : pair[1].simplices) {
            const std::array<const PreparedSimplex*, 2> chain{&s, &t};
            if (!boxesMeet(chain))
                continue;
            const auto kind = intersectPrepared(chain).kind;
            if (kind == Kind::Empty || (kind == Kind::NonTransverse && !convexHullsMeet(s.image, t.image)))
                continue;
            throw InvalidInput("the " + what + " intersect");
        }
}

int cycleDim(const CoordinatizedCycle& z)
{
    return z.cycle.dimension;
}

std::size_t ambientOf(const CoordinatizedCycle& z)
{
    if (z.coords.empty())
        throw InvalidInput("cycle without coordinates");
    return z.coords.front().size();
}

// Simplicial sphere of the staircase-triangulated boundary of [0,1]^m; vertex
// index = bitmask of the coordinates equal to 1.
SimplicialComplex cubeBoundary(int m)
{
    std::vector<Simplex> tops;
    for (int c = 0; c < m; ++c)
        for (int side = 0; side <= 1; ++side) {
            std::vector<int> free;
            for (int j = 0; j < m; ++j)
                if (j != c)
                    free.push_back(j);
            do {
                Simplex s;
                int mask = side << c;
                s.push_back(mask);
                for (int j : free) {
                    mask |= 1 << j;
                    s.push_back(mask);
                }
                tops.push_back(std::move(s));
            } while (std::next_permutation(free.begin(), free.end()));
        }
    return SimplicialComplex::fromMaximal(1 << m, std::move(tops), "cube-boundary-" + std::to_string(m));
}

SimplicialComplex polygon(int n)
{
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return SimplicialComplex::fromMaximal(n, std::move(edges), "polygon-" + std::to_string(n));
}

RationalVector vec(std::initializer_list<const char*> text)
{
    RationalVector v;
    for (const char* t : text)
        v.push_back(parseRational(t));
    return v;
}

} // namespace

IntegerChain fundamentalCycle(const SimplicialComplex& k)
{
    const int n = k.dimension();
    if (n < 0)
        throw InvalidInput("empty complex has no fundamental cycle");
    for (const auto& s : k.maximalSimplices())
        if (static_cast<int>(s.size()) != n + 1)
            throw InvalidInput("complex is not pure");
    const auto& tops = k.simplices(n);
    std::map<Simplex, std::vector<std::pair<std::size_t, int>>> ridges;
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t l = 0; l < tops[i].size(); ++l) {
            Simplex f = tops[i];
            f.erase(f.begin() + static_cast<long>(l));
            ridges[f].emplace_back(i, l % 2 == 0 ? 1 : -1);
        }
    for (const auto& [f, users] : ridges)
        if (users.size() != 2)
            throw InvalidInput("complex is not a closed pseudomanifold");

    std::vector<int> eps(tops.size(), 0);
    eps[0] = 1;
    std::queue<std::size_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        const std::size_t s = queue.front();
        queue.pop();
        for (std::size_t l = 0; l < tops[s].size(); ++l) {
            Simplex f = tops[s];
            f.erase(f.begin() + static_cast<long>(l));
            const auto& users = ridges[f];
            const auto& mine = users[0].first == s ? users[0] : users[1];
            const auto& other = users[0].first == s ? users[1] : users[0];
            const int want = -eps[s] * mine.second * other.second;
            if (eps[other.first] == 0) {
                eps[other.first] = want;
                queue.push(other.first);
            } else if (eps[other.first] != want) {
                throw InvalidInput("complex is not orientable");
            }
        }
    }
    IntegerChain z{n, {}};
    for (std::size_t i = 0; i < tops.size(); ++i) {
        if (eps[i] == 0)
            throw InvalidInput("complex is not connected");
        z.coefficients[i] = eps[i];
    }
    return z;
}

void validateOrnament(const Ornament& orn)
{
    const int r = orn.r();
    if (r < 2)
        throw DimensionMismatch("an ornament needs at least two components");
    if (orn.d < 1 || orn.d % r != 0)
        throw DimensionMismatch("ambient dimension must be k·r");
    const int k = orn.k();
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < orn.components.size(); ++i) {
        const auto& c = orn.components[i];
        const std::string what = "component " + std::to_string(i);
        if (c.complex.dimension() != k * (r - 1) - 1)
            throw DimensionMismatch(what + " is not a sphere of dimension k(r-1)-1");
        if (static_cast<int>(c.coords.size()) != c.complex.vertexCount())
            throw DimensionMismatch(what + " needs one coordinate vector per vertex");
        for (const auto& v : c.coords)
            if (static_cast<int>(v.size()) != orn.d)
                throw DimensionMismatch(what + " has coordinates of the wrong length");
        if (c.orientation != 1 && c.orientation != -1)
            throw InvalidInput(what + " orientation must be +1 or -1");
        requireOnCubeBoundary(c.coords, c.complex, what);
        fundamentalCycle(c.complex);
        Slot slot;
        for (const auto& s : c.complex.simplices(c.complex.dimension())) {
            slot.simplices.push_back(prepareSimplex(imageOf(c.coords, s)));
            slot.coefficients.push_back(1);
        }
        slots.push_back(std::move(slot));
    }
    auto scan = scanTuples(slots, false, true);
    if (!scan.generic)
        throw GenericityViolation("cannot certify an empty common intersection of the components");
}

CoordinatizedCycle componentCycle(const Ornament& orn, std::size_t i)
{
    const auto& c = orn.components.at(i);
    CoordinatizedCycle z{c.complex, c.coords, fundamentalCycle(c.complex)};
    for (auto& [idx, v] : z.cycle.coefficients)
        v *= c.orientation;
    return z;
}

ConedExtension conedExtension(const Ornament& orn, std::uint64_t seed, int retries)
{
    validateOrnament(orn);
    std::vector<CoordinatizedCycle> cycles;
    for (std::size_t i = 0; i < orn.components.size(); ++i)
        cycles.push_back(componentCycle(orn, i));
    for (int attempt = 0; attempt < retries; ++attempt) {
        Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<RationalVector> apexes;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            apexes.push_back(randomApex(rng, orn.d));
        bool distinct = true;
        for (std::size_t i = 0; i < apexes.size(); ++i)
            for (std::size_t j = i + 1; j < apexes.size(); ++j)
                distinct = distinct && apexes[i] != apexes[j];
        if (!distinct)
            continue;
        std::vector<Slot> slots;
        try {
            for (std::size_t i = 0; i < cycles.size(); ++i)
                slots.push_back(coneSlot(cycles[i], apexes[i], false));
        } catch (const GenericityViolation&) {
            continue; // apex in the affine hull of a component simplex
        }
        auto scan = scanTuples(slots, true, false);
        if (!scan.generic)
            continue;
        ConedExtension ext;
        ext.apexes = apexes;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const auto& c = orn.components[i];
            ext.cones.push_back(coneComplex(c.complex, c.complex.maximalSimplices()));
            auto coords = c.coords;
            coords.push_back(apexes[i]);
            ext.coords.push_back(std::move(coords));
        }
        ext.attempts = attempt + 1;
        ext.linkingNumber = scan.sum;
        ext.intersections = scan.points;
        return ext;
    }
    throw GenericityViolation("no generic coned extension after " + std::to_string(retries) + " apex samples");
}

long long rLinkingNumber(const Ornament& orn, std::uint64_t seed)
{
    return conedExtension(orn, seed).linkingNumber;
}

bool apexIndependence(const Ornament& orn, const std::vector<std::uint64_t>& seeds)
{
    if (seeds.size() < 2)
        throw InvalidInput("apex independence needs at least two seeds");
    const long long first = rLinkingNumber(orn, seeds[0]);
    for (std::size_t i = 1; i < seeds.size(); ++i)
        if (rLinkingNumber(orn, seeds[i]) != first)
            return false;
    return true;
}

Ornament reflectComponent(const Ornament& orn, std::size_t i)
{
    if (i >= orn.components.size())
        throw InvalidInput("component index out of range");
    const auto& coords = orn.components[i].coords;
    auto reflected = [&](int axis) {
        Ornament out = orn;
        for (auto& v : out.components[i].coords)
            v[static_cast<std::size_t>(axis)] = 1 - v[static_cast<std::size_t>(axis)];
        return out;
    };
    std::vector<int> preferred, fallback;
    const std::set<RationalVector> original(coords.begin(), coords.end());
    for (int axis = 0; axis < orn.d; ++axis) {
        std::set<RationalVector> image;
        bool moves = false;
        for (const auto& v : coords) {
            auto w = v;
            w[static_cast<std::size_t>(axis)] = 1 - w[static_cast<std::size_t>(axis)];
            moves = moves || w != v;
            image.insert(std::move(w));
        }
        if (!moves)
            continue;
        (image == original ? preferred : fallback).push_back(axis);
    }
    preferred.insert(preferred.end(), fallback.begin(), fallback.end());
    for (int axis : preferred) {
        Ornament out = reflected(axis);
        try {
            validateOrnament(out);
        } catch (const GenericityViolation&) {
            continue;
        }
        out.name = orn.name.empty() ? "" : orn.name + "-reflected-" + std::to_string(i);
        return out;
    }
    throw GenericityViolation("no coordinate reflection of the component keeps the ornament valid");
}

int mod2Linking(const CoordinatizedCycle& z1, const CoordinatizedCycle& z2, std::uint64_t seed)
{
    const std::size_t d = ambientOf(z1);
    if (ambientOf(z2) != d)
        throw DimensionMismatch("cycles live in different ambient dimensions");
    const int a = cycleDim(z1), b = cycleDim(z2);
    const int D = static_cast<int>(d);
    const bool sphere = a + b == D - 2;
    if (a + b != D - 1 && !sphere)
        throw DimensionMismatch("mod-2 linking needs dimensions summing to D-1 (or D-2 on the cube boundary)");
    if (sphere) {
        requireOnCubeBoundary(z1.coords, z1.complex, "first cycle");
        requireOnCubeBoundary(z2.coords, z2.complex, "second cycle");
    }
    requireDisjoint({cycleSlot(z1, true), cycleSlot(z2, true)}, "cycle supports");
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(attempt)));
        const auto apex2 = randomApex(rng, D);
        const auto apex1 = randomApex(rng, D);
        if (apex1 == apex2)
            continue;
        std::vector<Slot> slots;
        try {
            slots.push_back(sphere ? coneSlot(z1, apex1, true) : cycleSlot(z1, true));
            slots.push_back(coneSlot(z2, apex2, true));
        } catch (const GenericityViolation&) {
            continue;
        }
        auto scan = scanTuples(slots, false, false);
        if (scan.generic)
            return static_cast<int>(scan.sum % 2);
    }
    throw GenericityViolation("no generic cone apex for mod-2 linking");
}

std::array<int, 3> coneTripleTerms(const CoordinatizedCycle& z1, const CoordinatizedCycle& z2,
                                   const CoordinatizedCycle& z3, std::uint64_t seed)
{
    const std::size_t d = ambientOf(z1);
    if (ambientOf(z2) != d || ambientOf(z3) != d)
        throw DimensionMismatch("cycles live in different ambient dimensions");
    const int D = static_cast<int>(d);
    if (cycleDim(z1) + cycleDim(z2) + cycleDim(z3) != 2 * D - 2)
        throw DimensionMismatch("cone triple terms need dimensions summing to 2D-2");
    const std::array<const CoordinatizedCycle*, 3> z{&z1, &z2, &z3};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            requireDisjoint({cycleSlot(*z[i], true), cycleSlot(*z[j], true)}, "cycle supports");
    std::array<Slot, 3> bases{cycleSlot(z1, true), cycleSlot(z2, true), cycleSlot(z3, true)};

    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(attempt)));
        std::array<RationalVector, 3> apex{randomApex(rng, D), randomApex(rng, D), randomApex(rng, D)};
        if (apex[0] == apex[1] || apex[0] == apex[2] || apex[1] == apex[2])
            continue;
        std::array<Slot, 3> cones;
        try {
            for (std::size_t i = 0; i < 3; ++i)
                cones[i] = coneSlot(*z[i], apex[i], true);
        } catch (const GenericityViolation&) {
            continue;
        }
        std::array<int, 3> terms{};
        bool generic = true;
        for (std::size_t t = 0; t < 3 && generic; ++t) {
            std::vector<Slot> slots;
            for (std::size_t i = 0; i < 3; ++i)
                slots.push_back(i == t ? bases[i] : cones[i]);
            auto scan = scanTuples(slots, false, false);
            generic = scan.generic;
            terms[t] = static_cast<int>(scan.sum % 2);
        }
        if (generic)
            return terms;
    }
    throw GenericityViolation("no generic cone apexes for the triple terms");
}

Ornament productOrnament(int k, int r)
{
    if (k < 1 || r < 2)
        throw InvalidInput("product ornament needs k >= 1 and r >= 2");
    const int d = k * r;
    const int m = k * (r - 1);
    if (m > 16)
        throw BudgetExceeded("product ornament component too large");
    const auto sphere = cubeBoundary(m);
    Ornament orn;
    orn.d = d;
    orn.name = "product-ornament-" + std::to_string(k) + "-" + std::to_string(r);
    const Rational half(1, 2);
    for (int i = 0; i < r; ++i) {
        std::vector<int> free;
        for (int c = 0; c < d; ++c)
            if (c / k != i)
                free.push_back(c);
        OrnamentComponent comp{sphere, {}, 1};
        for (int mask = 0; mask < (1 << m); ++mask) {
            RationalVector v(static_cast<std::size_t>(d), half);
            for (int j = 0; j < m; ++j)
                v[static_cast<std::size_t>(free[static_cast<std::size_t>(j)])] = (mask >> j) & 1;
            comp.coords.push_back(std::move(v));
        }
        orn.components.push_back(std::move(comp));
    }
    return orn;
}

Ornament splitOrnament(int k, int r)
{
    if (k < 1 || r < 2)
        throw InvalidInput("split ornament needs k >= 1 and r >= 2");
    const int d = k * r;
    const int m = k * (r - 1);
    if (m > 16)
        throw BudgetExceeded("split ornament component too large");
    const auto sphere = cubeBoundary(m);
    Ornament orn;
    orn.d = d;
    orn.name = "split-ornament-" + std::to_string(k) + "-" + std::to_string(r);
    for (int i = 0; i < r; ++i) {
        // x_1 in its own slab; the other cube coordinates shrink slightly per component
        const Rational lo1(2 * i + 1, 2 * r + 1), hi1(2 * i + 2, 2 * r + 1);
        const Rational inset = Rational(1, 4) + Rational(i, 16 * r);
        OrnamentComponent comp{sphere, {}, 1};
        for (int mask = 0; mask < (1 << m); ++mask) {
            RationalVector v(static_cast<std::size_t>(d), Rational(1, 2));
            v[0] = 0;
            for (int j = 0; j < m; ++j) {
                const bool high = (mask >> j) & 1;
                Rational x = j == 0 ? (high ? hi1 : lo1) : (high ? 1 - inset : inset);
                x.canonicalize();
                v[static_cast<std::size_t>(j + 1)] = x;
            }
            comp.coords.push_back(std::move(v));
        }
        orn.components.push_back(std::move(comp));
    }
    return orn;
}

Ornament cnld1Ornament()
{
    auto inFace = [](std::initializer_list<std::pair<const char*, const char*>> pts) {
        std::vector<RationalVector> out;
        for (const auto& [x, y] : pts)
            out.push_back(vec({x, y, "1"}));
        return out;
    };
    Ornament orn;
    orn.d = 3;
    orn.name = "cnld1";
    // figure 8: Q1 -> Q4 -> Q3 -> Q2, self-crossing at (1/2, 1/2)
    orn.components.push_back(
        {polygon(4), inFace({{"3/4", "9/20"}, {"1/4", "11/20"}, {"9/20", "3/4"}, {"11/20", "1/4"}}), 1});
    orn.components.push_back(
        {polygon(4), inFace({{"1/10", "2/5"}, {"9/10", "2/5"}, {"9/10", "3/5"}, {"1/10", "3/5"}}), 1});
    orn.components.push_back(
        {polygon(4), inFace({{"2/5", "1/10"}, {"3/5", "1/10"}, {"3/5", "9/10"}, {"2/5", "9/10"}}), 1});
    validateOrnament(orn);
    if (!cnld1Postconditions(orn).passed)
        throw std::logic_error("figure-8 ornament coordinates fail their postconditions");
    return orn;
}

Cnld1Certificate cnld1Postconditions(const Ornament& orn)
{
    Cnld1Certificate cert;
    cert.points = {vec({"3/5", "2/5"}), vec({"2/5", "3/5"}), vec({"2/5", "2/5"}), vec({"3/5", "3/5"})};
    if (orn.d != 3 || orn.r() != 3)
        return cert;
    for (const auto& c : orn.components)
        for (const auto& v : c.coords)
            if (v[2] != 1)
                return cert;

    using Segment = std::pair<RationalVector, RationalVector>; // oriented, face chart (x, y)
    auto segments = [&](std::size_t i) {
        auto z = componentCycle(orn, i);
        std::vector<Segment> out;
        const auto& edges = z.complex.simplices(1);
        for (const auto& [idx, c] : z.cycle.coefficients) {
            RationalVector a{z.coords[edges[idx][0]][0], z.coords[edges[idx][0]][1]};
            RationalVector b{z.coords[edges[idx][1]][0], z.coords[edges[idx][1]][1]};
            if (c > 0)
                out.emplace_back(a, b);
            else
                out.emplace_back(b, a);
        }
        return out;
    };
    auto cross = [](const RationalVector& u, const RationalVector& v) -> Rational { return u[0] * v[1] - u[1] * v[0]; };

    const auto c1 = segments(0), c2 = segments(1), c3 = segments(2);
    std::array<bool, 4> seen{};
    bool clean = true;
    for (const auto& [a2, b2] : c2)
        for (const auto& [a3, b3] : c3) {
            const RationalVector t2 = b2 - a2, t3 = b3 - a3;
            const Rational den = cross(t2, t3);
            if (sgn(den) == 0)
                continue; // parallel edges of the two rectangles never overlap here
            const RationalVector w = a3 - a2;
            const Rational s = cross(w, t3) / den, t = cross(w, t2) / den;
            if (s < 0 || s > 1 || t < 0 || t > 1)
                continue;
            if (s == 0 || s == 1 || t == 0 || t == 1)
                clean = false; // crossing at a vertex
            const RationalVector p = a2 + s * t2;
            ++cert.crossingCount;
            for (std::size_t q = 0; q < 4; ++q)
                if (p == cert.points[q]) {
                    seen[q] = true;
                    cert.crossingSigns[q] = sgn(den);
                }
        }

    for (std::size_t q = 0; q < 4; ++q) {
        const auto& p = cert.points[q];
        int winding = 0;
        for (const auto& [a, b] : c1) {
            const Rational side = cross(b - a, p - a);
            if (sgn(side) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
                std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]))
                clean = false; // point on the figure 8
            if (a[1] <= p[1] && p[1] < b[1] && sgn(side) > 0)
                ++winding;
            else if (b[1] <= p[1] && p[1] < a[1] && sgn(side) < 0)
                --winding;
        }
        cert.windings[q] = winding;
    }
    cert.passed = clean && cert.crossingCount == 4 && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
                  cert.crossingSigns == std::array<int, 4>{1, 1, -1, -1} &&
                  cert.windings == std::array<int, 4>{1, -1, 0, 0};
    return cert;
}

std::array<CoordinatizedCycle, 3> cliffordTriple()
{
    // torus: vertex (i, j) -> (corner_i, corner_j) with the corners of the unit square in cyclic order
    const std::array<std::pair<int, int>, 4> corner{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    auto torus = torusGrid(4, 4);
    std::vector<RationalVector> coords;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            coords.push_back({Rational(corner[i].first), Rational(corner[i].second), Rational(corner[j].first),
                              Rational(corner[j].second)});
    CoordinatizedCycle t{torus, coords, fundamentalCycle(torus)};

    auto tetra = [](std::vector<RationalVector> pts) {
        auto k = skeleton(2, 3);
        return CoordinatizedCycle{k, std::move(pts), fundamentalCycle(k)};
    };
    // thin tetrahedra over a triangle in one square factor, parked near the top
    // edge of the other factor (above the other triangle, so they are disjoint)
    auto near1 = tetra({vec({"1/5", "1/5", "1/2", "9/10"}), vec({"4/5", "1/5", "1/2", "9/10"}),
                        vec({"1/2", "4/5", "1/2", "9/10"}), vec({"1/2", "2/5", "11/20", "17/20"})});
    auto near2 = tetra({vec({"1/2", "9/10", "1/5", "1/5"}), vec({"1/2", "9/10", "4/5", "1/5"}),
                        vec({"1/2", "9/10", "1/2", "4/5"}), vec({"11/20", "17/20", "1/2", "2/5"})});
    return {std::move(t), std::move(near1), std::move(near2)};
}

} // namespace vko
