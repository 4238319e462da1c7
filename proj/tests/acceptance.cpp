// Acceptance run: prints one PASS/FAIL line per criterion, exits nonzero if any fails.

#include "oracles.hpp"

#include "vko/deleted.hpp"
#include "vko/error.hpp"
#include "vko/exactlin.hpp"
#include "vko/lattice.hpp"
#include "vko/linking.hpp"
#include "vko/obstruction.hpp"
#include "vko/plmap.hpp"
#include "vko/random.hpp"
#include "vko/simplicial.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace vko;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

bool disjoint(const Simplex& a, const Simplex& b)
{
    for (auto v : a)
        if (std::find(b.begin(), b.end(), v) != b.end())
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// 1. parity of the number of intersecting disjoint triangle pairs

Outcome parityOfSkeleton()
{
    const auto k = skeleton(2, 6);
    const std::uint64_t seed = 0;
    const auto parities = vanKampenParity(k, 4, 50, seed);
    const auto odd = std::count(parities.begin(), parities.end(), 1);

    // recount a few trials with the plain pairwise solver
    int mismatches = 0;
    const auto& tri = k.simplices(2);
    for (int t = 0; t < 5; ++t) {
        auto f = randomGenericMap(k, 4, deriveSeed(seed, 1000003ULL + static_cast<std::uint64_t>(t)), 2);
        int count = 0;
        for (std::size_t i = 0; i < tri.size(); ++i)
            for (std::size_t j = i + 1; j < tri.size(); ++j) {
                if (!disjoint(tri[i], tri[j]))
                    continue;
                std::vector<SimplexImage> pair{f.image(tri[i]), f.image(tri[j])};
                if (intersectFlats(pair).kind == FlatIntersectionResult::Kind::Interior)
                    ++count;
            }
        mismatches += (count % 2) != parities[static_cast<std::size_t>(t)];
    }
    std::ostringstream s;
    s << odd << "/50 odd; " << 5 - mismatches << "/5 trials recounted pairwise agree";
    return {odd == 50 && mismatches == 0, s.str()};
}

// ---------------------------------------------------------------------------
// 2. skeleton(2,6) obstruction nonzero over Z/2 and Z

Outcome skeletonNontrivial()
{
    const auto k = skeleton(2, 6);
    auto z2 = obstructionTrivial(k, 2, 2, Ring::Z2, 0);
    auto z = obstructionTrivial(k, 2, 2, Ring::Z, 0);

    // mod-2 oracle: rank [A | c] > rank A
    auto x = deletedProduct(k, 2);
    auto f = randomGenericMap(k, 4, 0, 2);
    const auto c = intersectionCocycle(f, x);
    const auto delta = equivariantCoboundaryMatrix(x, 4, 2);
    auto a = oracle::mod2Dense(delta);
    const std::size_t rankA = oracle::rankMod2(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i].push_back(static_cast<std::uint8_t>(mpz_odd_p(c[i].get_mpz_t()) ? 1 : 0));
    const std::size_t rankAb = oracle::rankMod2(a);

    std::ostringstream s;
    s << "Z/2 trivial=" << z2.classTrivial << " (oracle ranks " << rankA << " vs " << rankAb << "), Z trivial="
      << z.classTrivial << (z.certificate ? " [" + z.certificate->describe() + "]" : "") << "; system "
      << z.topOrbits << "x" << z.unknowns;
    return {!z2.classTrivial && !z.classTrivial && z.certificate && rankAb == rankA + 1 && z.topOrbits == 70 &&
                z.unknowns == 210,
            s.str()};
}

// ---------------------------------------------------------------------------
// 3. FKT complex: trivial over Z with a verified witness

Outcome fktTrivial()
{
    const auto k = fktComplex();
    auto rep = obstructionTrivial(k, 2, 2, Ring::Z, 0);
    if (!rep.classTrivial || !rep.witness)
        return {false, "class reported nontrivial: " + rep.verdict};

    // check δφ = c on the full (unfolded) deleted product
    auto x = deletedProduct(k, 2);
    auto f = randomGenericMap(k, 4, 0, 2);
    const auto c = intersectionCocycle(f, x);
    const auto full = coboundaryMatrix(x, 4);
    const bool verified = full * unfoldCochain(x, 3, 2, *rep.witness) == unfoldCochain(x, 4, 2, c);
    const bool inconclusive = rep.verdict.find("almost-2-embeddability inconclusive") != std::string::npos;
    std::ostringstream s;
    s << rep.topOrbits << "x" << rep.unknowns << " system, cocycle support " << rep.cocycleSupport
      << ", witness verified on all " << x.cells(4).size() << " top cells: " << (verified ? "yes" : "no")
      << "; verdict \"" << rep.verdict << "\"";
    return {verified && inconclusive && rep.cocycleSupport > 0, s.str()};
}

// ---------------------------------------------------------------------------
// 4. product ornament for k = 2, r = 3

Outcome productOrnamentLinking()
{
    const auto orn = productOrnament(2, 3);
    std::vector<long long> values;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        values.push_back(rLinkingNumber(orn, seed));
    const bool constant = std::all_of(values.begin(), values.end(), [&](long long v) { return v == values[0]; });
    const auto mirrored = reflectComponent(orn, 0);
    const long long reflected = rLinkingNumber(mirrored, 0);
    std::ostringstream s;
    s << "lk = " << values[0] << " for seeds 0..9 (" << (constant ? "constant" : "NOT constant") << "), "
      << orn.components[0].complex.count(3) << " tetrahedra per component; reflected lk = " << reflected;
    return {constant && (values[0] == 1 || values[0] == -1) && reflected == -values[0], s.str()};
}

// ---------------------------------------------------------------------------
// 5. figure-8 ornament

Outcome figureEight()
{
    const auto orn = cnld1Ornament();
    const auto cert = cnld1Postconditions(orn);
    std::vector<long long> values;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        values.push_back(rLinkingNumber(orn, seed));
    const bool zero = std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; });
    std::ostringstream s;
    s << "lk = " << values[0] << " (5 seeds " << (zero ? "all 0" : "not all 0") << "); crossings "
      << cert.crossingCount << ", signs";
    for (int v : cert.crossingSigns)
        s << ' ' << v;
    s << ", windings";
    for (int v : cert.windings)
        s << ' ' << v;
    return {zero && cert.passed, s.str()};
}

// ---------------------------------------------------------------------------
// 6. cocycles of different generic maps are cohomologous

Outcome mapIndependence()
{
    std::ostringstream s;
    bool pass = true;
    const std::vector<std::pair<std::string, SimplicialComplex>> cases{{"skeleton(2,6)", skeleton(2, 6)},
                                                                       {"fkt", fktComplex()}};
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> seeds{{0, 1}, {2, 3}};
    for (const auto& [name, k] : cases) {
        auto x = deletedProduct(k, 2);
        for (const auto& [a, b] : seeds) {
            const bool cohomologous = independenceOfMap(k, 2, 2, a, b);
            const auto ca = intersectionCocycle(randomGenericMap(k, 4, a, 2), x);
            const auto cb = intersectionCocycle(randomGenericMap(k, 4, b, 2), x);
            std::size_t differ = 0;
            for (std::size_t i = 0; i < ca.size(); ++i)
                differ += ca[i] != cb[i];
            s << name << " seeds " << a << "," << b << ": " << (cohomologous ? "cohomologous" : "NOT cohomologous")
              << " (" << differ << " orbits differ); ";
            pass = pass && cohomologous;
        }
    }
    return {pass, s.str()};
}

// ---------------------------------------------------------------------------
// 7. sign calculus

SimplicialComplex randomComplex(Rng& rng, int n, int triangles)
{
    std::set<Simplex> chosen;
    while (static_cast<int>(chosen.size()) < triangles) {
        std::set<int> s;
        while (s.size() < 3)
            s.insert(static_cast<int>(rng.uniform(0, n - 1)));
        chosen.insert(Simplex(s.begin(), s.end()));
    }
    return SimplicialComplex::fromMaximal(n, {chosen.begin(), chosen.end()});
}

Permutation randomPermutation(Rng& rng, int r)
{
    Permutation p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    for (int i = r - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
    return p;
}

// Geometric half of a case: one r-fold point of a random generic map.
// Returns an error description, or "" when every check passed; sets `found`.
std::string geometricCase(Rng& rng, int type, bool& found)
{
    SimplicialComplex k;
    int d = 0, r = 0;
    if (type == 0) {
        k = skeleton(2, 6), d = 4, r = 2;
    } else if (type == 1) {
        k = skeleton(1, 5), d = 2, r = 2;
    } else {
        k = randomComplex(rng, 9, 24), d = 3, r = 3;
    }
    const int kk = d / r;
    auto f = randomGenericMap(k, d, rng.next(), r);
    auto points = globalRFoldPoints(f, r);
    found = !points.empty();
    if (points.empty())
        return "";
    const auto& p = points[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(points.size()) - 1))];
    const auto& tops = k.simplices(k.dimension());
    std::vector<Simplex> tuple;
    for (auto i : p.tuple)
        tuple.push_back(tops[i]);

    const int base = intersectionNumber(f, tuple);
    if (base != p.sign || (base != 1 && base != -1))
        return "intersection number disagrees with the r-fold point sign";

    // independent sign: block determinant of normal frames, cofactor expansion
    {
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(d));
        for (const auto& s : tuple)
            for (const auto& n : positiveNormalFrame(f.image(s)))
                for (int i = 0; i < d; ++i)
                    rows[static_cast<std::size_t>(i)].push_back(n[static_cast<std::size_t>(i)]);
        if (sgn(oracle::cofactorDeterminant(rows)) != base)
            return "sign differs from the cofactor determinant of the normal frames";
    }

    // orientation flip of one simplex
    auto flipped = tuple;
    auto& victim = flipped[static_cast<std::size_t>(rng.uniform(0, r - 1))];
    std::swap(victim[0], victim[1]);
    if (intersectionNumber(f, flipped) != -base)
        return "orientation flip does not negate";

    // permutation of the tuple: sign(π)^k
    const auto pi = randomPermutation(rng, r);
    std::vector<Simplex> permuted(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i)
        permuted[static_cast<std::size_t>(pi[i])] = tuple[i];
    const int expect = (kk % 2 == 1 ? permutationSign(pi) : 1) * base;
    if (intersectionNumber(f, permuted) != expect)
        return "tuple permutation does not act by sign(pi)^k";
    return "";
}

std::string combinatorialCase(Rng& rng)
{
    const int r = static_cast<int>(rng.uniform(2, 3));
    const int k = static_cast<int>(rng.uniform(1, 2));
    const int n = static_cast<int>(rng.uniform(6, 8));
    const auto base = randomComplex(rng, n, static_cast<int>(rng.uniform(3, 8)));
    const auto x = deletedProduct(base, r);
    int factorial = 1;
    for (int i = 2; i <= r; ++i)
        factorial *= i;

    for (int q = 0; q <= x.topDimension(); ++q) {
        std::vector<int> sizes(x.orbitCount(q), 0);
        for (std::size_t c = 0; c < x.cells(q).size(); ++c) {
            const auto& entry = x.orbitOf(q, c);
            ++sizes[entry.orbit];
            const auto& rep = x.cells(q)[x.representative(q, entry.orbit)];
            if (applyPermutation(entry.perm, rep) != x.cells(q)[c])
                return "orbit table permutation does not map the representative to the cell";
        }
        if (std::any_of(sizes.begin(), sizes.end(), [&](int s) { return s != factorial; }))
            return "orbit of size other than r!";
    }

    // folded δ∘δ = 0, and folding commutes with δ
    for (int q = 1; q <= x.topDimension(); ++q) {
        const auto dq = equivariantCoboundaryMatrix(x, q, k);
        IntegerVector phi(x.orbitCount(q - 1));
        for (auto& v : phi)
            v = rng.uniform(-3, 3);
        if (coboundaryMatrix(x, q) * unfoldCochain(x, q - 1, k, phi) != unfoldCochain(x, q, k, dq * phi))
            return "folded coboundary does not commute with unfolding in dimension " + std::to_string(q);
        if (q + 1 <= x.topDimension()) {
            const auto next = equivariantCoboundaryMatrix(x, q + 1, k);
            const auto twice = next * (dq * phi);
            if (std::any_of(twice.begin(), twice.end(), [](const Integer& v) { return v != 0; }))
                return "folded delta squared is nonzero in dimension " + std::to_string(q);
        }
    }

    // 1-cocycle identity w(πσ, e) = w(π, σe) w(σ, e) on random dimension vectors
    for (int t = 0; t < 10; ++t) {
        std::vector<int> dims(static_cast<std::size_t>(r));
        for (auto& dd : dims)
            dd = static_cast<int>(rng.uniform(0, 3));
        const auto pi = randomPermutation(rng, r), sigma = randomPermutation(rng, r);
        std::vector<int> moved(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i)
            moved[static_cast<std::size_t>(sigma[i])] = dims[i];
        if (koszulWeight(compose(pi, sigma), dims, k) != koszulWeight(pi, moved, k) * koszulWeight(sigma, dims, k))
            return "weight violates the cocycle identity";
    }
    return "";
}

Outcome signCalculus()
{
    int failures = 0, points = 0;
    std::string first;
    for (int i = 0; i < 100; ++i) {
        Rng rng(deriveSeed(7, static_cast<std::uint64_t>(i)));
        bool found = false;
        std::string err = geometricCase(rng, i % 3, found);
        if (err.empty())
            err = combinatorialCase(rng);
        points += found;
        if (!err.empty()) {
            ++failures;
            if (first.empty())
                first = "case " + std::to_string(i) + ": " + err;
        }
    }
    std::ostringstream s;
    s << "100 cases, " << points << " with an r-fold point checked, " << failures << " failures";
    if (!first.empty())
        s << " (" << first << ")";
    return {failures == 0 && points >= 50, s.str()};
}

// ---------------------------------------------------------------------------
// 8. Leibniz parity for cone triples in [0,1]^4

CoordinatizedCycle simplexBoundary(Rng& rng, int m)
{
    // boundary of a random (m+1)-simplex near a random center
    auto k = skeleton(m, m + 1);
    std::vector<RationalVector> coords;
    RationalVector center(4);
    for (auto& c : center)
        c = rng.uniformRational(30, 70, 100);
    for (int v = 0; v <= m + 1; ++v) {
        RationalVector p(4);
        for (std::size_t j = 0; j < 4; ++j)
            p[j] = center[j] + rng.uniformRational(-30, 30, 100);
        coords.push_back(std::move(p));
    }
    IntegerChain z{m, {}};
    const auto& tops = k.simplices(m);
    // ∂[0..m+1]: the face missing vertex i has sign (-1)^i
    for (std::size_t i = 0; i < tops.size(); ++i) {
        int missing = 0;
        while (std::find(tops[i].begin(), tops[i].end(), missing) != tops[i].end())
            ++missing;
        z.coefficients[i] = missing % 2 == 0 ? 1 : -1;
    }
    return {k, coords, z};
}

RationalVector offset(const RationalVector& p, std::initializer_list<Rational> d)
{
    RationalVector out = p;
    std::size_t j = 0;
    for (const auto& v : d)
        out[j++] += v;
    return out;
}

// A circle piercing a small solid tetrahedron (so it links the tetrahedron's
// boundary sphere), both inside a 4-simplex whose boundary is the third cycle.
std::array<CoordinatizedCycle, 3> linkedTriple(Rng& rng)
{
    auto jitter = [&](int scale) { return rng.uniformRational(-scale, scale, 1000); };
    RationalVector p(4);
    for (auto& x : p)
        x = Rational(18, 100) + jitter(20);
    const Rational s(1, 25);

    auto circle = simplexBoundary(rng, 1);
    circle.coords = {offset(p, {jitter(5), jitter(5), jitter(5), s}), offset(p, {jitter(5), jitter(5), jitter(5), -s}),
                     offset(p, {3 * s, jitter(10), jitter(10), s / 2})};

    auto sphere = simplexBoundary(rng, 2);
    sphere.coords.clear();
    for (const auto& [a, b, c] : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}})
        sphere.coords.push_back(offset(p, {a * s + jitter(8), b * s + jitter(8), c * s + jitter(8), 0}));

    auto ball = simplexBoundary(rng, 3);
    ball.coords.clear();
    for (int v = 0; v < 5; ++v) {
        RationalVector q(4, Rational(2, 100));
        if (v > 0)
            q[static_cast<std::size_t>(v - 1)] += Rational(96, 100);
        for (auto& x : q)
            x += jitter(10);
        ball.coords.push_back(std::move(q));
    }
    return {std::move(circle), std::move(sphere), std::move(ball)};
}

Outcome leibnizParity()
{
    int failures = 0, nonzero = 0, valid = 0, rejected = 0;
    std::ostringstream s;
    auto check = [&](const std::array<CoordinatizedCycle, 3>& z, std::uint64_t seed) {
        const auto t = coneTripleTerms(z[0], z[1], z[2], seed);
        if ((t[0] + t[1] + t[2]) % 2 != 0)
            ++failures;
        if (t[0] || t[1] || t[2])
            ++nonzero;
    };
    Rng rng(8);
    std::string firstRejection[2];
    for (int attempt = 0; valid < 50 && attempt < 2000; ++attempt) {
        std::array<CoordinatizedCycle, 3> z;
        if (valid % 3 == 2) {
            z = linkedTriple(rng);
        } else {
            const bool mixed = valid % 3 == 1;
            z = {simplexBoundary(rng, mixed ? 1 : 2), simplexBoundary(rng, 2), simplexBoundary(rng, mixed ? 3 : 2)};
        }
        try {
            check(z, rng.next());
            ++valid;
        } catch (const Error& e) {
            ++rejected; // supports meet, or no generic apexes
            auto& note = firstRejection[valid % 3 == 2];
            if (note.empty())
                note = e.what();
        }
    }
    const auto clifford = cliffordTriple();
    const auto ct = coneTripleTerms(clifford[0], clifford[1], clifford[2], 0);
    if ((ct[0] + ct[1] + ct[2]) % 2 != 0)
        ++failures;
    if (valid < 50)
        s << "only " << valid << " valid triples (first rejections: " << firstRejection[0] << " / "
          << firstRejection[1] << "); ";
    s << valid << " random triples (" << rejected << " rejected samples), " << nonzero
      << " with a nonzero term, " << failures << " parity failures; torus triple terms " << ct[0] << ct[1]
      << ct[2];
    return {valid == 50 && failures == 0 && nonzero > 0, s.str()};
}

// ---------------------------------------------------------------------------
// 9. integer solver against brute force

struct LatticeTally {
    std::size_t systems = 0, solvable = 0, unsolvable = 0, undecided = 0, disagreements = 0;
    std::string first;
};

IntMatrix toIntMatrix(const oracle::SmallMatrix& a, std::size_t n)
{
    IntMatrix m(a.size(), n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(a[i][j]);
    return m;
}

bool certificateHolds(const IntMatrix& a, const IntegerVector& b, const UnsolvabilityCertificate& cert)
{
    const auto snf = smithNormalForm(a);
    if (snf.U * a * snf.V != snf.S)
        return false;
    auto dense = [](const IntMatrix& m) {
        std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                rows[i][j] = m(i, j);
        return rows;
    };
    if (abs(oracle::cofactorDeterminant(dense(snf.U))) != 1 || abs(oracle::cofactorDeterminant(dense(snf.V))) != 1)
        return false;
    const auto y = snf.U * b;
    const std::size_t rank = snf.rank();
    if (cert.kind == UnsolvabilityCertificate::Kind::ZeroRow)
        return cert.index >= rank && cert.index < y.size() && y[cert.index] != 0 && y[cert.index] == cert.value;
    return cert.index < rank && snf.S(cert.index, cert.index) == cert.divisor && y[cert.index] == cert.value &&
           mpz_divisible_p(cert.value.get_mpz_t(), cert.divisor.get_mpz_t()) == 0;
}

void compareSystem(const oracle::SmallMatrix& a, const std::vector<long long>& b, std::size_t n, LatticeTally& tally)
{
    ++tally.systems;
    const IntMatrix am = toIntMatrix(a, n);
    IntegerVector bv;
    for (auto v : b)
        bv.push_back(static_cast<long>(v));
    SparseIntMatrix as(a.size(), n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            as.add(i, j, a[i][j]);

    // oracle verdict: 1 solvable, 0 unsolvable, -1 undecided
    int truth = -1;
    RationalMatrix q(a.size(), n);
    RationalVector qb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            q(i, j) = static_cast<long>(a[i][j]);
        qb.push_back(static_cast<long>(b[i]));
    }
    const auto rat = solveLinear(q, qb);
    if (rat.kind == LinearSolution::Kind::Inconsistent) {
        truth = 0;
    } else if (rat.kind == LinearSolution::Kind::Unique) {
        truth = std::all_of(rat.particular.begin(), rat.particular.end(),
                            [](const Rational& v) { return v.get_den() == 1; });
    } else {
        const long long box = n <= 2 ? 8 : (n == 3 ? 5 : 3);
        if (oracle::bruteForceSolve(a, b, n, box)) {
            truth = 1;
        } else {
            for (long long m = 2; m <= 12 && truth < 0; ++m)
                if (oracle::unsolvableModulo(a, b, n, m))
                    truth = 0;
        }
    }
    if (truth < 0)
        ++tally.undecided;
    else
        ++(truth ? tally.solvable : tally.unsolvable);

    auto fail = [&](const std::string& why) {
        ++tally.disagreements;
        if (tally.first.empty()) {
            std::ostringstream s;
            s << why << " on A =";
            for (const auto& row : a) {
                s << " [";
                for (std::size_t j = 0; j < n; ++j)
                    s << (j ? "," : "") << row[j];
                s << "]";
            }
            s << " b =";
            for (auto v : b)
                s << ' ' << v;
            tally.first = s.str();
        }
    };
    const auto dense = solveIntegerSystem(am, bv);
    const auto sparse = solveIntegerSystem(as, bv);
    if (dense.solvable() != sparse.solvable())
        return fail("dense and sparse routes disagree");
    if (dense.solvable()) {
        if (am * *dense.solution != bv || am * *sparse.solution != bv)
            return fail("returned vector fails A x = b");
        if (truth == 0)
            return fail("solver finds a solution the oracle excludes");
    } else {
        if (!dense.certificate || !certificateHolds(am, bv, *dense.certificate))
            return fail("unsolvability certificate does not check");
        if (truth == 1)
            return fail("solver misses a solution");
    }
}

Outcome latticeOracle()
{
    LatticeTally tally;
    // exhaustive: every shape with at most six matrix and right-hand-side entries
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 4; ++n) {
            const std::size_t entries = m * n + m;
            if (entries > 6)
                continue;
            std::vector<long long> digits(entries, -3);
            while (true) {
                oracle::SmallMatrix a(m, std::vector<long long>(n));
                std::vector<long long> b(m);
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        a[i][j] = digits[i * n + j];
                    b[i] = digits[m * n + i];
                }
                compareSystem(a, b, n, tally);
                std::size_t p = 0;
                while (p < entries && digits[p] == 3)
                    digits[p++] = -3;
                if (p == entries)
                    break;
                ++digits[p];
            }
        }
    const std::size_t exhaustive = tally.systems;
    // random systems up to 4 x 4
    Rng rng(9);
    for (int t = 0; t < 20000; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        oracle::SmallMatrix a(m, std::vector<long long>(n));
        std::vector<long long> b(m);
        for (auto& row : a)
            for (auto& v : row)
                v = rng.uniform(-3, 3);
        if (t % 2 == 0) {
            // right-hand side with a known small solution
            std::vector<long long> x(n);
            for (auto& v : x)
                v = rng.uniform(-2, 2);
            for (std::size_t i = 0; i < m; ++i)
                b[i] = std::inner_product(a[i].begin(), a[i].end(), x.begin(), 0LL);
        } else {
            for (auto& v : b)
                v = rng.uniform(-3, 3);
        }
        compareSystem(a, b, n, tally);
    }
    std::ostringstream s;
    s << tally.systems << " systems (" << exhaustive << " exhaustive), oracle: " << tally.solvable << " solvable, "
      << tally.unsolvable << " unsolvable, " << tally.undecided << " undecided; " << tally.disagreements
      << " disagreements";
    if (!tally.first.empty())
        s << " (" << tally.first << ")";
    return {tally.disagreements == 0, s.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"van Kampen parity of skeleton(2,6) in R^4", parityOfSkeleton},
        {"skeleton(2,6) obstruction nonzero over Z/2 and Z", skeletonNontrivial},
        {"FKT complex trivial over Z with verified witness", fktTrivial},
        {"product ornament k=2 r=3: |lk| = 1, reflection negates, seeds agree", productOrnamentLinking},
        {"figure-8 ornament: lk = 0 with postconditions", figureEight},
        {"independence of the generic map", mapIndependence},
        {"sign-calculus property suite", signCalculus},
        {"Leibniz parity of cone triples in [0,1]^4", leibnizParity},
        {"integer solver against brute-force oracle", latticeOracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
