#include "vko/obstruction.hpp"

#include "vko/error.hpp"
#include "vko/parallel.hpp"

#include <algorithm>

namespace vko {

namespace {

// Top cells of the deleted product are products of kr(r-1)/r-dimensional simplices.
int topCellDimension(int k, int r)
{
    return k * r * (r - 1);
}

std::vector<PreparedSimplex> prepareTop(const PLMap& f)
{
    const auto& top = f.complex().simplices(f.complex().dimension());
    std::vector<PreparedSimplex> out(top.size());
    parallelFor(top.size(), [&](std::size_t i) { out[i] = prepareSimplex(f.image(top[i])); });
    return out;
}

int cellIntersection(const DeletedProductComplex& x, const std::vector<PreparedSimplex>& prepared, const Cell& cell)
{
    const int top = x.base().dimension();
    const std::uint32_t offset = x.simplexId(top, 0);
    std::vector<const PreparedSimplex*> chain;
    for (auto id : cell)
        chain.push_back(&prepared.at(id - offset));
    auto result = intersectPrepared(chain);
    switch (result.kind) {
    case FlatIntersectionResult::Kind::Empty:
        return 0;
    case FlatIntersectionResult::Kind::Interior:
        return normalFrameSign(chain);
    default:
        throw GenericityViolation("degenerate intersection of a top cell despite the certificate");
    }
}

void requireShape(const SimplicialComplex& k, int kk, int r)
{
    if (kk < 1)
        throw InvalidInput("k must be positive");
    if (r < 2)
        throw InvalidInput("r must be at least 2");
    if (k.dimension() > kk * (r - 1))
        throw DimensionMismatch("dim K exceeds k(r-1)");
}

bool hasTopCells(const SimplicialComplex& k, const DeletedProductComplex& x, int kk, int r)
{
    return k.dimension() == kk * (r - 1) && x.topDimension() >= topCellDimension(kk, r) &&
           x.orbitCount(topCellDimension(kk, r)) > 0;
}

void checkBudget(const DeletedProductComplex& x, int top, const ObstructionOptions& options)
{
    const std::size_t rows = x.orbitCount(top), cols = x.orbitCount(top - 1);
    if (rows > options.matrixBudget || cols > options.matrixBudget)
        throw BudgetExceeded("folded coboundary is " + std::to_string(rows) + "x" + std::to_string(cols) +
                             ", above the matrix budget of " + std::to_string(options.matrixBudget));
}

} // namespace

IntegerVector intersectionCocycle(const PLMap& f, const DeletedProductComplex& x)
{
    const int r = x.r();
    if (!f.certificate() || f.certificate()->r != r)
        throw GenericityViolation("intersection cocycle needs a map certified for r-tuples");
    const int d = f.ambientDim();
    if (d % r != 0 || f.complex().dimension() > (d / r) * (r - 1))
        throw DimensionMismatch("need d = kr and dim K <= k(r-1)");
    const int kk = d / r;
    const int top = topCellDimension(kk, r);
    if (f.complex().dimension() != kk * (r - 1) || x.topDimension() < top)
        return {};
    auto prepared = prepareTop(f);
    IntegerVector c(x.orbitCount(top));
    parallelFor(c.size(), [&](std::size_t orbit) {
        c[orbit] = cellIntersection(x, prepared, x.cells(top)[x.representative(top, orbit)]);
    });
    return c;
}

bool isPrimePower(int r)
{
    if (r < 2)
        throw InvalidInput("prime-power test needs r >= 2");
    int p = 2;
    while (p * p <= r && r % p != 0)
        ++p;
    if (r % p != 0)
        return true; // r itself is prime
    while (r % p == 0)
        r /= p;
    return r == 1;
}

std::string verdictText(const ObstructionReport& rep)
{
    const std::string r = std::to_string(rep.r);
    const std::string space = "R^" + std::to_string(rep.d);
    std::string text;
    if (rep.ring == Ring::Z2) {
        text = rep.classTrivial
                   ? "obstruction zero mod 2; Z-almost " + r + "-embeddability in " + space +
                         " undecided by the mod-2 test"
                   : "obstruction nonzero mod 2: not Z-almost " + r + "-embeddable in " + space +
                         ", hence not almost " + r + "-embeddable";
    } else if (!rep.classTrivial) {
        text = "not Z-almost " + r + "-embeddable in " + space + ", hence not almost " + r + "-embeddable";
    } else if (rep.k >= 2 && rep.k + rep.r >= 5) {
        text = "Z-almost " + r + "-embeddable in " + space + ", hence almost " + r + "-embeddable";
    } else if (rep.k == 1) {
        text = "Z-almost " + r + "-embeddable in " + space + "; almost-" + r + "-embeddability unknown";
    } else {
        text = "Z-almost " + r + "-embeddable in " + space + "; almost-" + r + "-embeddability inconclusive";
    }
    if (rep.degenerate)
        text += " (degenerate: no top cells in the deleted product)";
    if (!rep.primePower)
        text += " (r is not a prime power: the obstruction is predicted to vanish)";
    return text;
}

ObstructionReport obstructionTrivial(const SimplicialComplex& k, int kk, int r, Ring ring, std::uint64_t seed,
                                     const ObstructionOptions& options)
{
    requireShape(k, kk, r);
    ObstructionReport rep;
    rep.k = kk;
    rep.r = r;
    rep.d = kk * r;
    rep.ring = ring;
    rep.seed = seed;
    rep.primePower = isPrimePower(r);
    const int top = topCellDimension(kk, r);

    auto finishDegenerate = [&] {
        rep.degenerate = true;
        rep.classTrivial = true;
        if (ring == Ring::Z)
            rep.witness = IntegerVector{};
        else
            rep.witness2 = std::vector<std::uint8_t>{};
        rep.verdict = verdictText(rep);
        return rep;
    };
    if (k.dimension() < kk * (r - 1))
        return finishDegenerate();

    auto x = deletedProduct(k, r, {options.order, options.cellBudget});
    if (!hasTopCells(k, x, kk, r))
        return finishDegenerate();
    checkBudget(x, top, options);

    auto f = randomGenericMap(k, rep.d, seed, r, options.retries);
    rep.mapAttempts = f.certificate()->attempts;
    const IntegerVector c = intersectionCocycle(f, x);
    rep.topOrbits = c.size();
    rep.unknowns = x.orbitCount(top - 1);
    rep.cocycleSupport = static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const Integer& v) { return v != 0; }));

    // equivariance on an evenly spread sample of top cells
    {
        auto prepared = prepareTop(f);
        const auto& cells = x.cells(top);
        const std::size_t stride = std::max<std::size_t>(1, cells.size() / 400);
        std::vector<int> bad(cells.size(), 0);
        std::vector<std::size_t> sample;
        for (std::size_t i = 0; i < cells.size(); i += stride)
            sample.push_back(i);
        parallelFor(sample.size(), [&](std::size_t s) {
            const std::size_t i = sample[s];
            const Integer expected = x.weight(top, i, kk) * c[x.orbitOf(top, i).orbit];
            bad[i] = cellIntersection(x, prepared, cells[i]) != expected;
        });
        rep.cocycleEquivariant = std::none_of(bad.begin(), bad.end(), [](int b) { return b != 0; });
    }
    if (x.orbitCount(top + 1) > 0) {
        auto next = equivariantCoboundaryMatrix(x, top + 1, kk);
        auto image = next * c;
        rep.cocycleCondition = std::all_of(image.begin(), image.end(), [](const Integer& v) { return v == 0; });
    }

    const auto delta = equivariantCoboundaryMatrix(x, top, kk);
    if (ring == Ring::Z) {
        auto result = solveIntegerSystem(delta, c);
        if (result.solvable()) {
            if (delta * *result.solution != c)
                throw std::logic_error("integer witness fails verification");
            rep.classTrivial = true;
            rep.witness = std::move(result.solution);
        } else {
            rep.certificate = result.certificate;
        }
    } else {
        auto a = Mod2Matrix::fromSparse(delta);
        std::vector<std::uint8_t> b(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            b[i] = mpz_odd_p(c[i].get_mpz_t()) ? 1 : 0;
        if (auto sol = solveMod2System(a, b)) {
            if (a * *sol != b)
                throw std::logic_error("mod-2 witness fails verification");
            rep.classTrivial = true;
            rep.witness2 = std::move(sol);
        }
    }
    rep.verdict = verdictText(rep);
    return rep;
}

EmbeddabilityVerdict decideEmbeddability(const SimplicialComplex& k, int kk, int r, std::uint64_t seed,
                                         const ObstructionOptions& options)
{
    EmbeddabilityVerdict v;
    v.report = obstructionTrivial(k, kk, r, Ring::Z, seed, options);
    v.zAlmost = v.report.classTrivial;
    if (!v.zAlmost)
        v.almost = AlmostEmbeddability::No;
    else if (kk >= 2 && kk + r >= 5)
        v.almost = AlmostEmbeddability::Yes;
    else if (kk == 1)
        v.almost = AlmostEmbeddability::Unknown;
    else
        v.almost = AlmostEmbeddability::Inconclusive;
    v.text = v.report.verdict;
    return v;
}

bool independenceOfMap(const SimplicialComplex& k, int kk, int r, std::uint64_t seedA, std::uint64_t seedB,
                       const ObstructionOptions& options)
{
    requireShape(k, kk, r);
    if (k.dimension() < kk * (r - 1))
        return true;
    auto x = deletedProduct(k, r, {options.order, options.cellBudget});
    if (!hasTopCells(k, x, kk, r))
        return true;
    const int top = topCellDimension(kk, r);
    checkBudget(x, top, options);
    auto c1 = intersectionCocycle(randomGenericMap(k, kk * r, seedA, r, options.retries), x);
    auto c2 = intersectionCocycle(randomGenericMap(k, kk * r, seedB, r, options.retries), x);
    IntegerVector diff(c1.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = c1[i] - c2[i];
    const auto delta = equivariantCoboundaryMatrix(x, top, kk);
    auto result = solveIntegerSystem(delta, diff);
    return result.solvable() && delta * *result.solution == diff;
}

} // namespace vko
