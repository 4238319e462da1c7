#include "vko/error.hpp"
#include "vko/gallery.hpp"
#include "vko/obstruction.hpp"

#include <doctest.h>

using namespace vko;

namespace {

bool primePowerOracle(int n)
{
    int distinct = 0;
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            prime = prime && p % q != 0;
        if (prime && n % p == 0)
            ++distinct;
    }
    return distinct == 1;
}

bool contains(const std::string& text, const std::string& part)
{
    return text.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("prime powers")
{
    for (int n = 2; n <= 200; ++n)
        CHECK(isPrimePower(n) == primePowerOracle(n));
    CHECK_THROWS_AS(isPrimePower(1), InvalidInput);
}

TEST_CASE("graphs in the plane")
{
    // K5 and K3,3 are not Z-almost embeddable in R^2, K4 is
    for (const auto& k : {skeleton(1, 4), k33()}) {
        for (Ring ring : {Ring::Z, Ring::Z2}) {
            const auto rep = obstructionTrivial(k, 1, 2, ring, 0);
            CHECK_FALSE(rep.classTrivial);
            CHECK(rep.cocycleEquivariant);
            CHECK_FALSE(rep.degenerate);
        }
        CHECK(decideEmbeddability(k, 1, 2, 0).almost == AlmostEmbeddability::No);
    }
    const auto k4 = obstructionTrivial(skeleton(1, 3), 1, 2, Ring::Z, 0);
    CHECK(k4.classTrivial);
    REQUIRE(k4.witness);
    CHECK(contains(k4.verdict, "almost-2-embeddability unknown"));
    CHECK(decideEmbeddability(skeleton(1, 3), 1, 2, 0).almost == AlmostEmbeddability::Unknown);
}

TEST_CASE("skeleton(2,6) in R^4")
{
    const auto k = skeleton(2, 6);
    const auto z2 = obstructionTrivial(k, 2, 2, Ring::Z2, 0);
    CHECK_FALSE(z2.classTrivial);
    CHECK(z2.topOrbits == 70);
    CHECK(z2.unknowns == 210);
    CHECK(z2.cocycleEquivariant);
    CHECK(z2.cocycleCondition);
    CHECK(contains(z2.verdict, "nonzero mod 2"));
    const auto z = obstructionTrivial(k, 2, 2, Ring::Z, 4);
    CHECK_FALSE(z.classTrivial);
    CHECK(z.certificate.has_value());
    CHECK(contains(z.verdict, "not Z-almost 2-embeddable in R^4"));

    ObstructionOptions reverse;
    reverse.order = OrbitOrder::ReverseLexicographic;
    CHECK_FALSE(obstructionTrivial(k, 2, 2, Ring::Z, 0, reverse).classTrivial);
    CHECK(independenceOfMap(k, 2, 2, 5, 6));
}

TEST_CASE("FKT complex over Z and Z/2")
{
    const auto k = fktComplex();
    const auto z = obstructionTrivial(k, 2, 2, Ring::Z, 1);
    CHECK(z.classTrivial);
    CHECK(z.witness.has_value());
    CHECK(contains(z.verdict, "almost-2-embeddability inconclusive"));
    const auto z2 = obstructionTrivial(k, 2, 2, Ring::Z2, 1);
    CHECK(z2.classTrivial);
    CHECK(z2.witness2.has_value());
    const auto v = decideEmbeddability(k, 2, 2, 1);
    CHECK(v.zAlmost);
    CHECK(v.almost == AlmostEmbeddability::Inconclusive);
}

TEST_CASE("degenerate and invalid inputs")
{
    const auto edge = obstructionTrivial(skeleton(1, 1), 1, 2, Ring::Z, 0);
    CHECK(edge.degenerate);
    CHECK(edge.classTrivial);
    CHECK(contains(edge.verdict, "degenerate"));
    const auto low = obstructionTrivial(skeleton(1, 6), 2, 2, Ring::Z2, 0);
    CHECK(low.degenerate);

    const auto six = obstructionTrivial(skeleton(1, 3), 1, 6, Ring::Z, 0);
    CHECK(six.degenerate);
    CHECK_FALSE(six.primePower);
    CHECK(contains(six.verdict, "not a prime power"));

    CHECK_THROWS_AS(obstructionTrivial(fktComplex(), 1, 2, Ring::Z, 0), DimensionMismatch);
    CHECK_THROWS_AS(obstructionTrivial(fktComplex(), 2, 1, Ring::Z, 0), InvalidInput);
    CHECK_THROWS_AS(obstructionTrivial(fktComplex(), 0, 2, Ring::Z, 0), InvalidInput);
    ObstructionOptions tight;
    tight.matrixBudget = 100;
    CHECK_THROWS_AS(obstructionTrivial(fktComplex(), 2, 2, Ring::Z, 0, tight), BudgetExceeded);
    tight = {};
    tight.cellBudget = 50;
    CHECK_THROWS_AS(obstructionTrivial(skeleton(2, 6), 2, 2, Ring::Z, 0, tight), BudgetExceeded);
}

TEST_CASE("three disjoint triangles in R^3")
{
    const auto k = SimplicialComplex::fromMaximal(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    const auto rep = obstructionTrivial(k, 1, 3, Ring::Z, 0);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.topOrbits == 1);
    CHECK(rep.cocycleEquivariant);
    CHECK(rep.classTrivial); // the 1-orbit row always has a ±1 entry
}

TEST_CASE("worked examples")
{
    for (int n : {4, 7, 9, 8, 27})
        CHECK(isPrimePower(n));
    for (int n : {6, 12, 10})
        CHECK_FALSE(isPrimePower(n));

    // a triangle has no two disjoint triangles
    const auto triangle = obstructionTrivial(skeleton(2, 2), 2, 2, Ring::Z, 0);
    CHECK(triangle.degenerate);
    CHECK(triangle.classTrivial);
    // a single tetrahedron, k = 3, r = 2: empty obstruction and k + r = 5
    const auto tetra = decideEmbeddability(skeleton(3, 3), 3, 2, 0);
    CHECK(tetra.almost == AlmostEmbeddability::Yes);

    // the cocycle of skeleton(2,6) has odd total weight
    const auto k = skeleton(2, 6);
    const auto x = deletedProduct(k, 2);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto c = intersectionCocycle(randomGenericMap(k, 4, seed), x);
        Integer total = 0;
        for (const auto& v : c)
            total += abs(v);
        CHECK(total % 2 == 1);
    }
    CHECK(independenceOfMap(k, 2, 2, 3, 3));
    CHECK(independenceOfMap(fktComplex(), 2, 2, 0, 1));
}
