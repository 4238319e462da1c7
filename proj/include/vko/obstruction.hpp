#pragma once

#include "vko/deleted.hpp"
#include "vko/plmap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vko {

enum class Ring { Z, Z2 };

struct ObstructionOptions {
    std::size_t cellBudget = 1'000'000;
    std::size_t matrixBudget = 5000; // cap on rows and on columns of the folded system
    OrbitOrder order = OrbitOrder::Lexicographic;
    int retries = 32;
};

struct ObstructionReport {
    int k = 0, r = 0, d = 0;
    Ring ring = Ring::Z;
    std::uint64_t seed = 0;
    int mapAttempts = 0;            // samples drawn before the map certified
    bool degenerate = false;        // no top cells, or dim K < k(r-1)
    std::size_t topOrbits = 0;      // rows of the folded system
    std::size_t unknowns = 0;       // columns of the folded system
    std::size_t cocycleSupport = 0; // top orbits with c != 0
    bool cocycleCondition = true;   // δc = 0 (vacuous without cells above the top)
    bool cocycleEquivariant = true; // c(π·e) = sign(π)^k c(e) on the checked cells
    bool classTrivial = false;
    std::optional<IntegerVector> witness;              // ring Z: δφ = c verified
    std::optional<std::vector<std::uint8_t>> witness2; // ring Z2
    std::optional<UnsolvabilityCertificate> certificate;
    bool primePower = true;
    std::string verdict;
};

/// c on top-cell orbits: c(rep) = intersection number of the representative
/// tuple (canonical orientations).
IntegerVector intersectionCocycle(const PLMap& f, const DeletedProductComplex& x);

/// Solvability of δφ = c in the folded complex for one certified generic map.
ObstructionReport obstructionTrivial(const SimplicialComplex& k, int kk, int r, Ring ring, std::uint64_t seed,
                                     const ObstructionOptions& options = {});

enum class AlmostEmbeddability { Yes, No, Inconclusive, Unknown };

struct EmbeddabilityVerdict {
    bool zAlmost = false;
    AlmostEmbeddability almost = AlmostEmbeddability::Unknown;
    std::string text;
    ObstructionReport report;
};

EmbeddabilityVerdict decideEmbeddability(const SimplicialComplex& k, int kk, int r, std::uint64_t seed,
                                         const ObstructionOptions& options = {});

/// Verdict sentence for a finished report; also stored in report.verdict.
std::string verdictText(const ObstructionReport& report);

/// Throws InvalidInput for r < 2.
bool isPrimePower(int r);

/// c1 - c2 is a folded coboundary over Z for the maps drawn with two seeds.
bool independenceOfMap(const SimplicialComplex& k, int kk, int r, std::uint64_t seedA, std::uint64_t seedB,
                       const ObstructionOptions& options = {});

} // namespace vko
