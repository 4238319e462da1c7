#include "vko/plmap.hpp"

#include "vko/error.hpp"
#include "vko/parallel.hpp"
#include "vko/random.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <string>

namespace vko {

namespace {

using VertexMask = std::vector<std::uint64_t>;

VertexMask maskOf(const Simplex& s, int vertexCount)
{
    VertexMask m(static_cast<std::size_t>(vertexCount + 63) / 64, 0);
    for (auto v : s)
        m[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    return m;
}

bool disjoint(const VertexMask& a, const VertexMask& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i])
            return false;
    return true;
}

int sortingSign(Simplex s)
{
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j])
                sign = -sign;
            else if (s[i] == s[j])
                throw InvalidInput("simplex with a repeated vertex");
    return sign;
}

const char* kindName(FlatIntersectionResult::Kind k)
{
    switch (k) {
    case FlatIntersectionResult::Kind::Empty:
        return "empty";
    case FlatIntersectionResult::Kind::Interior:
        return "interior";
    case FlatIntersectionResult::Kind::Boundary:
        return "boundary";
    case FlatIntersectionResult::Kind::NonTransverse:
        return "non-transverse";
    }
    return "?";
}

std::string describeTuple(const std::vector<const Simplex*>& tuple)
{
    std::string out;
    for (const auto* s : tuple) {
        out += out.empty() ? "[" : " [";
        for (std::size_t i = 0; i < s->size(); ++i)
            out += (i ? "," : "") + std::to_string((*s)[i]);
        out += "]";
    }
    return out;
}

} // namespace

PLMap::PLMap(SimplicialComplex complex, int d, std::vector<RationalVector> coords)
    : complex_(std::move(complex)), d_(d), coords_(std::move(coords))
{
    if (d < 1)
        throw DimensionMismatch("ambient dimension must be positive");
    if (static_cast<int>(coords_.size()) != complex_.vertexCount())
        throw DimensionMismatch("one coordinate vector per vertex is required");
    for (const auto& c : coords_)
        if (static_cast<int>(c.size()) != d)
            throw DimensionMismatch("vertex coordinates have the wrong length");
}

SimplexImage PLMap::image(const Simplex& s) const
{
    SimplexImage out;
    out.reserve(s.size());
    for (auto v : s) {
        if (v < 0 || v >= complex_.vertexCount())
            throw InvalidInput("vertex index out of range");
        out.push_back(coords_[static_cast<std::size_t>(v)]);
    }
    return out;
}

void PLMap::certify(int r)
{
    GenericityCertificate cert;
    cert.r = r;
    if (auto failure = genericityFailure(*this, r, &cert))
        throw GenericityViolation("map is not in general position: " + *failure);
    if (certificate_)
        cert.attempts = certificate_->attempts;
    certificate_ = cert;
}

// ---------------------------------------------------------------------------

PreparedSimplex prepareSimplex(SimplexImage image)
{
    if (image.empty())
        throw InvalidInput("empty simplex image");
    PreparedSimplex p;
    p.normal = positiveNormalFrame(image);
    p.base = image[0];
    const std::size_t d = p.base.size();
    const std::size_t m = image.size() - 1;

    // coordinates = (T^T T)^{-1} T^T
    auto tangent = tangentFrame(image);
    RationalMatrix t = RationalMatrix::fromColumns(tangent, d);
    RationalMatrix tt = t.transposed();
    RationalMatrix gram = tt * t;
    p.coordinates = RationalMatrix(m, d);
    for (std::size_t c = 0; c < d; ++c) {
        RationalVector rhs(m);
        for (std::size_t i = 0; i < m; ++i)
            rhs[i] = tt(i, c);
        auto sol = solveLinear(gram, rhs);
        for (std::size_t i = 0; i < m; ++i)
            p.coordinates(i, c) = sol.particular[i];
    }

    p.lower = p.upper = image[0];
    for (const auto& v : image)
        for (std::size_t c = 0; c < d; ++c) {
            if (v[c] < p.lower[c])
                p.lower[c] = v[c];
            if (v[c] > p.upper[c])
                p.upper[c] = v[c];
        }
    p.image = std::move(image);
    return p;
}

AffineFlat hullOf(const PreparedSimplex& s)
{
    return AffineFlat{s.base, tangentFrame(s.image)};
}

std::optional<AffineFlat> restrictFlat(const AffineFlat& flat, const PreparedSimplex& s)
{
    const std::size_t c = s.normal.size();
    if (c == 0)
        return flat;
    const std::size_t n = flat.directions.size();
    RationalVector b(c);
    const RationalVector offset = s.base - flat.point;
    for (std::size_t i = 0; i < c; ++i)
        b[i] = dot(s.normal[i], offset);
    if (n == 0) {
        for (const auto& x : b)
            if (sgn(x) != 0)
                return std::nullopt;
        return flat;
    }
    RationalMatrix a(c, n);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = dot(s.normal[i], flat.directions[j]);
    auto sol = solveLinear(a, b);
    if (sol.kind == LinearSolution::Kind::Inconsistent)
        return std::nullopt;
    AffineFlat out;
    out.point = flat.point;
    for (std::size_t j = 0; j < n; ++j)
        if (sgn(sol.particular[j]) != 0)
            for (std::size_t x = 0; x < out.point.size(); ++x)
                out.point[x] += sol.particular[j] * flat.directions[j][x];
    for (const auto& kv : sol.kernel) {
        RationalVector dir(flat.point.size());
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(kv[j]) != 0)
                for (std::size_t x = 0; x < dir.size(); ++x)
                    dir[x] += kv[j] * flat.directions[j][x];
        out.directions.push_back(std::move(dir));
    }
    return out;
}

FlatIntersectionResult classifyFlat(const AffineFlat& flat, std::span<const PreparedSimplex* const> simplices)
{
    using Kind = FlatIntersectionResult::Kind;
    FlatIntersectionResult result;
    if (!flat.directions.empty()) {
        result.kind = Kind::NonTransverse;
        return result;
    }
    bool touches = false;
    FlatIntersection loc;
    loc.point = flat.point;
    for (const auto* s : simplices) {
        const RationalVector rel = flat.point - s->base;
        const std::size_t m = s->image.size() - 1;
        RationalVector lambda(m + 1);
        Rational tail = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Rational mu = 0;
            for (std::size_t c = 0; c < rel.size(); ++c)
                if (sgn(rel[c]) != 0)
                    mu += s->coordinates(i, c) * rel[c];
            if (sgn(mu) < 0)
                return result;
            touches = touches || sgn(mu) == 0;
            tail += mu;
            lambda[i + 1] = std::move(mu);
        }
        lambda[0] = 1 - tail;
        if (sgn(lambda[0]) < 0)
            return result;
        touches = touches || sgn(lambda[0]) == 0;
        loc.barycentric.push_back(std::move(lambda));
    }
    result.kind = touches ? Kind::Boundary : Kind::Interior;
    result.location = std::move(loc);
    return result;
}

FlatIntersectionResult intersectPrepared(std::span<const PreparedSimplex* const> simplices)
{
    if (simplices.empty())
        throw InvalidInput("no simplices to intersect");
    AffineFlat flat = hullOf(*simplices[0]);
    for (std::size_t i = 1; i < simplices.size(); ++i) {
        auto next = restrictFlat(flat, *simplices[i]);
        if (!next)
            return {};
        flat = std::move(*next);
    }
    return classifyFlat(flat, simplices);
}

int normalFrameSign(std::span<const PreparedSimplex* const> simplices)
{
    std::vector<RationalVector> columns;
    const std::size_t d = simplices.empty() ? 0 : simplices[0]->base.size();
    for (const auto* s : simplices)
        columns.insert(columns.end(), s->normal.begin(), s->normal.end());
    if (columns.size() != d)
        throw DimensionMismatch("codimensions do not add up to the ambient dimension");
    return signDet(RationalMatrix::fromColumns(columns, d));
}

bool boxesMeet(std::span<const PreparedSimplex* const> simplices)
{
    if (simplices.empty())
        return true;
    const std::size_t d = simplices[0]->base.size();
    for (std::size_t c = 0; c < d; ++c) {
        const Rational* lo = &simplices[0]->lower[c];
        const Rational* hi = &simplices[0]->upper[c];
        for (const auto* s : simplices) {
            if (s->lower[c] > *lo)
                lo = &s->lower[c];
            if (s->upper[c] < *hi)
                hi = &s->upper[c];
        }
        if (*lo > *hi)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::optional<std::string> genericityFailure(const PLMap& f, int r, GenericityCertificate* stats)
{
    if (r < 2)
        throw InvalidInput("r must be at least 2");
    const auto& k = f.complex();
    const int d = f.ambientDim();
    std::vector<const Simplex*> all;
    for (int q = 0; q <= k.dimension(); ++q)
        for (const auto& s : k.simplices(q))
            all.push_back(&s);
    const std::size_t n = all.size();

    std::vector<PreparedSimplex> prepared(n);
    std::vector<VertexMask> masks(n);
    std::vector<std::string> degenerate(n);
    parallelFor(n, [&](std::size_t i) {
        masks[i] = maskOf(*all[i], k.vertexCount());
        try {
            prepared[i] = prepareSimplex(f.image(*all[i]));
        } catch (const GenericityViolation&) {
            degenerate[i] = "degenerate image of" + describeTuple({all[i]});
        }
    });
    for (const auto& msg : degenerate)
        if (!msg.empty())
            return msg;

    struct Local {
        std::size_t checked = 0, transverse = 0;
        std::string failure;
    };
    std::vector<Local> locals(n);
    std::atomic<bool> failed{false};

    parallelFor(n, [&](std::size_t first) {
        Local& out = locals[first];
        std::vector<std::size_t> idx{first};
        std::vector<const PreparedSimplex*> chain{&prepared[first]};
        std::vector<AffineFlat> flats{hullOf(prepared[first])};

        auto recurse = [&](auto&& self, int codimSum) -> void {
            if (failed || !out.failure.empty())
                return;
            if (static_cast<int>(idx.size()) == r) {
                if (codimSum < d)
                    return;
                ++out.checked;
                auto result = classifyFlat(flats.back(), chain);
                using Kind = FlatIntersectionResult::Kind;
                const bool ok = codimSum == d ? (result.kind == Kind::Empty || result.kind == Kind::Interior)
                                              : result.kind == Kind::Empty;
                if (!ok) {
                    std::vector<const Simplex*> tuple;
                    for (auto i : idx)
                        tuple.push_back(all[i]);
                    out.failure = std::string(kindName(result.kind)) + " intersection of" + describeTuple(tuple);
                    failed = true;
                }
                if (result.kind == Kind::Interior)
                    ++out.transverse;
                return;
            }
            for (std::size_t j = idx.back() + 1; j < n; ++j) {
                bool ok = true;
                for (auto i : idx)
                    if (!disjoint(masks[i], masks[j])) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                chain.push_back(&prepared[j]);
                // an empty partial intersection passes for every extension
                if (boxesMeet(chain)) {
                    if (auto next = restrictFlat(flats.back(), prepared[j])) {
                        idx.push_back(j);
                        flats.push_back(std::move(*next));
                        self(self, codimSum + prepared[j].codimension());
                        flats.pop_back();
                        idx.pop_back();
                    }
                }
                chain.pop_back();
            }
        };
        recurse(recurse, prepared[first].codimension());
    });

    GenericityCertificate cert;
    cert.r = r;
    for (const auto& l : locals) {
        if (!l.failure.empty())
            return l.failure;
        cert.tuplesChecked += l.checked;
        cert.transversePoints += l.transverse;
    }
    if (stats) {
        stats->tuplesChecked = cert.tuplesChecked;
        stats->transversePoints = cert.transversePoints;
        stats->r = r;
    }
    return std::nullopt;
}

PLMap randomGenericMap(const SimplicialComplex& k, int d, std::uint64_t seed, int r, int retries)
{
    if (d < 1)
        throw DimensionMismatch("ambient dimension must be positive");
    if (retries < 1)
        throw InvalidInput("retry budget must be positive");
    constexpr std::int64_t denominator = 4096;
    constexpr std::int64_t range = 4 * denominator;
    std::string lastFailure;
    for (int attempt = 0; attempt < retries; ++attempt) {
        Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(attempt)));
        std::set<std::int64_t> used;
        std::vector<RationalVector> coords;
        for (int v = 0; v < k.vertexCount(); ++v) {
            std::int64_t n;
            do
                n = rng.uniform(-range, range);
            while (!used.insert(n).second);
            Rational t(Integer(static_cast<long>(n)), Integer(static_cast<long>(denominator)));
            t.canonicalize();
            RationalVector point(static_cast<std::size_t>(d));
            Rational power = t;
            for (int c = 0; c < d; ++c) {
                point[static_cast<std::size_t>(c)] = power;
                power *= t;
            }
            coords.push_back(std::move(point));
        }
        PLMap f(k, d, std::move(coords));
        GenericityCertificate cert;
        if (auto failure = genericityFailure(f, r, &cert)) {
            lastFailure = *failure;
            continue;
        }
        cert.attempts = attempt + 1;
        f.certificate_ = cert;
        return f;
    }
    throw GenericityViolation("no generic map after " + std::to_string(retries) + " samples; last failure: " +
                              lastFailure);
}

int rIntersectionSign(std::span<const SimplexImage> images, const FlatIntersection& point)
{
    if (!reconstructs(point, images))
        throw InvalidInput("point does not lie on the given simplices");
    for (const auto& lambda : point.barycentric)
        for (const auto& x : lambda)
            if (sgn(x) <= 0)
                throw GenericityViolation("intersection point is not interior to every simplex");
    std::vector<PreparedSimplex> prepared;
    for (const auto& img : images)
        prepared.push_back(prepareSimplex(img));
    std::vector<const PreparedSimplex*> ptrs;
    for (const auto& p : prepared)
        ptrs.push_back(&p);
    return normalFrameSign(ptrs);
}

int rIntersectionSign(const PLMap& f, std::span<const Simplex> tuple, const FlatIntersection& point)
{
    std::vector<SimplexImage> images;
    for (const auto& s : tuple)
        images.push_back(f.image(s));
    return rIntersectionSign(images, point);
}

int intersectionNumber(const PLMap& f, std::span<const Simplex> tuple)
{
    if (!f.certificate() || f.certificate()->r != static_cast<int>(tuple.size()))
        throw GenericityViolation("intersection number needs a map certified for this tuple size");
    std::vector<VertexMask> masks;
    for (const auto& s : tuple) {
        sortingSign(s);
        Simplex sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (!f.complex().contains(sorted))
            throw InvalidInput("tuple simplex is not in the complex");
        masks.push_back(maskOf(s, f.complex().vertexCount()));
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (!disjoint(masks[i], masks[j]))
                throw InvalidInput("tuple simplices are not pairwise disjoint");
    int codim = 0;
    for (const auto& s : tuple)
        codim += f.ambientDim() - (static_cast<int>(s.size()) - 1);
    if (codim != f.ambientDim())
        throw DimensionMismatch("codimensions of the tuple do not add up to d");

    std::vector<PreparedSimplex> prepared;
    for (const auto& s : tuple)
        prepared.push_back(prepareSimplex(f.image(s)));
    std::vector<const PreparedSimplex*> ptrs;
    for (const auto& p : prepared)
        ptrs.push_back(&p);
    auto result = intersectPrepared(ptrs);
    switch (result.kind) {
    case FlatIntersectionResult::Kind::Empty:
        return 0;
    case FlatIntersectionResult::Kind::Interior:
        return normalFrameSign(ptrs);
    default:
        throw GenericityViolation("tuple meets in a degenerate way despite the certificate");
    }
}

std::vector<RFoldPoint> globalRFoldPoints(const PLMap& f, int r)
{
    if (!f.certificate() || f.certificate()->r != r)
        throw GenericityViolation("global r-fold points need a map certified for r-tuples");
    const int d = f.ambientDim();
    const int top = f.complex().dimension();
    if (d % r != 0 || top != (d / r) * (r - 1))
        throw DimensionMismatch("need dim K = k(r-1) and d = kr");
    const auto& simplices = f.complex().simplices(top);
    const std::size_t n = simplices.size();
    std::vector<PreparedSimplex> prepared(n);
    std::vector<VertexMask> masks(n);
    parallelFor(n, [&](std::size_t i) {
        prepared[i] = prepareSimplex(f.image(simplices[i]));
        masks[i] = maskOf(simplices[i], f.complex().vertexCount());
    });

    std::vector<std::vector<RFoldPoint>> found(n);
    parallelFor(n, [&](std::size_t first) {
        std::vector<std::size_t> idx{first};
        std::vector<const PreparedSimplex*> chain{&prepared[first]};
        std::vector<AffineFlat> flats{hullOf(prepared[first])};
        auto recurse = [&](auto&& self) -> void {
            if (static_cast<int>(idx.size()) == r) {
                auto result = classifyFlat(flats.back(), chain);
                if (result.kind == FlatIntersectionResult::Kind::Empty)
                    return;
                if (result.kind != FlatIntersectionResult::Kind::Interior)
                    throw GenericityViolation("degenerate r-fold point despite the certificate");
                found[first].push_back(RFoldPoint{idx, std::move(*result.location), normalFrameSign(chain)});
                return;
            }
            for (std::size_t j = idx.back() + 1; j < n; ++j) {
                bool ok = true;
                for (auto i : idx)
                    ok = ok && disjoint(masks[i], masks[j]);
                if (!ok)
                    continue;
                chain.push_back(&prepared[j]);
                if (boxesMeet(chain))
                    if (auto next = restrictFlat(flats.back(), prepared[j])) {
                        idx.push_back(j);
                        flats.push_back(std::move(*next));
                        self(self);
                        flats.pop_back();
                        idx.pop_back();
                    }
                chain.pop_back();
            }
        };
        recurse(recurse);
    });
    std::vector<RFoldPoint> out;
    for (auto& v : found)
        for (auto& p : v)
            out.push_back(std::move(p));
    return out;
}

std::vector<int> vanKampenParity(const SimplicialComplex& k, int d, int trials, std::uint64_t seed)
{
    if (trials < 0)
        throw InvalidInput("trial count must be non-negative");
    std::vector<int> parities;
    for (int t = 0; t < trials; ++t) {
        auto f = randomGenericMap(k, d, deriveSeed(seed, 1000003ULL + static_cast<std::uint64_t>(t)), 2);
        parities.push_back(static_cast<int>(globalRFoldPoints(f, 2).size() % 2));
    }
    return parities;
}

} // namespace vko
