#include "vko/gallery.hpp"

#include "vko/error.hpp"

#include <regex>

namespace vko {

SimplicialComplex twoTriangles()
{
    return SimplicialComplex::fromMaximal(6, {{0, 1, 2}, {3, 4, 5}}, "two-triangles");
}

SimplicialComplex k33()
{
    std::vector<Simplex> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            edges.push_back({a, b});
    return SimplicialComplex::fromMaximal(6, std::move(edges), "k33");
}

GalleryObject galleryObject(const std::string& name)
{
    std::smatch m;
    auto num = [&](std::size_t i) {
        const std::string s = m[i].str();
        if (s.size() > 3)
            throw InvalidInput("gallery parameter too large: " + s);
        return std::stoi(s);
    };
    if (name == "fkt")
        return fktComplex();
    if (name == "cnld1")
        return cnld1Ornament();
    if (name == "two-triangles")
        return twoTriangles();
    if (name == "k33")
        return k33();
    if (std::regex_match(name, m, std::regex(R"(skeleton-(\d+)-(\d+))")))
        return skeleton(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(simplex-(\d+))"))) {
        auto k = skeleton(num(1), num(1));
        k.setName(name);
        return k;
    }
    if (std::regex_match(name, m, std::regex(R"(torus-(\d+)-(\d+))")))
        return torusGrid(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(product-ornament-(\d+)-(\d+))")))
        return productOrnament(num(1), num(2));
    if (std::regex_match(name, m, std::regex(R"(split-ornament-(\d+)-(\d+))")))
        return splitOrnament(num(1), num(2));
    throw InvalidInput("unknown gallery name: " + name);
}

std::vector<std::string> galleryNames()
{
    return {"skeleton-2-6", "simplex-2", "torus-3-3", "fkt", "two-triangles", "k33",
            "product-ornament-2-3", "split-ornament-2-3", "cnld1"};
}

} // namespace vko
