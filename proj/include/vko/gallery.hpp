#pragma once

#include "vko/linking.hpp"
#include "vko/simplicial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace vko {

using GalleryObject = std::variant<SimplicialComplex, Ornament>;

/// Named complexes and ornaments: skeleton-n-N, simplex-n, torus-a-b, fkt,
/// two-triangles, k33, product-ornament-k-r, split-ornament-k-r, cnld1.
/// Throws InvalidInput for an unknown name.
GalleryObject galleryObject(const std::string& name);

/// Example names, one per family.
std::vector<std::string> galleryNames();

/// Two disjoint triangles on vertices 0..5.
SimplicialComplex twoTriangles();
/// Complete bipartite graph K_{3,3}.
SimplicialComplex k33();

} // namespace vko
