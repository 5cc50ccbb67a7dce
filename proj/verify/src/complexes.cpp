#include "einf/verify/complexes.hpp"

namespace einf::verify {

SimplicialComplex rp2() {
  return SimplicialComplex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex torus() {
  std::vector<Face> tri;
  for (int i = 0; i < 7; ++i) {
    tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex(tri);
}

SimplicialComplex sphere2() { return SimplicialComplex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace einf::verify
