#pragma once

#include "einf/cochains.hpp"

namespace einf::verify {

// Six-vertex RP², seven-vertex torus and the boundary of the tetrahedron.
SimplicialComplex rp2();
SimplicialComplex torus();
SimplicialComplex sphere2();

}  // namespace einf::verify
