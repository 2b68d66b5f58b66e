#pragma once

#include <vector>

#include "plumb/matrix.hpp"
#include "plumb/polynomial.hpp"

namespace plumb {

using PolyMatrix = Matrix<RatPoly>;

// The pencil t*a - a^T attached to a Seifert matrix.
PolyMatrix alexander_pencil(const IntMatrix& a);

// Invariant factors of a square polynomial matrix: monic, each dividing the
// next (zeros, if any, come last), product equal to det(m) up to a nonzero
// rational constant.  Deterministic: pivots are the lowest-degree nonzero
// entries, ties broken row-major.
std::vector<RatPoly> smith_normal_form(PolyMatrix m);

// Number of invariant factors of t*a - a^T divisible by f (zero factors are
// divisible by everything).  Callers must pass f irreducible with f(0) != 0;
// irreducibility is not re-checked here.
int nullity_at_factor(const IntMatrix& a, const IntPoly& f);

}  // namespace plumb
