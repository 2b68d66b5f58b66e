#pragma once

#include "plumb/inertia.hpp"
#include "plumb/matrix.hpp"
#include "plumb/polynomial.hpp"

namespace plumb {

// Fraction-free Bareiss determinant.
mpz_class determinant(const IntMatrix& m);
mpq_class determinant(const RatMatrix& m);

// Inertia of a symmetric rational form via congruence diagonalization:
// pivot on nonzero diagonal entries; when the remaining diagonal is all
// zero but some a_ij != 0, add row/column j into row/column i to expose
// a nonzero pivot.  Throws on non-square or non-symmetric input.
Inertia inertia(const RatMatrix& m);
Inertia inertia(const IntMatrix& m);

// Inertia of a hermitian form via the symmetric realification
// [[X, -Y], [Y, X]], whose eigenvalues double those of X + iY.
Inertia hermitian_inertia(const GaussMatrix& m);

// det(t*I - m), computed exactly by evaluation at dimension+1 integer
// points followed by Lagrange interpolation.
IntPoly char_poly(const IntMatrix& m);

// det(t*a - a^T) for a square integer matrix, same evaluation scheme.
// May be identically zero.
IntPoly alexander_poly(const IntMatrix& a);

}  // namespace plumb
