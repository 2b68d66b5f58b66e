#pragma once

#include <vector>

#include "plumb/polynomial.hpp"

namespace plumb {

struct SquarefreeFactor {
  IntPoly factor;  // primitive, square-free, leading coefficient > 0
  int multiplicity = 0;
};

struct SquarefreeDecomposition {
  std::vector<SquarefreeFactor> factors;  // pairwise coprime, multiplicity ascending
};

// Yun's algorithm over the rationals; factors returned as primitive integer
// polynomials, constant parts discarded (the product reproduces the input up
// to a rational constant).  Throws on the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const IntPoly& p);

struct ReciprocalSplit {
  int t_power = 0;          // a
  int one_power = 0;        // b: multiplicity of the root t = 1
  int minus_one_power = 0;  // c: multiplicity of the root t = -1
  IntPoly reciprocal_part;  // q with p = t^a (t-1)^b (t+1)^c q, q palindromic
};

// Splits off t, t-1 and t+1 powers; errors if the remaining factor is not
// palindromic (such input is outside the scope of every count below).
ReciprocalSplit reciprocal_split(const IntPoly& p);

// Number of roots on the unit circle, with multiplicity.
int circle_root_count(const IntPoly& p);

// Number of roots in (0, inf), with multiplicity.
int positive_real_root_count(const IntPoly& p);

// --- exact real-root machinery (exposed for tests and the omega module) ---

// Sturm chain with content stripped at every step; signs chosen so the
// variation count V(a) - V(b) gives the number of distinct roots in (a, b)
// whenever neither endpoint is a root.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

int sign_variations_at(const std::vector<IntPoly>& chain, const mpq_class& x);

// Distinct roots of a square-free polynomial in the open interval (lo, hi);
// endpoints must not be roots.
int roots_in_interval(const std::vector<IntPoly>& chain, const mpq_class& lo,
                      const mpq_class& hi);
int roots_in_interval(const IntPoly& squarefree, const mpq_class& lo,
                      const mpq_class& hi);

// Exact bound, every real root of p lies in (-bound, bound).
mpq_class cauchy_bound(const IntPoly& p);

// For palindromic p of even degree 2m, the unique r with p(t) = t^m r(t+1/t),
// built from the basis V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}
// (so V_k(t + 1/t) = t^k + t^-k).  Integer coefficients, degree m.
IntPoly chebyshev_x_transform(const IntPoly& palindromic);

struct CircleInterval {
  mpq_class x_lo, x_hi;  // endpoints strictly inside (-2, 2) and not roots
  int multiplicity = 0;  // of the conjugate root pair in the input
  IntPoly factor;        // square-free factor owning the pair
};

struct CircleRoots {
  // Conjugate pairs e^{±iθ}, 0 < θ < π, isolated by their x = 2cosθ value.
  // Closed intervals pairwise separated by nonempty root-free gaps, sorted
  // by descending x (ascending θ).
  std::vector<CircleInterval> interior;
  int mult_at_one = 0;        // root t = 1
  int mult_at_minus_one = 0;  // root t = -1
};

CircleRoots isolate_circle_roots(const IntPoly& p);

}  // namespace plumb
