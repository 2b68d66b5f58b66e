#include "plumb/smith.hpp"

#include "plumb/error.hpp"

namespace plumb {

PolyMatrix alexander_pencil(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw error("alexander_pencil: not square");
  const int n = a.rows();
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = RatPoly({mpq_class(-a(j, i)), mpq_class(a(i, j))});
    }
  }
  return m;
}

namespace {

// Lowest-degree nonzero entry of the trailing block, row-major tie-break.
bool find_pivot(const PolyMatrix& m, int k, int& pi, int& pj) {
  int best = -1;
  for (int i = k; i < m.rows(); ++i) {
    for (int j = k; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (best < 0 || m(i, j).degree() < best) {
        best = m(i, j).degree();
        pi = i;
        pj = j;
      }
    }
  }
  return best >= 0;
}

}  // namespace

std::vector<RatPoly> smith_normal_form(PolyMatrix m) {
  if (m.rows() != m.cols()) throw error("smith_normal_form: not square");
  const int n = m.rows();
  std::vector<RatPoly> factors(static_cast<size_t>(n));

  for (int k = 0; k < n; ++k) {
    for (;;) {
      int pi = 0, pj = 0;
      if (!find_pivot(m, k, pi, pj)) {
        // Remaining block is zero; factors k..n-1 stay zero.
        for (int i = k; i < n; ++i) factors[static_cast<size_t>(i)] = RatPoly();
        return factors;
      }
      if (pi != k) {
        for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pi, c));
      }
      if (pj != k) {
        for (int r = 0; r < n; ++r) std::swap(m(r, k), m(r, pj));
      }

      bool reduced = false;
      for (int r = k + 1; r < n; ++r) {
        if (m(r, k).is_zero()) continue;
        RatPoly q = m(r, k).divmod(m(k, k)).quotient;
        for (int c = k; c < n; ++c) m(r, c) = m(r, c) - q * m(k, c);
        if (!m(r, k).is_zero()) reduced = true;  // smaller degree appeared
      }
      for (int c = k + 1; c < n; ++c) {
        if (m(k, c).is_zero()) continue;
        RatPoly q = m(k, c).divmod(m(k, k)).quotient;
        for (int r = k; r < n; ++r) m(r, c) = m(r, c) - q * m(r, k);
        if (!m(k, c).is_zero()) reduced = true;
      }
      if (reduced) continue;

      // Row k and column k are clear; force the pivot to divide the rest.
      bool repaired = false;
      for (int r = k + 1; r < n && !repaired; ++r) {
        for (int c = k + 1; c < n && !repaired; ++c) {
          if (!m(r, c).divisible_by(m(k, k))) {
            for (int cc = k; cc < n; ++cc) m(k, cc) = m(k, cc) + m(r, cc);
            repaired = true;
          }
        }
      }
      if (!repaired) break;
    }
    factors[static_cast<size_t>(k)] = m(k, k).monic();
  }

  for (int i = 0; i + 1 < n; ++i) {
    const RatPoly& cur = factors[static_cast<size_t>(i)];
    const RatPoly& next = factors[static_cast<size_t>(i + 1)];
    if (cur.is_zero() && !next.is_zero()) {
      throw internal_error("smith_normal_form: zero factor before nonzero");
    }
    if (!cur.is_zero() && !next.is_zero() && !next.divisible_by(cur)) {
      throw internal_error("smith_normal_form: divisibility chain broken");
    }
  }
  return factors;
}

int nullity_at_factor(const IntMatrix& a, const IntPoly& f) {
  if (f.degree() < 1) throw error("nullity_at_factor: constant factor");
  if (f.coeff(0) == 0) throw error("nullity_at_factor: factor vanishes at 0");
  RatPoly rf(f);
  int count = 0;
  for (const RatPoly& alpha : smith_normal_form(alexander_pencil(a))) {
    if (alpha.is_zero() || alpha.divisible_by(rf)) ++count;
  }
  return count;
}

}  // namespace plumb
