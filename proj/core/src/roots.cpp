#include "plumb/roots.hpp"

#include <algorithm>
#include <utility>

#include "plumb/error.hpp"

namespace plumb {

namespace {

IntPoly strip_content(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (c == 1) return p;
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const mpz_class& x : p.coeffs()) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    out.push_back(q);
  }
  return IntPoly(std::move(out));
}

// Remainder of f by g up to a positive constant factor.
IntPoly signed_pseudo_rem(IntPoly f, const IntPoly& g) {
  const int d = g.degree();
  const mpz_class& lc = g.leading();
  int steps = 0;
  while (!f.is_zero() && f.degree() >= d) {
    int k = f.degree() - d;
    mpz_class cf = f.leading();
    f = f * lc - g * IntPoly::monomial(k, cf);
    ++steps;
  }
  if (lc < 0 && steps % 2 == 1) f = -f;
  return f;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw error("sturm_chain: zero polynomial");
  std::vector<IntPoly> chain;
  chain.push_back(strip_content(p));
  if (p.degree() == 0) return chain;
  chain.push_back(strip_content(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly r = signed_pseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(strip_content(-r));
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const mpq_class& x) {
  int variations = 0;
  int prev = 0;
  for (const IntPoly& s : chain) {
    if (s.is_zero()) continue;
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

int roots_in_interval(const std::vector<IntPoly>& chain, const mpq_class& lo,
                      const mpq_class& hi) {
  if (chain.empty()) throw internal_error("roots_in_interval: empty chain");
  if (chain.front().sign_at(lo) == 0 || chain.front().sign_at(hi) == 0) {
    throw internal_error("roots_in_interval: endpoint is a root");
  }
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int roots_in_interval(const IntPoly& squarefree, const mpq_class& lo,
                      const mpq_class& hi) {
  return roots_in_interval(sturm_chain(squarefree), lo, hi);
}

mpq_class cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw error("cauchy_bound: zero polynomial");
  mpq_class best = 0;
  const mpz_class& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class q(abs(p.coeff(i)), abs(lead));
    q.canonicalize();
    if (q > best) best = q;
  }
  return best + 1;
}

SquarefreeDecomposition squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw error("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition result;
  if (p.degree() == 0) return result;

  RatPoly f(p);
  RatPoly g = RatPoly::gcd(f, f.derivative());
  RatPoly w = f.divmod(g).quotient;
  RatPoly y = f.derivative().divmod(g).quotient;
  RatPoly z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    RatPoly gi = RatPoly::gcd(w, z);
    if (gi.degree() > 0) {
      result.factors.push_back({gi.primitive_int(), mult});
    }
    w = w.divmod(gi).quotient;
    y = z.divmod(gi).quotient;
    z = y - w.derivative();
    ++mult;
  }
  return result;
}

ReciprocalSplit reciprocal_split(const IntPoly& p) {
  if (p.is_zero()) throw error("reciprocal_split: zero polynomial");
  ReciprocalSplit split;
  split.t_power = p.valuation();
  IntPoly q = p.shifted_down(split.t_power);
  while (q.eval(mpz_class(1)) == 0) {
    q = q.divide_linear(1);
    ++split.one_power;
  }
  while (q.eval(mpz_class(-1)) == 0) {
    q = q.divide_linear(-1);
    ++split.minus_one_power;
  }
  if (!q.is_palindromic()) {
    throw error("reciprocal_split: residual factor " + format_poly(q) +
                " is not reciprocal");
  }
  split.reciprocal_part = std::move(q);
  return split;
}

IntPoly chebyshev_x_transform(const IntPoly& palindromic) {
  const int d = palindromic.degree();
  if (d < 0 || d % 2 != 0 || !palindromic.is_palindromic()) {
    throw internal_error("chebyshev_x_transform: need palindromic even degree");
  }
  const int m = d / 2;
  IntPoly r = IntPoly::constant(palindromic.coeff(m));
  IntPoly v_prev = IntPoly::constant(2);   // V_0
  IntPoly v_cur = IntPoly::monomial(1);    // V_1
  const IntPoly x = IntPoly::monomial(1);
  for (int k = 1; k <= m; ++k) {
    r = r + v_cur * palindromic.coeff(m + k);
    IntPoly v_next = x * v_cur - v_prev;
    v_prev = std::move(v_cur);
    v_cur = std::move(v_next);
  }
  if (r.degree() != m) {
    throw internal_error("chebyshev_x_transform: degree drop");
  }
  return r;
}

int circle_root_count(const IntPoly& p) {
  ReciprocalSplit split = reciprocal_split(p);
  int count = split.one_power + split.minus_one_power;
  for (const auto& [factor, mult] :
       squarefree_decomposition(split.reciprocal_part).factors) {
    IntPoly r = chebyshev_x_transform(factor);
    count += mult * 2 * roots_in_interval(r, mpq_class(-2), mpq_class(2));
  }
  return count;
}

int positive_real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw error("positive_real_root_count: zero polynomial");
  IntPoly q = p.shifted_down(p.valuation());
  int count = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(q).factors) {
    count += mult * roots_in_interval(factor, mpq_class(0), cauchy_bound(factor));
  }
  return count;
}

namespace {

struct Isolation {
  mpq_class lo, hi;
  int root_count = 0;
};

// A point in (lo, hi) that is not a root of r; exists because r has at most
// deg(r) roots and we try deg(r)+1 distinct points.
mpq_class non_root_point(const IntPoly& r, const mpq_class& lo,
                         const mpq_class& hi) {
  const int tries = r.degree() + 2;
  for (int k = 1; k < tries; ++k) {
    mpq_class mid = lo + (hi - lo) * mpq_class(k, tries);
    mid.canonicalize();
    if (r.sign_at(mid) != 0) return mid;
  }
  throw internal_error("non_root_point: no candidate found");
}

// Shrink a one-root interval by one bisection step.
void shrink(const IntPoly& r, const std::vector<IntPoly>& chain,
            Isolation& iso) {
  mpq_class mid = non_root_point(r, iso.lo, iso.hi);
  if (roots_in_interval(chain, iso.lo, mid) == 1) {
    iso.hi = mid;
  } else {
    iso.lo = mid;
  }
}

}  // namespace

CircleRoots isolate_circle_roots(const IntPoly& p) {
  ReciprocalSplit split = reciprocal_split(p);
  CircleRoots roots;
  roots.mult_at_one = split.one_power;
  roots.mult_at_minus_one = split.minus_one_power;

  struct FactorData {
    IntPoly r;
    std::vector<IntPoly> chain;
  };
  std::vector<FactorData> data;
  std::vector<Isolation> isolated;
  std::vector<size_t> owner;  // isolated index -> data index

  for (const auto& [factor, mult] :
       squarefree_decomposition(split.reciprocal_part).factors) {
    FactorData fd{chebyshev_x_transform(factor), {}};
    fd.chain = sturm_chain(fd.r);
    int total = roots_in_interval(fd.chain, mpq_class(-2), mpq_class(2));
    if (total == 0) continue;
    data.push_back(std::move(fd));
    const FactorData& cur = data.back();

    std::vector<Isolation> work{{mpq_class(-2), mpq_class(2), total}};
    while (!work.empty()) {
      Isolation item = work.back();
      work.pop_back();
      if (item.root_count == 1) {
        isolated.push_back(item);
        owner.push_back(data.size() - 1);
        roots.interior.push_back({item.lo, item.hi, mult, factor});
        continue;
      }
      mpq_class mid = non_root_point(cur.r, item.lo, item.hi);
      int left = roots_in_interval(cur.chain, item.lo, mid);
      if (left > 0) work.push_back({item.lo, mid, left});
      if (left < item.root_count) {
        work.push_back({mid, item.hi, item.root_count - left});
      }
    }
  }

  // Refine until the closed intervals are pairwise separated by nonempty
  // gaps (roots are distinct, so this terminates) and pulled strictly inside
  // (-2, 2); the omega-signature profile places its sample points in those
  // gaps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < isolated.size(); ++i) {
      Isolation& iso = isolated[i];
      while (iso.lo == -2 || iso.hi == 2) {
        shrink(data[owner[i]].r, data[owner[i]].chain, iso);
        changed = true;
      }
      for (size_t j = i + 1; j < isolated.size(); ++j) {
        if (isolated[i].hi < isolated[j].lo ||
            isolated[j].hi < isolated[i].lo) {
          continue;
        }
        shrink(data[owner[i]].r, data[owner[i]].chain, isolated[i]);
        shrink(data[owner[j]].r, data[owner[j]].chain, isolated[j]);
        changed = true;
      }
    }
  }
  for (size_t i = 0; i < isolated.size(); ++i) {
    roots.interior[i].x_lo = isolated[i].lo;
    roots.interior[i].x_hi = isolated[i].hi;
  }

  std::sort(roots.interior.begin(), roots.interior.end(),
            [](const CircleInterval& a, const CircleInterval& b) {
              return a.x_lo > b.x_lo;
            });
  return roots;
}

}  // namespace plumb
