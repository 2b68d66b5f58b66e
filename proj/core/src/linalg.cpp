#include "plumb/linalg.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "plumb/error.hpp"

namespace plumb {

namespace {

void require_square(int rows, int cols, const char* who) {
  if (rows != cols) {
    throw error(std::string(who) + ": matrix is " + std::to_string(rows) +
                "x" + std::to_string(cols) + ", expected square");
  }
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  const int n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          p = r;
          break;
        }
      }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : mpz_class(-a(n - 1, n - 1));
}

mpq_class determinant(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  const int n = m.rows();
  if (n == 0) return 1;

  RatMatrix a = m;
  mpq_class det = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (a(r, k) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != k) {
      for (int c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      mpq_class f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

Inertia inertia(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "inertia");
  if (!m.is_symmetric()) throw error("inertia: matrix not symmetric");
  const int n = m.rows();

  RatMatrix a = m;
  Inertia result;
  auto swap_rows_cols = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };

  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (a(r, r) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) {
      // Trailing diagonal is zero.  Any nonzero off-diagonal pair can be
      // folded onto the diagonal: adding row/col j into row/col i turns
      // a(i,i) into 2*a(i,j).
      int oi = -1, oj = -1;
      for (int i = k; i < n && oi < 0; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi < 0) {
        result.zero += n - k;
        return result;
      }
      for (int c = 0; c < n; ++c) a(oi, c) += a(oj, c);
      for (int r = 0; r < n; ++r) a(r, oi) += a(r, oj);
      p = oi;
    }
    swap_rows_cols(k, p);

    const mpq_class d = a(k, k);
    if (d > 0)
      ++result.positive;
    else
      ++result.negative;
    for (int r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      mpq_class f = a(r, k) / d;
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (int c = k; c < n; ++c) a(c, r) -= f * a(c, k);
    }
  }
  return result;
}

Inertia inertia(const IntMatrix& m) { return inertia(to_rational(m)); }

Inertia hermitian_inertia(const GaussMatrix& m) {
  require_square(m.rows(), m.cols(), "hermitian_inertia");
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(m(i, j) == m(j, i).conj())) {
        throw error("hermitian_inertia: matrix not hermitian");
      }
    }
  }

  RatMatrix real(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      real(i, j) = m(i, j).re;
      real(n + i, n + j) = m(i, j).re;
      real(i, n + j) = -m(i, j).im;
      real(n + i, j) = m(i, j).im;
    }
  }
  Inertia doubled = inertia(real);
  if (doubled.positive % 2 || doubled.negative % 2 || doubled.zero % 2) {
    throw internal_error("hermitian_inertia: realification gave odd counts");
  }
  return Inertia{doubled.positive / 2, doubled.negative / 2, doubled.zero / 2};
}

namespace {

// Exact interpolation through (0, v[0]), ..., (d, v[d]).  Coefficients must
// come out integral.
IntPoly interpolate_integer(const std::vector<mpz_class>& values) {
  const int d = static_cast<int>(values.size()) - 1;
  // master = prod_{j=0..d} (t - j)
  IntPoly master = IntPoly::constant(1);
  for (int j = 0; j <= d; ++j) {
    master = master * IntPoly({mpz_class(-j), mpz_class(1)});
  }

  std::vector<mpq_class> acc(static_cast<size_t>(d) + 1, mpq_class(0));
  for (int i = 0; i <= d; ++i) {
    if (values[static_cast<size_t>(i)] == 0) continue;
    IntPoly basis = master.divide_linear(mpz_class(i));
    mpz_class denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j != i) denom *= mpz_class(i - j);
    }
    mpq_class scale(values[static_cast<size_t>(i)], denom);
    scale.canonicalize();
    for (int k = 0; k <= basis.degree(); ++k) {
      acc[static_cast<size_t>(k)] += scale * basis.coeff(k);
    }
  }

  std::vector<mpz_class> out;
  out.reserve(acc.size());
  for (const mpq_class& c : acc) {
    if (c.get_den() != 1) {
      throw internal_error("interpolation produced non-integer coefficient");
    }
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "char_poly");
  const int n = m.rows();
  if (n == 0) return IntPoly::constant(1);

  std::vector<mpz_class> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    IntMatrix e = m;
    for (int i = 0; i < n; ++i) e(i, i) = mpz_class(t) - m(i, i);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) e(i, j) = -m(i, j);
      }
    }
    values.push_back(determinant(e));
  }
  IntPoly p = interpolate_integer(values);
  if (p.degree() != n || p.leading() != 1) {
    throw internal_error("char_poly: interpolation not monic of full degree");
  }
  return p;
}

IntPoly alexander_poly(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "alexander_poly");
  const int n = a.rows();
  if (n == 0) return IntPoly::constant(1);

  std::vector<mpz_class> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    IntMatrix e(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        e(i, j) = mpz_class(t) * a(i, j) - a(j, i);
      }
    }
    values.push_back(determinant(e));
  }
  return interpolate_integer(values);
}

IntMatrix parse_int_matrix(const std::string& text) {
  std::istringstream in(text);
  long n = -1;
  if (!(in >> n) || n < 0) {
    throw error("matrix parse: expected non-negative dimension on first line");
  }
  IntMatrix m(static_cast<int>(n), static_cast<int>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) {
        throw error("matrix parse: expected " + std::to_string(n * n) +
                    " entries, input ended early");
      }
      try {
        m(static_cast<int>(i), static_cast<int>(j)) = mpz_class(tok);
      } catch (const std::invalid_argument&) {
        throw error("matrix parse: bad integer '" + tok + "'");
      }
    }
  }
  std::string extra;
  if (in >> extra) {
    throw error("matrix parse: trailing content '" + extra + "'");
  }
  return m;
}

std::string format_int_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace plumb
