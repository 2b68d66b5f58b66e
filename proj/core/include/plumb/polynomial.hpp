#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "plumb/gaussian.hpp"

namespace plumb {

// Univariate polynomial with exact integer coefficients, stored lowest
// degree first and trimmed (no trailing zero coefficient).  The zero
// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(int k, const mpz_class& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& leading() const;
    mpz_class coeff(int k) const;  // 0 outside range
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    GaussianRational eval(const GaussianRational& x) const;
    int sign_at(const mpq_class& x) const;

    IntPoly derivative() const;
    mpz_class content() const;      // non-negative gcd of coefficients
    IntPoly primitive_part() const; // content stripped, leading coefficient > 0
    int valuation() const;          // multiplicity of the root t = 0 (degree+1 notion: 0 for nonzero constant)
    IntPoly shifted_down(int k) const;  // divide by t^k (requires valuation >= k)
    IntPoly substitute_neg_t() const;   // p(-t)
    bool is_palindromic() const;        // c_i == c_{d-i} for all i

    // Exact division by (t - r); throws internal_error if r is not a root.
    IntPoly divide_linear(const mpz_class& r) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const mpz_class& s) const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

// Equality up to multiplication by +-t^k (the unit-and-shift normalization
// used when comparing characteristic and Alexander polynomials).
bool equal_up_to_sign_and_power(const IntPoly& a, const IntPoly& b);

// Text form: space-separated coefficients, lowest degree first, one line.
IntPoly parse_poly(const std::string& line);
std::string format_poly(const IntPoly& p);

// Rational-coefficient polynomial, same storage conventions.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    explicit RatPoly(const IntPoly& p);
    static RatPoly constant(const mpq_class& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& leading() const;
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class eval(const mpq_class& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;  // throws internal_error on zero
    IntPoly primitive_int() const;  // clear denominators, strip content, leading > 0

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator*(const mpq_class& s) const;
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    struct DivMod;
    DivMod divmod(const RatPoly& d) const;
    bool divisible_by(const RatPoly& d) const;

    static RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic (or zero)

  private:
    void trim();
    std::vector<mpq_class> c_;
};

struct RatPoly::DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

}  // namespace plumb
