#pragma once

#include <gmpxx.h>

#include <ostream>

namespace plumb {

// Exact complex rational a + b*i.  Only the ring operations needed for
// evaluating forms and polynomials on the unit circle are provided.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(const mpq_class& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.re.get_str() << (z.im >= 0 ? "+" : "") << z.im.get_str() << "i";
    }
};

}  // namespace plumb
