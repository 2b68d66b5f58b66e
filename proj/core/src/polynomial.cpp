#include "plumb/polynomial.hpp"

#include <sstream>

#include "plumb/error.hpp"

namespace plumb {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(int k, const mpz_class& c) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

GaussianRational IntPoly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + GaussianRational(mpq_class(*it));
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const { return sgn(eval(x)); }

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

int IntPoly::valuation() const {
    if (is_zero()) return 0;
    int v = 0;
    while (c_[v] == 0) ++v;
    return v;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (valuation() < k) throw internal_error("shifted_down would truncate nonzero coefficients");
    return IntPoly(std::vector<mpz_class>(c_.begin() + k, c_.end()));
}

IntPoly IntPoly::substitute_neg_t() const {
    std::vector<mpz_class> v = c_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

bool IntPoly::is_palindromic() const {
    const int d = degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (coeff(i) != coeff(d - i)) return false;
    return true;
}

IntPoly IntPoly::divide_linear(const mpz_class& r) const {
    // Synthetic division by (t - r).
    if (is_zero()) throw internal_error("divide_linear on zero polynomial");
    std::vector<mpz_class> q(c_.size() - 1);
    mpz_class carry = 0;
    for (int i = degree(); i >= 1; --i) {
        carry = carry * r + c_[i];
        q[i - 1] = carry;
    }
    if (carry * r + c_[0] != 0) throw internal_error("divide_linear: not a root");
    return IntPoly(std::move(q));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] -= b.c_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<mpz_class> v(a.c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return IntPoly(std::move(v));
}

bool equal_up_to_sign_and_power(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    IntPoly x = a.shifted_down(a.valuation());
    IntPoly y = b.shifted_down(b.valuation());
    return x == y || x == -y;
}

IntPoly parse_poly(const std::string& line) {
    std::istringstream in(line);
    std::vector<mpz_class> v;
    std::string tok;
    while (in >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw error("malformed polynomial coefficient '" + tok + "'");
        }
    }
    return IntPoly(std::move(v));
}

std::string format_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ' ';
        out += p.coeff(i).get_str();
    }
    return out;
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpq_class RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<mpq_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw internal_error("monic of zero polynomial");
    return *this * (1 / leading());
}

IntPoly RatPoly::primitive_int() const {
    if (is_zero()) return IntPoly();
    mpz_class l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpq_class s = c_[i] * mpq_class(l);
        v[i] = s.get_num();
    }
    return IntPoly(std::move(v)).primitive_part();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] -= b.c_[i];
    }
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> v(c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return RatPoly(std::move(v));
}

RatPoly::DivMod RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw internal_error("polynomial division by zero");
    std::vector<mpq_class> rem = c_;
    const int dd = d.degree();
    const mpq_class& lead = d.leading();
    if (static_cast<int>(rem.size()) - 1 < dd) return {RatPoly(), *this};
    std::vector<mpq_class> quot(rem.size() - dd);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpq_class f = rem[i] / lead;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

bool RatPoly::divisible_by(const RatPoly& d) const { return divmod(d).remainder.is_zero(); }

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).remainder;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

}  // namespace plumb
