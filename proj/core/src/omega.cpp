#include "plumb/omega.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "plumb/error.hpp"
#include "plumb/linalg.hpp"

namespace plumb {

GaussianRational CirclePoint::omega() const {
    if (minus_one) return GaussianRational(mpq_class(-1), mpq_class(0));
    const mpq_class den = 1 + u * u;
    return GaussianRational(mpq_class(1 - u * u) / den, mpq_class(2 * u) / den);
}

mpq_class CirclePoint::cos_doubled() const {
    if (minus_one) return -2;
    const mpq_class den = 1 + u * u;
    return mpq_class(2 * (1 - u * u)) / den;
}

int omega_signature(const SeifertMatrix& a, const CirclePoint& p) {
    const IntMatrix& m = a.entries;
    const int n = m.rows();
    const GaussianRational w = p.omega();
    const GaussianRational c = GaussianRational(mpq_class(1)) - w;
    const GaussianRational cbar = c.conj();
    GaussMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = c * GaussianRational(mpq_class(m(i, j))) +
                      cbar * GaussianRational(mpq_class(m(j, i)));
    const Inertia in = hermitian_inertia(h);
    return in.positive - in.negative;
}

namespace {

mpq_class x_of_u(const mpq_class& u) {
    return mpq_class(2 * (1 - u * u)) / mpq_class(1 + u * u);
}

// A u with x(u) strictly inside the open interval (ga, gb), -2 <= ga < gb <= 2.
// x(u) decreases from 2 toward -2 as u grows, so bisection on u converges
// onto the positive-length preimage of the gap.
mpq_class u_in_gap(const mpq_class& ga, const mpq_class& gb) {
    mpq_class lo = 0;  // x(lo) >= gb throughout
    mpq_class hi = 1;
    while (x_of_u(hi) >= gb) hi *= 2;  // x(hi) < gb throughout
    for (;;) {
        if (x_of_u(hi) > ga) return hi;
        mpq_class mid = (lo + hi) / 2;
        if (x_of_u(mid) >= gb)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
}

std::vector<CirclePoint> points_from_roots(const IntPoly& delta, const CircleRoots& roots) {
    // Root-free x-gaps between consecutive isolating intervals, walked in
    // increasing argument order (decreasing x).
    std::vector<std::pair<mpq_class, mpq_class>> gaps;
    mpq_class top = 2;
    for (const CircleInterval& iv : roots.interior) {
        gaps.emplace_back(iv.x_hi, top);
        top = iv.x_lo;
    }
    gaps.emplace_back(mpq_class(-2), top);

    std::vector<CirclePoint> out;
    out.reserve(gaps.size());
    for (const auto& [ga, gb] : gaps) {
        CirclePoint p = CirclePoint::from_u(u_in_gap(ga, gb));
        if (delta.eval(p.omega()).is_zero())
            throw internal_error("separating point landed on an Alexander root");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<CirclePoint> separating_points(const SeifertMatrix& a) {
    const IntPoly delta = alexander_poly(a.entries);
    if (delta.is_zero()) throw error("zero Alexander polynomial");
    return points_from_roots(delta, isolate_circle_roots(delta));
}

SignatureProfile signature_profile(const SeifertMatrix& a) {
    const IntPoly delta = alexander_poly(a.entries);
    if (delta.is_zero()) throw error("zero Alexander polynomial");

    SignatureProfile out;
    out.roots = isolate_circle_roots(delta);
    out.points = points_from_roots(delta, out.roots);
    out.plateau_values.reserve(out.points.size());
    for (const CirclePoint& p : out.points) out.plateau_values.push_back(omega_signature(a, p));
    out.jumps.reserve(out.roots.interior.size());
    for (size_t k = 0; k + 1 < out.plateau_values.size(); ++k) {
        const int d = out.plateau_values[k + 1] - out.plateau_values[k];
        if (d % 2 != 0) throw internal_error("odd plateau difference");
        out.jumps.push_back(d / 2);
    }
    out.sigma_at_minus_one = omega_signature(a, CirclePoint::at_minus_one());
    return out;
}

TheoremAReport verify_theorem_A(const SeifertMatrix& a) {
    TheoremAReport r;
    const IntPoly delta = alexander_poly(a.entries);
    if (delta.is_zero()) {
        r.vacuous = true;
        r.pass = true;
        return r;
    }
    const int s = omega_signature(a, CirclePoint::at_minus_one());
    r.signature_abs = s < 0 ? -s : s;
    r.circle_count = circle_root_count(delta);
    r.pass = r.signature_abs <= r.circle_count;
    return r;
}

PropDReport verify_prop_D(const SeifertMatrix& a) {
    const SignatureProfile prof = signature_profile(a);
    PropDReport r;
    r.pass = true;
    for (size_t k = 0; k < prof.jumps.size(); ++k) {
        JumpBound b;
        b.root_index = static_cast<int>(k);
        b.jump = prof.jumps[k];
        b.multiplicity = prof.roots.interior[k].multiplicity;
        b.ok = (b.jump < 0 ? -b.jump : b.jump) <= b.multiplicity;
        if (!b.ok) r.pass = false;
        r.bounds.push_back(b);
    }
    return r;
}

std::string format_profile(const SignatureProfile& p) {
    std::ostringstream os;
    for (size_t k = 0; k < p.roots.interior.size(); ++k) {
        const CircleInterval& iv = p.roots.interior[k];
        os << "root " << k << ": x in [" << iv.x_lo.get_str() << ", " << iv.x_hi.get_str()
           << "], multiplicity " << iv.multiplicity << "\n";
    }
    if (p.roots.mult_at_one > 0) os << "root at omega=1: multiplicity " << p.roots.mult_at_one << "\n";
    if (p.roots.mult_at_minus_one > 0)
        os << "root at omega=-1: multiplicity " << p.roots.mult_at_minus_one << "\n";
    os << "plateaus:";
    for (int v : p.plateau_values) os << " " << v;
    os << "\njumps:";
    for (int j : p.jumps) os << " " << j;
    os << "\nsigma(-1) = " << p.sigma_at_minus_one << "\n";
    return os.str();
}

std::string profile_to_json(const SignatureProfile& p) {
    nlohmann::ordered_json j;
    j["roots"] = nlohmann::ordered_json::array();
    for (const CircleInterval& iv : p.roots.interior)
        j["roots"].push_back({{"x_lo", iv.x_lo.get_str()},
                              {"x_hi", iv.x_hi.get_str()},
                              {"mult", iv.multiplicity}});
    j["plateaus"] = p.plateau_values;
    j["jumps"] = p.jumps;
    j["sigma_minus_one"] = p.sigma_at_minus_one;
    return j.dump(2);
}

}  // namespace plumb
