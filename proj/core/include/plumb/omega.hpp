#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "plumb/forms.hpp"
#include "plumb/gaussian.hpp"
#include "plumb/roots.hpp"

namespace plumb {

// Point on the unit circle.  omega(u) = ((1-u^2) + 2u*i)/(1+u^2) sweeps the
// upper semicircle as u runs through [0, inf), with omega(0) = 1; the point
// -1 itself is unreachable by finite u and is carried as a separate flag.
struct CirclePoint {
    mpq_class u;
    bool minus_one = false;

    static CirclePoint from_u(const mpq_class& u) { return {u, false}; }
    static CirclePoint at_minus_one() { return {mpq_class(0), true}; }

    GaussianRational omega() const;  // exact value, |omega| = 1
    mpq_class cos_doubled() const;   // x = omega + conj(omega)
};

// Signature of the hermitian form (1-omega)A + (1-conj(omega))A^T.  At
// omega = -1 this is 2(A + A^T); at omega = 1 the form degenerates to zero
// and the signature is 0.
int omega_signature(const SeifertMatrix& a, const CirclePoint& p);

// One point strictly inside each maximal root-free open arc of the upper
// semicircle, in increasing argument order; there are (number of distinct
// circle roots of the Alexander polynomial with argument in (0,pi)) + 1 of
// them.  Every point is certified by exact nonvanishing of Delta(omega(u)).
std::vector<CirclePoint> separating_points(const SeifertMatrix& a);

struct SignatureProfile {
    CircleRoots roots;                // isolated circle roots of Delta
    std::vector<CirclePoint> points;  // separating points, argument ascending
    std::vector<int> plateau_values;  // sigma on each root-free arc
    std::vector<int> jumps;           // half the consecutive plateau differences
    int sigma_at_minus_one = 0;
};

// The full signature function on the upper semicircle: plateau values
// between consecutive Alexander roots and the jump across each root.  The
// lower semicircle is determined by conjugation symmetry.
SignatureProfile signature_profile(const SeifertMatrix& a);

struct TheoremAReport {
    bool vacuous = false;  // Delta identically zero
    int signature_abs = 0;
    int circle_count = 0;
    bool pass = false;
};

// |signature| <= number of unit-circle roots of the Alexander polynomial,
// counted with multiplicity.
TheoremAReport verify_theorem_A(const SeifertMatrix& a);

struct JumpBound {
    int root_index = 0;
    int jump = 0;
    int multiplicity = 0;
    bool ok = false;
};

struct PropDReport {
    std::vector<JumpBound> bounds;
    bool pass = false;
};

// Each signature jump is bounded by the order of the Alexander root it
// crosses.
PropDReport verify_prop_D(const SeifertMatrix& a);

std::string format_profile(const SignatureProfile& p);
std::string profile_to_json(const SignatureProfile& p);

}  // namespace plumb
