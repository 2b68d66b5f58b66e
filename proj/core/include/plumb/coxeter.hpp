#pragma once

#include <vector>

#include "plumb/forms.hpp"
#include "plumb/matrix.hpp"
#include "plumb/polynomial.hpp"
#include "plumb/tree.hpp"

namespace plumb {

// Reflection attached to vertex i of a forest: acts on column vectors by
// s_j -> s_j + q(s_i, s_j) s_i with q the forest's bilinear form, i.e. the
// identity with row i replaced by e_i + (row i of q).  An involution of
// determinant -1.
IntMatrix reflection_matrix(const Forest& f, int i);

struct CoxeterMatrix {
    IntMatrix entries;
    std::vector<int> order_used;

    int dimension() const { return entries.rows(); }
};

// Product of all reflections in the given order; the first entry of the
// order is the leftmost factor (applied last).  The characteristic
// polynomial does not depend on the order, the matrix itself does.
CoxeterMatrix coxeter_transformation(const Forest& f, const std::vector<int>& order);

// Proper 2-coloring (the smallest vertex of each component gets color 0),
// then all color-0 vertices in ascending order followed by all color-1
// vertices in ascending order.
std::vector<int> bicolored_order(const Forest& f);

// Where the eigenvalues sit: on the unit circle, on the positive real axis
// off the circle, or elsewhere.  An eigenvalue at 1 lies on both loci and
// is attributed to the circle, so the three counts partition the spectrum.
struct SpectrumClassification {
    int circle_count = 0;
    int positive_real_count = 0;
    int other_count = 0;
};

SpectrumClassification classify_spectrum(const IntMatrix& m);
SpectrumClassification classify_spectrum(const CoxeterMatrix& c);

// True iff the characteristic polynomial of the bicolored Coxeter
// transformation, with t replaced by -t, agrees with the Alexander
// polynomial of the same tree up to sign and a power of t.
bool monodromy_correspondence_check(const Tree& t);

}  // namespace plumb
