#include "plumb/coxeter.hpp"

#include <utility>

#include "plumb/error.hpp"
#include "plumb/linalg.hpp"
#include "plumb/roots.hpp"

namespace plumb {

namespace {

IntMatrix reflection_from_form(const IntMatrix& q, int i) {
    IntMatrix r = IntMatrix::identity(q.rows());
    for (int c = 0; c < q.cols(); ++c) r(i, c) += q(i, c);
    return r;
}

}  // namespace

IntMatrix reflection_matrix(const Forest& f, int i) {
    const IntMatrix q = coxeter_form(f).entries;
    if (i < 0 || i >= q.rows()) throw error("reflection index out of range");
    return reflection_from_form(q, i);
}

CoxeterMatrix coxeter_transformation(const Forest& f, const std::vector<int>& order) {
    const IntMatrix q = coxeter_form(f).entries;
    const int n = q.rows();
    if (static_cast<int>(order.size()) != n)
        throw error("order must be a permutation of all vertices");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw error("order must be a permutation of all vertices");
        seen[static_cast<size_t>(v)] = 1;
    }
    IntMatrix m = IntMatrix::identity(n);
    for (int v : order) m = m * reflection_from_form(q, v);
    return CoxeterMatrix{std::move(m), order};
}

std::vector<int> bicolored_order(const Forest& f) {
    std::vector<int> color;
    for (const Tree& t : f.components) {
        auto adj = adjacency(t);
        std::vector<int> c(static_cast<size_t>(t.vertex_count), -1);
        std::vector<int> queue = {0};
        c[0] = 0;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w : adj[static_cast<size_t>(u)])
                if (c[static_cast<size_t>(w)] < 0) {
                    c[static_cast<size_t>(w)] = 1 - c[static_cast<size_t>(u)];
                    queue.push_back(w);
                }
        }
        color.insert(color.end(), c.begin(), c.end());
    }
    std::vector<int> order;
    order.reserve(color.size());
    for (int pass = 0; pass < 2; ++pass)
        for (size_t v = 0; v < color.size(); ++v)
            if (color[v] == pass) order.push_back(static_cast<int>(v));
    return order;
}

SpectrumClassification classify_spectrum(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw error("spectrum classification needs a square matrix");
    const IntPoly chi = char_poly(m);
    SpectrumClassification out;
    out.circle_count = circle_root_count(chi);
    // An eigenvalue at 1 would be counted both on the circle and on the
    // positive real axis; attribute it to the circle.
    int at_one = 0;
    IntPoly p = chi;
    while (!p.is_zero() && p.eval(mpz_class(1)) == 0) {
        p = p.divide_linear(1);
        ++at_one;
    }
    out.positive_real_count = positive_real_root_count(chi) - at_one;
    out.other_count = m.rows() - out.circle_count - out.positive_real_count;
    return out;
}

SpectrumClassification classify_spectrum(const CoxeterMatrix& c) {
    return classify_spectrum(c.entries);
}

bool monodromy_correspondence_check(const Tree& t) {
    Forest f;
    f.components.push_back(t);
    const CoxeterMatrix c = coxeter_transformation(f, bicolored_order(f));
    const IntPoly chi_neg = char_poly(c.entries).substitute_neg_t();
    const IntPoly delta = alexander_poly(seifert_matrix(t).entries);
    return equal_up_to_sign_and_power(chi_neg, delta);
}

}  // namespace plumb
