#pragma once

#include <ostream>

namespace plumb {

// Inertia triple (n+, n-, n0) of a symmetric or hermitian form.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
    int dimension() const { return positive + negative + zero; }
    bool positive_definite() const { return negative == 0 && zero == 0; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Rendered as "n+ n- n0".
inline std::ostream& operator<<(std::ostream& os, const Inertia& i) {
    return os << i.positive << ' ' << i.negative << ' ' << i.zero;
}

}  // namespace plumb
