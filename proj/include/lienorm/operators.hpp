#pragma once

#include <vector>

#include "lienorm/poly.hpp"

namespace lienorm {

// Unperturbed frequency vector; exact rationals so resonance is decidable.
struct Frequencies {
    std::vector<mpq_class> omega;

    Frequencies() = default;
    explicit Frequencies(std::vector<mpq_class> w);
    int dim() const { return static_cast<int>(omega.size()); }
};

// (omega, m - n) for a Birkhoff monomial zeta^m eta^n.
mpq_class resonance_value(const Monomial& m, const Frequencies& omega);
bool is_resonant(const Monomial& m, const Frequencies& omega);

// Projector onto the resonant (secular) terms.
PolySeries average(const PolySeries& f, const Frequencies& omega);

// n-th power of the integrating operator: divides each non-resonant term by
// (i(omega, m - n))^n and annihilates resonant terms.
PolySeries integrate(const PolySeries& f, const Frequencies& omega, int n);

// Truncated resolvent surrogate: a resonant monomial maps to -1 times itself,
// a non-resonant one to sum_{n=1..N} (z/(i(omega,m-n)))^n times itself.
// Acts linearly over existing z grading; result has z_cap = N.
PolySeries rz_apply(const PolySeries& f, const Frequencies& omega, int N);

} // namespace lienorm
