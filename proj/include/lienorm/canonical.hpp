#pragma once

#include "lienorm/poly.hpp"

namespace lienorm {

// Poisson bracket [f,g] = sum_k df/dq_k dg/dp_k - df/dp_k dg/dq_k, with the
// coordinate/momentum roles taken by (zeta_k, eta_k) in the Birkhoff frame.
PolySeries poisson(const PolySeries& f, const PolySeries& g);

// Liouvillian application L_G f = [f, G].
PolySeries liouville_apply(const PolySeries& gen, const PolySeries& f);

// Exact canonical substitution q_k = (zeta_k + i eta_k)/r2,
// p_k = (i zeta_k + eta_k)/r2, and its inverse. Grading exponents pass through.
PolySeries to_birkhoff(const PolySeries& f);
PolySeries from_birkhoff(const PolySeries& f);

} // namespace lienorm
