#pragma once

#include "lienorm/model.hpp"

namespace lienorm {

// One-dimensional pendulum after the sqrt-eps scale transform:
// H_k = (-1)^k / (2(k+1))! * q^(2(k+1)), omega = (1).
HamiltonianModel pendulum(int N);

// Henon-Heiles: omega = (1,1), H_1 = q1^2 q2 - q2^3/3.
HamiltonianModel henon_heiles();

// Two-dimensional Toda lattice expanded through eps^N; the first two orders
// coincide with the Henon-Heiles perturbation. omega = (1,1), Hori power 2.
HamiltonianModel toda2d(int N);

} // namespace lienorm
