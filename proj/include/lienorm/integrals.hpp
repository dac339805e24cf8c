#pragma once

#include <vector>

#include "lienorm/model.hpp"
#include "lienorm/normalize.hpp"

namespace lienorm {

// Integer basis of the resonance lattice (omega, D) = 0 together with the
// independent directions beta orthogonal to every D; all vectors primitive.
struct CenterBasis {
    std::vector<std::vector<mpz_class>> resonance_vectors;
    std::vector<std::vector<mpz_class>> betas;
};

CenterBasis center_generators(const Frequencies& omega, int dim);

// Center element I~ = sum_j beta_j zeta_j eta_j of the resonant algebra.
PolySeries center_element(const std::vector<mpz_class>& beta, int dim);

// Gustavson formal integral U^{-1}_G I~; the seed must be secular.
PolySeries gustavson_integral(const GeneratorSeries& G, const PolySeries& i_tilde, int N,
                              const Frequencies& omega);

// Hori formal first integral eps^{-s} (H - U^{-1}_G H0), truncated to
// O(eps^(N+1-s)). A difference not divisible by eps^s is an integrity error.
PolySeries hori_integral(const HamiltonianModel& H, const GeneratorSeries& G, int N, int s);

// Same, from a precomputed image of H0 under the inverse of the normalizing
// transform (used when that transform is not a direct Deprit transform).
PolySeries hori_from_image(const HamiltonianModel& H, const PolySeries& uinv_h0, int N, int s);

} // namespace lienorm
