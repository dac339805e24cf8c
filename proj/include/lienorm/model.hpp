#pragma once

#include <string>
#include <vector>

#include "lienorm/operators.hpp"
#include "lienorm/poly.hpp"

namespace lienorm {

/*
 * Perturbed Hamiltonian H = H0 + sum_k eps^k H_k. The quadratic part H0 is
 * implicit in the frequency vector (i * sum omega_k zeta_k eta_k in the
 * Birkhoff frame); the perturbation terms are stored Birkhoff-converted,
 * free of eps and z — the engine applies the grading.
 */
struct HamiltonianModel {
    std::string name;
    int dim = 0;
    Frequencies omega;
    std::vector<PolySeries> terms; // terms[k-1] is H_k
    int order = 0;                 // truncation the model was built for
    int hori_power = 1;            // leading eps power of the Hori integral

    // Validates and converts pq terms to the Birkhoff frame.
    static HamiltonianModel make(std::string name, int dim, Frequencies omega,
                                 std::vector<PolySeries> terms_any_frame, int order,
                                 int hori_power = 1);

    int term_count() const { return static_cast<int>(terms.size()); }
    bool has_term(int k) const { return k >= 1 && k <= term_count() && !terms[k - 1].is_zero(); }
    const PolySeries& term(int k) const; // H_k, 1-based; throws on range

    PolySeries h0() const;
    // H_k or zero; k = 0 yields H0.
    PolySeries term_or_zero(int k) const;
    // H0 + sum eps^k H_k, truncated.
    PolySeries full_h(int32_t eps_cap) const;
    // V = sum_{k>=1} eps^k H_k, truncated.
    PolySeries perturbation(int32_t eps_cap) const;
};

// Deprit generator series G = sum eps^n G_n in the factorial-free
// convention; parts are Birkhoff polynomials free of eps and z.
struct GeneratorSeries {
    std::vector<PolySeries> parts;

    static GeneratorSeries zeros(int n, int dim);
    int size() const { return static_cast<int>(parts.size()); }
    PolySeries combined(int32_t eps_cap) const;
};

} // namespace lienorm
