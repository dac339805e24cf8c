#pragma once

#include <cstddef>

#include "lienorm/model.hpp"

namespace lienorm {

/*
 * Normalization drivers. All of them work internally in the Birkhoff frame
 * with the factorial-free Deprit convention dU/deps = U L_G; pq input and
 * output conversion happens at module boundaries.
 *
 * explicit_generator  - the resolvent-surrogate chain F_1 = Rz dH/deps,
 *                       F_n = -Rz L_V F_{n-1}, G = sum_n F_n[z^n], with the
 *                       eps^(N-1) / z^N caps enforced inside every product.
 * direct_transform    - triangle f_k^(n) = f_k^(n+1) + L_{G_{n-k}} f_{n+1}^(n+1)/(n+1)
 *                       seeded with f_k^(N) = sum_{j>=k} eps^j H_{j-k}.
 * henrard_inverse     - inverse transform via f~_n = -(1/n) sum L_{G_{n-k-1}} f~_k.
 * deprit_classical    - order-by-order comparator solving the homological
 *                       equation with S at each order, non-secular generator
 *                       (P G_n = 0), secular remainder kept in the result.
 * henrard_normalize   - order-by-order normalization through the inverse
 *                       transform with a non-secular inverse generator.
 */

// Peak-size bookkeeping for the benchmark harness.
struct NormStats {
    std::size_t max_terms = 0;
    void observe(const PolySeries& p) {
        if (p.term_count() > max_terms) max_terms = p.term_count();
    }
};

// dH/deps = sum_{k>=1} k eps^(k-1) H_k, truncated at eps_cap = N-1.
PolySeries dH_deps(const HamiltonianModel& H, int N);

GeneratorSeries explicit_generator(const HamiltonianModel& H, int N, NormStats* stats = nullptr);

// Normalized Hamiltonian to O(eps^(N+1)); needs generator parts G_0..G_{N-1}.
PolySeries direct_transform(const GeneratorSeries& G, const HamiltonianModel& H, int N,
                            NormStats* stats = nullptr);

// The same triangle applied to a function: U_G f. f may carry eps grading.
PolySeries direct_transform_fn(const GeneratorSeries& G, const PolySeries& f, int N);

// U^{-1}_G f0 to O(eps^(N+1)); f0 must be eps- and z-free.
PolySeries henrard_inverse(const GeneratorSeries& G, const PolySeries& f0, int N);

struct NormalizeResult {
    GeneratorSeries generator;
    PolySeries normalized;
};

NormalizeResult deprit_classical(const HamiltonianModel& H, int N, NormStats* stats = nullptr);

// Returns the inverse-transform generator G~ (with P_{H0} G~ = 0) and the
// normalized Hamiltonian U^{-1}_{G~} H.
NormalizeResult henrard_normalize(const HamiltonianModel& H, int N, NormStats* stats = nullptr);

} // namespace lienorm
