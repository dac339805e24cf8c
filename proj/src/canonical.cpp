#include "lienorm/canonical.hpp"

#include <vector>

#include "lienorm/errors.hpp"

namespace lienorm {

PolySeries poisson(const PolySeries& f, const PolySeries& g) {
    if (f.kind() != g.kind()) throw UsageError("poisson: mixed variable frames");
    if (f.dim() != g.dim()) throw UsageError("poisson: dimension mismatch");
    const int d = f.dim();
    PolySeries acc(f.kind(), d, std::min(f.eps_cap(), g.eps_cap()),
                   std::min(f.z_cap(), g.z_cap()));
    for (int k = 0; k < d; ++k) {
        acc += f.derivative(k) * g.derivative(d + k);
        acc -= f.derivative(d + k) * g.derivative(k);
    }
    return acc;
}

PolySeries liouville_apply(const PolySeries& gen, const PolySeries& f) {
    return poisson(f, gen);
}

namespace {

// Substitution engine: each source variable maps to a fixed linear image in
// the target frame; per-variable powers are cached across terms.
PolySeries substitute(const PolySeries& f, VarKind target,
                      const std::vector<PolySeries>& images) {
    const int d = f.dim();
    std::vector<std::vector<PolySeries>> powers(2 * d);
    auto power = [&](int var, int e) -> const PolySeries& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(PolySeries::constant(target, d, ExtScalar(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };
    PolySeries out(target, d, f.eps_cap(), f.z_cap());
    for (const auto& [m, c] : f.terms()) {
        Monomial grading;
        grading.exps.assign(2 * d, 0);
        grading.eps_pow = m.eps_pow;
        grading.z_pow = m.z_pow;
        PolySeries prod(target, d, f.eps_cap(), f.z_cap());
        prod.add_term(grading, c);
        for (int v = 0; v < 2 * d; ++v)
            if (m.exps[v] != 0) prod = prod * power(v, m.exps[v]);
        out += prod;
    }
    return out;
}

} // namespace

PolySeries to_birkhoff(const PolySeries& f) {
    if (f.kind() != VarKind::pq) throw UsageError("to_birkhoff: input must be in the pq frame");
    const int d = f.dim();
    const mpq_class half = make_q(1, 2);
    std::vector<PolySeries> images;
    for (int k = 0; k < d; ++k) { // q_k = (zeta_k + i eta_k) * r2/2
        PolySeries img(VarKind::birkhoff, d);
        img += PolySeries::variable(VarKind::birkhoff, d, k).scaled(ExtScalar::sqrt2(half));
        img += PolySeries::variable(VarKind::birkhoff, d, d + k)
                   .scaled(ExtScalar::sqrt2(half).times_i());
        images.push_back(img);
    }
    for (int k = 0; k < d; ++k) { // p_k = (i zeta_k + eta_k) * r2/2
        PolySeries img(VarKind::birkhoff, d);
        img += PolySeries::variable(VarKind::birkhoff, d, k)
                   .scaled(ExtScalar::sqrt2(half).times_i());
        img += PolySeries::variable(VarKind::birkhoff, d, d + k).scaled(ExtScalar::sqrt2(half));
        images.push_back(img);
    }
    return substitute(f, VarKind::birkhoff, images);
}

PolySeries from_birkhoff(const PolySeries& f) {
    if (f.kind() != VarKind::birkhoff)
        throw UsageError("from_birkhoff: input must be in the Birkhoff frame");
    const int d = f.dim();
    const mpq_class half = make_q(1, 2);
    std::vector<PolySeries> images;
    for (int k = 0; k < d; ++k) { // zeta_k = (q_k - i p_k) * r2/2
        PolySeries img(VarKind::pq, d);
        img += PolySeries::variable(VarKind::pq, d, k).scaled(ExtScalar::sqrt2(half));
        img -= PolySeries::variable(VarKind::pq, d, d + k)
                   .scaled(ExtScalar::sqrt2(half).times_i());
        images.push_back(img);
    }
    for (int k = 0; k < d; ++k) { // eta_k = (p_k - i q_k) * r2/2
        PolySeries img(VarKind::pq, d);
        img += PolySeries::variable(VarKind::pq, d, d + k).scaled(ExtScalar::sqrt2(half));
        img -= PolySeries::variable(VarKind::pq, d, k).scaled(ExtScalar::sqrt2(half).times_i());
        images.push_back(img);
    }
    return substitute(f, VarKind::pq, images);
}

} // namespace lienorm
