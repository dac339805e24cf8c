#include "lienorm/model.hpp"

#include "lienorm/canonical.hpp"
#include "lienorm/errors.hpp"

namespace lienorm {

HamiltonianModel HamiltonianModel::make(std::string name, int dim, Frequencies omega,
                                        std::vector<PolySeries> terms_any_frame, int order,
                                        int hori_power) {
    if (dim < 1) throw UsageError("HamiltonianModel: dimension must be >= 1");
    if (omega.dim() != dim) throw UsageError("HamiltonianModel: omega length != dim");
    HamiltonianModel m;
    m.name = std::move(name);
    m.dim = dim;
    m.omega = std::move(omega);
    m.order = order;
    m.hori_power = hori_power;
    for (auto& t : terms_any_frame) {
        if (t.dim() != dim) throw UsageError("HamiltonianModel: term dimension mismatch");
        for (const auto& [mono, c] : t.terms()) {
            (void)c;
            if (mono.eps_pow != 0 || mono.z_pow != 0)
                throw UsageError("HamiltonianModel: perturbation terms must be eps- and z-free");
        }
        m.terms.push_back(t.kind() == VarKind::pq ? to_birkhoff(t) : t);
    }
    return m;
}

const PolySeries& HamiltonianModel::term(int k) const {
    if (k < 1 || k > term_count())
        throw UsageError("HamiltonianModel: no stored term H_" + std::to_string(k));
    return terms[k - 1];
}

PolySeries HamiltonianModel::h0() const {
    PolySeries h(VarKind::birkhoff, dim);
    for (int k = 0; k < dim; ++k) {
        Monomial m;
        m.exps.assign(2 * dim, 0);
        m.exps[k] = 1;
        m.exps[dim + k] = 1;
        h.add_term(m, ExtScalar::imaginary(omega.omega[k]));
    }
    return h;
}

PolySeries HamiltonianModel::term_or_zero(int k) const {
    if (k == 0) return h0();
    if (k >= 1 && k <= term_count()) return terms[k - 1];
    return PolySeries(VarKind::birkhoff, dim);
}

PolySeries HamiltonianModel::full_h(int32_t eps_cap) const {
    PolySeries h(VarKind::birkhoff, dim, eps_cap);
    h += h0();
    for (int k = 1; k <= term_count() && k <= eps_cap; ++k) h += terms[k - 1].shifted_eps(k);
    return h;
}

PolySeries HamiltonianModel::perturbation(int32_t eps_cap) const {
    PolySeries v(VarKind::birkhoff, dim, eps_cap);
    for (int k = 1; k <= term_count() && k <= eps_cap; ++k) v += terms[k - 1].shifted_eps(k);
    return v;
}

GeneratorSeries GeneratorSeries::zeros(int n, int dim) {
    GeneratorSeries g;
    g.parts.assign(n, PolySeries(VarKind::birkhoff, dim));
    return g;
}

PolySeries GeneratorSeries::combined(int32_t eps_cap) const {
    if (parts.empty()) throw UsageError("GeneratorSeries: empty");
    PolySeries out(VarKind::birkhoff, parts.front().dim(), eps_cap);
    for (int n = 0; n < size() && n <= eps_cap; ++n) out += parts[n].shifted_eps(n);
    return out;
}

} // namespace lienorm
