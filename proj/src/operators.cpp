#include "lienorm/operators.hpp"

#include "lienorm/errors.hpp"

namespace lienorm {

Frequencies::Frequencies(std::vector<mpq_class> w) : omega(std::move(w)) {
    bool nonzero = false;
    for (const auto& x : omega) nonzero = nonzero || sgn(x) != 0;
    if (omega.empty() || !nonzero)
        throw UsageError("Frequencies: need at least one nonzero entry");
}

mpq_class resonance_value(const Monomial& m, const Frequencies& omega) {
    const int d = omega.dim();
    if (static_cast<int>(m.exps.size()) != 2 * d)
        throw UsageError("resonance_value: dimension mismatch");
    mpq_class v(0);
    for (int k = 0; k < d; ++k) v += omega.omega[k] * (m.exps[k] - m.exps[d + k]);
    return v;
}

bool is_resonant(const Monomial& m, const Frequencies& omega) {
    return sgn(resonance_value(m, omega)) == 0;
}

static void check_birkhoff(const PolySeries& f, const Frequencies& omega, const char* who) {
    if (f.kind() != VarKind::birkhoff)
        throw UsageError(std::string(who) + ": input must be in the Birkhoff frame");
    if (f.dim() != omega.dim()) throw UsageError(std::string(who) + ": dimension mismatch");
}

PolySeries average(const PolySeries& f, const Frequencies& omega) {
    check_birkhoff(f, omega, "average");
    PolySeries out(f.kind(), f.dim(), f.eps_cap(), f.z_cap());
    for (const auto& [m, c] : f.terms())
        if (is_resonant(m, omega)) out.add_term(m, c);
    return out;
}

PolySeries integrate(const PolySeries& f, const Frequencies& omega, int n) {
    check_birkhoff(f, omega, "integrate");
    if (n < 1) throw UsageError("integrate: power must be positive");
    PolySeries out(f.kind(), f.dim(), f.eps_cap(), f.z_cap());
    for (const auto& [m, c] : f.terms()) {
        mpq_class lambda = resonance_value(m, omega);
        if (sgn(lambda) == 0) continue; // S^n annihilates the kernel
        // 1/(i*lambda)^n = (-i)^n / lambda^n
        ExtScalar factor = ExtScalar::rational(mpq_class(1) / q_pow(lambda, n));
        for (int j = 0; j < (n & 3); ++j) factor = -factor.times_i();
        out.add_term(m, c * factor);
    }
    return out;
}

PolySeries rz_apply(const PolySeries& f, const Frequencies& omega, int N) {
    check_birkhoff(f, omega, "rz_apply");
    if (N < 1) throw UsageError("rz_apply: order must be positive");
    PolySeries out(f.kind(), f.dim(), f.eps_cap(), N);
    for (const auto& [m, c] : f.terms()) {
        mpq_class lambda = resonance_value(m, omega);
        if (sgn(lambda) == 0) {
            out.add_term(m, -c);
            continue;
        }
        // geometric terms of the eigenvalue: (z/(i*lambda))^n, n = 1..N
        ExtScalar step = ExtScalar::rational(mpq_class(1) / lambda).times_i();
        step = -step; // 1/(i*lambda) = -i/lambda
        ExtScalar coeff = c;
        Monomial shifted = m;
        for (int n = 1; n <= N; ++n) {
            shifted.z_pow = m.z_pow + n;
            if (shifted.z_pow > N) break;
            coeff = coeff * step;
            out.add_term(shifted, coeff);
        }
    }
    return out;
}

} // namespace lienorm
