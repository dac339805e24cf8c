#include "lienorm/models.hpp"

#include "lienorm/errors.hpp"

namespace lienorm {

HamiltonianModel pendulum(int N) {
    if (N < 1) throw UsageError("pendulum: order must be >= 1");
    std::vector<PolySeries> terms;
    for (int k = 1; k <= N; ++k) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), 2 * (k + 1));
        mpq_class c(mpz_class(k % 2 == 0 ? 1 : -1), fact);
        c.canonicalize();
        terms.push_back(
            PolySeries::variable(VarKind::pq, 1, 0, 2 * (k + 1)).scaled(ExtScalar::rational(c)));
    }
    return HamiltonianModel::make("pendulum", 1, Frequencies({mpq_class(1)}), std::move(terms), N);
}

HamiltonianModel henon_heiles() {
    PolySeries h1 = PolySeries::parse("q1^2*q2 - 1/3*q2^3", VarKind::pq, 2);
    return HamiltonianModel::make("henon_heiles", 2, Frequencies({mpq_class(1), mpq_class(1)}),
                                  {h1}, 1);
}

namespace {

// exp(arg) as an exact truncated series; arg must carry positive eps grading
// in every term so the sum terminates at the cap.
PolySeries exp_series(const PolySeries& arg) {
    PolySeries sum = PolySeries::constant(arg.kind(), arg.dim(), ExtScalar(1), arg.eps_cap(),
                                          arg.z_cap());
    PolySeries pw = sum;
    mpz_class fact(1);
    for (int j = 1; !pw.is_zero(); ++j) {
        pw = pw * arg;
        fact *= j;
        mpq_class inv(mpz_class(1), fact);
        inv.canonicalize();
        sum += pw.scaled(inv);
    }
    return sum;
}

// cosh(b) with b^2 given exactly (avoids the irrational b itself).
PolySeries cosh_series_from_square(const PolySeries& b2) {
    PolySeries sum = PolySeries::constant(b2.kind(), b2.dim(), ExtScalar(1), b2.eps_cap(),
                                          b2.z_cap());
    PolySeries pw = sum;
    mpz_class fact(1);
    for (int m = 1; !pw.is_zero(); ++m) {
        pw = pw * b2;
        fact *= (2 * m - 1) * 2 * m;
        mpq_class inv(mpz_class(1), fact);
        inv.canonicalize();
        sum += pw.scaled(inv);
    }
    return sum;
}

} // namespace

HamiltonianModel toda2d(int N) {
    if (N < 1) throw UsageError("toda2d: order must be >= 1");
    const int d = 2;
    const int32_t cap = N + 2;
    auto var = [&](int v) { return PolySeries::variable(VarKind::pq, d, v, 1, cap); };
    const PolySeries q1 = var(0), q2 = var(1), p1 = var(2), p2 = var(3);

    // (e^{2Q2 + 2 sqrt3 Q1} + e^{2Q2 - 2 sqrt3 Q1} + e^{-4Q2}) / 24 - 1/8
    // with Q_j = eps q_j; the conjugate pair folds to 2 e^{2Q2} cosh(2 sqrt3 Q1),
    // whose square argument 12 Q1^2 is rational.
    PolySeries a = q2.scaled(mpq_class(2)).shifted_eps(1).with_caps(cap, PolySeries::kNoCap);
    PolySeries b2 = (q1 * q1).scaled(mpq_class(12)).shifted_eps(2).with_caps(cap, PolySeries::kNoCap);
    PolySeries c = q2.scaled(mpq_class(-4)).shifted_eps(1).with_caps(cap, PolySeries::kNoCap);

    PolySeries u = (exp_series(a) * cosh_series_from_square(b2)).scaled(mpq_class(2));
    u += exp_series(c);
    u = u.scaled(make_q(1, 24));
    u += PolySeries::constant(VarKind::pq, d, ExtScalar::rational(make_q(-1, 8)), cap);
    u += (p1 * p1 + p2 * p2).scaled(make_q(1, 2)).shifted_eps(2).with_caps(cap, PolySeries::kNoCap);

    if (!u.eps_coeff(0).is_zero() || !u.eps_coeff(1).is_zero())
        throw IntegrityError("toda2d: expansion must start at eps^2");
    PolySeries harmonic =
        PolySeries::parse("1/2*p1^2 + 1/2*p2^2 + 1/2*q1^2 + 1/2*q2^2", VarKind::pq, d);
    if (u.eps_coeff(2) != harmonic) throw IntegrityError("toda2d: quadratic part is not harmonic");

    std::vector<PolySeries> terms;
    for (int k = 1; k <= N; ++k) terms.push_back(u.eps_coeff(k + 2));
    return HamiltonianModel::make("toda2d", d, Frequencies({mpq_class(1), mpq_class(1)}),
                                  std::move(terms), N, 2);
}

} // namespace lienorm
