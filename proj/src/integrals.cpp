#include "lienorm/integrals.hpp"

#include <algorithm>

#include "lienorm/errors.hpp"

namespace lienorm {

namespace {

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

} // namespace

CenterBasis center_generators(const Frequencies& omega, int dim) {
    if (omega.dim() != dim) throw UsageError("center_generators: dimension mismatch");
    bool all_zero = true;
    for (const auto& w : omega.omega) all_zero = all_zero && sgn(w) == 0;
    if (all_zero) throw UsageError("center_generators: zero frequency vector");

    // clear denominators to a primitive integer vector
    mpz_class lcm(1);
    for (const auto& w : omega.omega)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());
    std::vector<mpz_class> w(dim);
    for (int j = 0; j < dim; ++j) w[j] = omega.omega[j].get_num() * (lcm / omega.omega[j].get_den());
    make_primitive(w);

    CenterBasis basis;
    int pivot = 0;
    while (sgn(w[pivot]) == 0) ++pivot;
    for (int j = 0; j < dim; ++j) {
        if (j == pivot) continue;
        // w_pivot e_j - w_j e_pivot annihilates (w, .)
        std::vector<mpz_class> v(dim, mpz_class(0));
        v[j] = w[pivot];
        v[pivot] = -w[j];
        make_primitive(v);
        basis.resonance_vectors.push_back(std::move(v));
    }
    std::sort(basis.resonance_vectors.begin(), basis.resonance_vectors.end());
    // the orthogonal complement of the resonance lattice is spanned by w itself
    basis.betas.push_back(w);
    return basis;
}

PolySeries center_element(const std::vector<mpz_class>& beta, int dim) {
    if (static_cast<int>(beta.size()) != dim)
        throw UsageError("center_element: dimension mismatch");
    PolySeries out(VarKind::birkhoff, dim);
    for (int j = 0; j < dim; ++j) {
        Monomial m;
        m.exps.assign(2 * dim, 0);
        m.exps[j] = 1;
        m.exps[dim + j] = 1;
        out.add_term(m, ExtScalar::rational(mpq_class(beta[j])));
    }
    return out;
}

PolySeries gustavson_integral(const GeneratorSeries& G, const PolySeries& i_tilde, int N,
                              const Frequencies& omega) {
    if (average(i_tilde, omega) != i_tilde)
        throw UsageError("gustavson_integral: seed must be secular");
    return henrard_inverse(G, i_tilde, N);
}

PolySeries hori_from_image(const HamiltonianModel& H, const PolySeries& uinv_h0, int N, int s) {
    if (s < 1) throw UsageError("hori integral: leading power must be >= 1");
    if (s > N) throw UsageError("hori integral: leading power exceeds the order");
    PolySeries diff = H.full_h(N) - uinv_h0;
    for (int j = 0; j < s; ++j)
        if (!diff.eps_coeff(j).is_zero())
            throw IntegrityError("hori integral: difference is not divisible by eps^" +
                                 std::to_string(s));
    PolySeries out(VarKind::birkhoff, H.dim, N - s);
    for (int j = s; j <= N; ++j)
        out += diff.eps_coeff(j).shifted_eps(j - s).with_caps(N - s, PolySeries::kNoCap);
    return out;
}

PolySeries hori_integral(const HamiltonianModel& H, const GeneratorSeries& G, int N, int s) {
    return hori_from_image(H, henrard_inverse(G, H.h0(), N), N, s);
}

} // namespace lienorm
