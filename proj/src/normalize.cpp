#include "lienorm/normalize.hpp"

#include "lienorm/canonical.hpp"
#include "lienorm/errors.hpp"

namespace lienorm {

namespace {

inline void observe(NormStats* stats, const PolySeries& p) {
    if (stats) stats->observe(p);
}

} // namespace

PolySeries dH_deps(const HamiltonianModel& H, int N) {
    if (N < 1) throw UsageError("dH_deps: order must be >= 1");
    PolySeries out(VarKind::birkhoff, H.dim, N - 1);
    for (int k = 1; k <= H.term_count() && k - 1 <= N - 1; ++k)
        out += H.terms[k - 1].scaled(mpq_class(k)).shifted_eps(k - 1);
    return out;
}

GeneratorSeries explicit_generator(const HamiltonianModel& H, int N, NormStats* stats) {
    if (N < 1) throw UsageError("explicit_generator: order must be >= 1");
    const int32_t ec = N - 1, zc = N;
    PolySeries dh = dH_deps(H, N).with_caps(ec, zc);
    PolySeries v = H.perturbation(ec).with_caps(ec, zc);
    PolySeries f = rz_apply(dh, H.omega, N);
    observe(stats, f);
    PolySeries gsum = f.z_coeff(1).with_caps(ec, 0);
    for (int n = 2; n <= N; ++n) {
        f = -rz_apply(poisson(f, v), H.omega, N);
        observe(stats, f);
        gsum += f.z_coeff(n).with_caps(ec, 0);
    }
    observe(stats, gsum);
    GeneratorSeries g;
    for (int j = 0; j < N; ++j) g.parts.push_back(gsum.eps_coeff(j));
    return g;
}

PolySeries direct_transform(const GeneratorSeries& G, const HamiltonianModel& H, int N,
                            NormStats* stats) {
    if (N < 1) throw UsageError("direct_transform: order must be >= 1");
    if (G.size() < N) throw UsageError("direct_transform: generator shorter than needed");
    std::vector<PolySeries> rows;
    rows.reserve(N + 1);
    for (int k = 0; k <= N; ++k) {
        PolySeries fk(VarKind::birkhoff, H.dim, N);
        for (int j = k; j <= N; ++j) fk += H.term_or_zero(j - k).shifted_eps(j).with_caps(N, 0);
        rows.push_back(fk);
    }
    for (int n = N - 1; n >= 0; --n) {
        const PolySeries top = rows[n + 1];
        const ExtScalar inv = ExtScalar::rational(1, n + 1);
        for (int k = 0; k <= n; ++k) {
            rows[k] += poisson(top, G.parts[n - k]).scaled(inv);
            observe(stats, rows[k]);
        }
    }
    return rows[0];
}

PolySeries direct_transform_fn(const GeneratorSeries& G, const PolySeries& f, int N) {
    if (N < 1) throw UsageError("direct_transform_fn: order must be >= 1");
    if (G.size() < N) throw UsageError("direct_transform_fn: generator shorter than needed");
    if (f.kind() != VarKind::birkhoff)
        throw UsageError("direct_transform_fn: input must be in the Birkhoff frame");
    std::vector<PolySeries> rows;
    rows.reserve(N + 1);
    for (int k = 0; k <= N; ++k) rows.push_back(f.shifted_eps(k).with_caps(N, f.z_cap()));
    for (int n = N - 1; n >= 0; --n) {
        const PolySeries top = rows[n + 1];
        const ExtScalar inv = ExtScalar::rational(1, n + 1);
        for (int k = 0; k <= n; ++k) rows[k] += poisson(top, G.parts[n - k]).scaled(inv);
    }
    return rows[0];
}

PolySeries henrard_inverse(const GeneratorSeries& G, const PolySeries& f0, int N) {
    if (N < 0) throw UsageError("henrard_inverse: order must be >= 0");
    if (G.size() < N) throw UsageError("henrard_inverse: generator shorter than needed");
    if (f0.kind() != VarKind::birkhoff)
        throw UsageError("henrard_inverse: input must be in the Birkhoff frame");
    for (const auto& [m, c] : f0.terms()) {
        (void)c;
        if (m.eps_pow != 0 || m.z_pow != 0)
            throw UsageError("henrard_inverse: seed must be eps- and z-free");
    }
    std::vector<PolySeries> ft;
    ft.reserve(N + 1);
    ft.push_back(f0);
    for (int n = 1; n <= N; ++n) {
        PolySeries acc(VarKind::birkhoff, f0.dim());
        for (int k = 0; k <= n - 1; ++k) acc += poisson(ft[k], G.parts[n - k - 1]);
        ft.push_back(acc.scaled(make_q(-1, n)));
    }
    PolySeries out(VarKind::birkhoff, f0.dim(), N);
    for (int n = 0; n <= N; ++n) out += ft[n].shifted_eps(n).with_caps(N, PolySeries::kNoCap);
    return out;
}

NormalizeResult deprit_classical(const HamiltonianModel& H, int N, NormStats* stats) {
    if (N < 1) throw UsageError("deprit_classical: order must be >= 1");
    const PolySeries h0 = H.h0();
    GeneratorSeries gen;
    std::vector<PolySeries> hblocks;
    hblocks.push_back(h0);
    // Per order n, the eps^n blocks g_k of the triangle entries f_k^(k):
    //   g_n = H0,  g_k = H_{n-k} + sum_{m=k}^{n-1} L_{G_{m-k}} g_{m+1} / (m+1),
    // the homological equation is solved on the k = 0 block.
    for (int n = 1; n <= N; ++n) {
        std::vector<PolySeries> g(n + 1, PolySeries(VarKind::birkhoff, H.dim));
        g[n] = h0;
        for (int k = n - 1; k >= 1; --k) {
            PolySeries acc = H.term_or_zero(n - k);
            for (int m = k; m <= n - 1; ++m)
                acc += poisson(g[m + 1], gen.parts[m - k]).scaled(ExtScalar::rational(1, m + 1));
            observe(stats, acc);
            g[k] = std::move(acc);
        }
        PolySeries r = H.term_or_zero(n);
        for (int m = 0; m <= n - 2; ++m)
            r += poisson(g[m + 1], gen.parts[m]).scaled(ExtScalar::rational(1, m + 1));
        observe(stats, r);
        gen.parts.push_back(integrate(r, H.omega, 1).scaled(mpq_class(n)));
        hblocks.push_back(average(r, H.omega));
    }
    PolySeries norm(VarKind::birkhoff, H.dim, N);
    for (int n = 0; n <= N; ++n) norm += hblocks[n].shifted_eps(n).with_caps(N, PolySeries::kNoCap);
    observe(stats, norm);
    return {std::move(gen), std::move(norm)};
}

NormalizeResult henrard_normalize(const HamiltonianModel& H, int N, NormStats* stats) {
    if (N < 1) throw UsageError("henrard_normalize: order must be >= 1");
    const PolySeries h0 = H.h0();
    GeneratorSeries gen; // inverse-transform generator G~
    std::vector<PolySeries> hblocks;
    hblocks.push_back(h0);
    // b[j][m] is the eps^m block of the j-th inverse-recursion function; the
    // eps^n coefficient of the result is sum_{j+m=n} b[j][m].
    std::vector<std::vector<PolySeries>> b(N + 1);
    for (int m = 0; m <= N; ++m) b[0].push_back(H.term_or_zero(m));
    for (int n = 1; n <= N; ++n) {
        for (int j = 1; j <= n; ++j) {
            const int m = n - j;
            PolySeries acc(VarKind::birkhoff, H.dim);
            // defer the unknown G~_{n-1} factor on the diagonal block
            for (int k = (j == n ? 1 : 0); k <= j - 1; ++k)
                acc += poisson(b[k][m], gen.parts[j - k - 1]);
            b[j].push_back(acc.scaled(make_q(-1, j)));
            observe(stats, b[j].back());
        }
        PolySeries r(VarKind::birkhoff, H.dim);
        for (int j = 0; j <= n; ++j) r += b[j][n - j];
        observe(stats, r);
        gen.parts.push_back(integrate(r, H.omega, 1).scaled(mpq_class(-n)));
        b[n][0] += poisson(b[0][0], gen.parts[n - 1]).scaled(make_q(-1, n));
        hblocks.push_back(average(r, H.omega));
    }
    PolySeries norm(VarKind::birkhoff, H.dim, N);
    for (int n = 0; n <= N; ++n) norm += hblocks[n].shifted_eps(n).with_caps(N, PolySeries::kNoCap);
    observe(stats, norm);
    return {std::move(gen), std::move(norm)};
}

} // namespace lienorm
