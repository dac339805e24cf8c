#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lienorm/canonical.hpp"
#include "lienorm/errors.hpp"
#include "lienorm/kato.hpp"
#include "lienorm/models.hpp"
#include "lienorm/normalize.hpp"
#include "test_util.hpp"

using namespace lienorm;
using testutil::Rng;

namespace {

PolySeries bk(const char* s, int dim = 1) { return PolySeries::parse(s, VarKind::birkhoff, dim); }

std::multiset<std::string> word_set(KatoKind kind, int n) {
    std::multiset<std::string> out;
    for (const auto& w : kato_words(kind, n)) out.insert(w.str());
    return out;
}

// L_H f = [f, H0 + sum eps^k H_k], truncated.
PolySeries lie_full(const HamiltonianModel& H, const PolySeries& f, int N) {
    return poisson(f.with_caps(N, f.z_cap()), H.full_h(N));
}

PolySeries rnd_bk(Rng& rng, int dim) {
    return testutil::rnd_poly(rng, VarKind::birkhoff, dim, 3, 5);
}

} // namespace

TEST_CASE("word lists at low order") {
    CHECK(word_set(KatoKind::S, 0) == std::multiset<std::string>{"+ S"});
    CHECK(word_set(KatoKind::S, 1) ==
          std::multiset<std::string>{"+ S^2 L1 P", "+ P L1 S^2", "- S L1 S"});
    CHECK(word_set(KatoKind::P, 1) == std::multiset<std::string>{"- S L1 P", "- P L1 S"});
    CHECK(word_set(KatoKind::D, 1) == std::multiset<std::string>{"+ P L1 P"});
    CHECK(word_set(KatoKind::P, 0) == std::multiset<std::string>{"+ P"});
    CHECK_THROWS_AS(kato_words(KatoKind::D, 0), UsageError);
}

TEST_CASE("integrating operator words at second order") {
    // thirteen words: three with L2 and ten with two L1 factors
    std::multiset<std::string> expect{
        "+ S^2 L2 P",      "- S L2 S",        "+ P L2 S^2",      "+ S L1 S L1 S",
        "- S^2 L1 S L1 P", "- S^2 L1 P L1 S", "- P L1 S L1 S^2", "- P L1 S^2 L1 S",
        "- S L1 S^2 L1 P", "- S L1 P L1 S^2", "+ P L1 P L1 S^3", "+ P L1 S^3 L1 P",
        "+ S^3 L1 P L1 P"};
    CHECK(word_set(KatoKind::S, 2) == expect);
}

TEST_CASE("word application") {
    auto H1 = bk("zeta1^2*eta1");
    auto model = HamiltonianModel::make("toy", 1, Frequencies({mpq_class(1)}), {H1}, 1);

    OperatorWord s_only{1, {{OpToken::Type::IntPow, 1}}};
    CHECK(word_apply(s_only, model, bk("zeta1^2")) == bk("-i*1/2*zeta1^2"));

    // - S L1 S on a secular input with a vanishing perturbation term
    auto zero_model =
        HamiltonianModel::make("zero", 1, Frequencies({mpq_class(1)}),
                               {PolySeries(VarKind::birkhoff, 1)}, 1);
    OperatorWord sls{-1,
                     {{OpToken::Type::IntPow, 1}, {OpToken::Type::Lie, 1}, {OpToken::Type::IntPow, 1}}};
    CHECK(word_apply(sls, zero_model, bk("zeta1*eta1")).is_zero());

    // + P L1 P on zeta eta with H1 = zeta1^2 eta1: the bracket leaves the kernel
    OperatorWord plp{1, {{OpToken::Type::Avg, 0}, {OpToken::Type::Lie, 1}, {OpToken::Type::Avg, 0}}};
    CHECK(word_apply(plp, model, bk("zeta1*eta1")).is_zero());

    OperatorWord l2{1, {{OpToken::Type::Lie, 2}}};
    CHECK_THROWS_AS(word_apply(l2, model, bk("zeta1")), UsageError);
}

TEST_CASE("perturbed averaging with no perturbation is plain averaging") {
    auto model = HamiltonianModel::make("bare", 1, Frequencies({mpq_class(1)}), {}, 0);
    Rng rng(20240301);
    for (int i = 0; i < 20; ++i) {
        PolySeries f = rnd_bk(rng, 1);
        CHECK(kato_apply(KatoKind::P, model, f, 3) == average(f, model.omega));
    }
}

TEST_CASE("perturbed projector fixes the Hamiltonian") {
    auto H = henon_heiles();
    const int N = 3;
    PolySeries full = H.full_h(N);
    CHECK(kato_apply(KatoKind::P, H, full, N) == full);
}

TEST_CASE("extended operator identities") {
    auto H = henon_heiles();
    const int N = 3;
    Rng rng(20240302);
    for (int i = 0; i < 20; ++i) {
        PolySeries f = rnd_bk(rng, 2);
        PolySeries pf = kato_apply(KatoKind::P, H, f, N);
        PolySeries sf = kato_apply(KatoKind::S, H, f, N);
        PolySeries df = kato_apply(KatoKind::D, H, f, N);
        PolySeries one_minus_p = f.with_caps(N, f.z_cap()) - pf;

        CHECK(kato_apply(KatoKind::S, H, lie_full(H, f, N), N) == one_minus_p);
        CHECK(lie_full(H, sf, N) == one_minus_p);
        CHECK(lie_full(H, pf, N) == df);
        CHECK(kato_apply(KatoKind::P, H, lie_full(H, f, N), N) == df);
        CHECK(kato_apply(KatoKind::S, H, pf, N).is_zero());
        CHECK(kato_apply(KatoKind::P, H, df, N) == df);
        CHECK(kato_apply(KatoKind::D, H, pf, N) == df);
    }
}

TEST_CASE("intertwining of the perturbed and unperturbed projectors") {
    auto H = henon_heiles();
    const int N = 2;
    GeneratorSeries G = explicit_generator(H, N);
    Rng rng(20240303);
    for (int i = 0; i < 20; ++i) {
        PolySeries f = rnd_bk(rng, 2);
        PolySeries lhs = direct_transform_fn(G, kato_apply(KatoKind::P, H, f, N), N);
        PolySeries rhs = average(direct_transform_fn(G, f, N), H.omega);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("uniqueness condition of the explicit generator") {
    const int N = 3;
    for (auto H : {henon_heiles(), toda2d(N + 1)}) {
        GeneratorSeries G = explicit_generator(H, N + 1); // parts through eps^N
        PolySeries g = G.combined(N);
        CHECK(kato_apply(KatoKind::P, H, g, N).is_zero());
    }
}

TEST_CASE("word expansion of the integrating operator reproduces the generator") {
    for (int N = 1; N <= 3; ++N) {
        for (auto H : {henon_heiles(), toda2d(3)}) {
            GeneratorSeries G = explicit_generator(H, N);
            PolySeries via_words = kato_apply(KatoKind::S, H, dH_deps(H, N), N - 1);
            CHECK(via_words == G.combined(N - 1));
        }
    }
}
