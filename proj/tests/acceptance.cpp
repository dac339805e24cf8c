// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. argv[1] must point at the CLI binary (used by criterion 6 to
// exercise the benchmark harness end to end).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lienorm/canonical.hpp"
#include "lienorm/integrals.hpp"
#include "lienorm/kato.hpp"
#include "lienorm/models.hpp"
#include "lienorm/normalize.hpp"
#include "test_util.hpp"

using namespace lienorm;
using testutil::Rng;

namespace {

struct CheckFailure {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw CheckFailure{msg};
}

PolySeries bk2(const char* s) { return PolySeries::parse(s, VarKind::birkhoff, 2); }
PolySeries pq2(const char* s) { return PolySeries::parse(s, VarKind::pq, 2); }

// ---------------------------------------------------------------- criterion 1
void pendulum_golden_series() {
    const char* golden[5] = {"-1/64", "-1/2048", "-5/131072", "-33/8388608", "-63/134217728"};
    auto H = pendulum(6);
    PolySeries norm = from_birkhoff(direct_transform(explicit_generator(H, 6), H, 6));
    PolySeries action = PolySeries::parse("p1^2 + q1^2", VarKind::pq, 1);
    PolySeries power = action;
    for (int k = 2; k <= 6; ++k) {
        power = power * action;
        PolySeries block = norm.eps_coeff(k - 1);
        PolySeries expect = power.scaled(ExtScalar::parse(golden[k - 2]).re_r());
        require(block == expect, "(p^2+q^2)^" + std::to_string(k) + " coefficient mismatch");
    }
}

// ---------------------------------------------------------------- criterion 2
void pendulum_golden_generator() {
    auto H = pendulum(2);
    GeneratorSeries G = explicit_generator(H, 2);
    require(from_birkhoff(G.parts[0]) ==
                PolySeries::parse("5/192*q1^3*p1 + 1/64*q1*p1^3", VarKind::pq, 1),
            "G0 mismatch");
    require(from_birkhoff(G.parts[1]) ==
                PolySeries::parse("17/7680*q1^5*p1 + 1/192*q1^3*p1^3 + 1/512*q1*p1^5",
                                  VarKind::pq, 1),
            "G1 mismatch");
}

// ---------------------------------------------------------------- criterion 3
void toda_golden_blocks() {
    auto H = toda2d(4);
    GeneratorSeries G = explicit_generator(H, 4);
    PolySeries norm = direct_transform(G, H, 4);
    require(norm.eps_coeff(2) ==
                bk2("-1/3*zeta2^2*eta2^2 + 1/3*eta1^2*zeta2^2 - 4/3*zeta1*eta1*zeta2*eta2"
                    " + 1/3*zeta1^2*eta2^2 - 1/3*zeta1^2*eta1^2"),
            "normalized eps^2 block mismatch");
    PolySeries e4 = bk2("-5/27*zeta2^3*eta2^3 - 7/9*eta1^2*zeta2^3*eta2"
                        " + zeta1*eta1*zeta2^2*eta2^2 - 7/9*zeta1*eta1^3*zeta2^2"
                        " - 7/9*zeta1^2*zeta2*eta2^3 + zeta1^2*eta1^2*zeta2*eta2"
                        " - 7/9*zeta1^3*eta1*eta2^2 - 5/27*zeta1^3*eta1^3")
                        .scaled(ExtScalar::imaginary(1));
    require(norm.eps_coeff(4) == e4, "normalized eps^4 block mismatch");

    PolySeries hori = from_birkhoff(hori_integral(H, G, 4, 2));
    require(hori.eps_coeff(0) ==
                pq2("1/12*q2^4 + 1/6*p2^2*q2^2 + 1/12*p2^4 + 1/6*q1^2*q2^2 + 1/2*q1^2*p2^2"
                    " + 1/12*q1^4 - 2/3*p1*q1*p2*q2 + 1/2*p1^2*q2^2 + 1/6*p1^2*p2^2"
                    " + 1/6*p1^2*q1^2 + 1/12*p1^4"),
            "hori eps^0 block mismatch");
    require(hori.eps_coeff(1) ==
                pq2("-1/9*q2^5 - 1/9*p2^2*q2^3 + 2/9*q1^2*q2^3 + 5/3*q1^2*p2^2*q2 + 1/3*q1^4*q2"
                    " - 2/3*p1*q1*p2*q2^2 + 4/3*p1*q1*p2^3 - 2/3*p1*q1^3*p2 - 7/9*p1^2*q2^3"
                    " - 4/3*p1^2*p2^2*q2 + p1^2*q1^2*q2 - 4/9*p1^3*q1*p2 + 4/9*p1^4*q2"),
            "hori eps^1 block mismatch");
}

// ---------------------------------------------------------------- criterion 4
void toda_method_comparison() {
    const int N = 8;
    auto H = toda2d(N);
    PolySeries via_explicit = direct_transform(explicit_generator(H, N), H, N);
    PolySeries via_deprit = deprit_classical(H, N).normalized;
    for (int n = 0; n <= 7; ++n)
        require(via_explicit.eps_coeff(n) == via_deprit.eps_coeff(n),
                "methods disagree at eps^" + std::to_string(n));
    require(via_explicit.eps_coeff(8) != via_deprit.eps_coeff(8),
            "methods unexpectedly agree at eps^8");
    require(average(via_explicit, H.omega) == via_explicit, "explicit result not secular");
    require(average(via_deprit, H.omega) == via_deprit, "classical result not secular");
}

// ---------------------------------------------------------------- criterion 5
// Four printed orders of the normalized Hamiltonian as signed operator words;
// the trailing token names the perturbation term the word acts on.
struct BurshteinTerm {
    const char* coeff;
    const char* word;
};

const std::vector<std::vector<BurshteinTerm>> kBurshteinBlocks = {
    {{"1", "P H1"}},
    {{"-1/2", "P L1 S H1"}, {"1", "P H2"}},
    {{"1/3", "P L1 S L1 S H1"},
     {"-1/6", "P L1 S^2 L1 P H1"},
     {"-1", "P L1 S H2"},
     {"1", "P H3"}},
    {{"1/6", "P L1 S L1 S^2 L1 P H1"},
     {"-1/4", "P L1 S L1 S L1 S H1"},
     {"1/12", "P L1 S^2 L1 S L1 P H1"},
     {"1/8", "P L1 S^2 L1 P L1 S H1"},
     {"1/4", "P L1 P L1 S^2 L1 S H1"},
     {"1/4", "P L1 P L1 S L1 S^2 H1"},
     {"-1/6", "P L1 P L1 S^3 L1 P H1"},
     {"-1/4", "P L1 P L1 P L1 S^3 H1"},
     {"1/2", "P L1 S L1 S H2"},
     {"1/4", "P L1 S L2 S H1"},
     {"-1/4", "P L1 S^2 L1 P H2"},
     {"-1/12", "P L1 S^2 L2 P H1"},
     {"-1/2", "P L1 P L1 S^2 H2"},
     {"-1/4", "P L1 P L2 S^2 H1"},
     {"1/4", "P L2 S L1 S H1"},
     {"-1/6", "P L2 S^2 L1 P H1"},
     {"-1/2", "P L2 S H2"},
     {"-1", "P L1 S H3"},
     {"1", "P H4"}}};

PolySeries eval_word(const HamiltonianModel& H, const std::string& word) {
    std::istringstream toks(word);
    std::vector<std::string> ops;
    std::string t;
    while (toks >> t) ops.push_back(t);
    // rightmost token is the operand H_k
    require(!ops.empty() && ops.back().size() == 2 && ops.back()[0] == 'H', "bad word");
    PolySeries cur = H.term(ops.back()[1] - '0');
    for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it) {
        const std::string& op = *it;
        if (op == "P") {
            cur = average(cur, H.omega);
        } else if (op == "S") {
            cur = integrate(cur, H.omega, 1);
        } else if (op.rfind("S^", 0) == 0) {
            cur = integrate(cur, H.omega, std::stoi(op.substr(2)));
        } else if (op[0] == 'L') {
            cur = poisson(cur, H.term(std::stoi(op.substr(1))));
        } else {
            require(false, "bad operator token '" + op + "'");
        }
    }
    return cur;
}

void burshtein_expansion() {
    auto H = toda2d(4);
    PolySeries norm = deprit_classical(H, 4).normalized;
    require(norm.eps_coeff(0) == H.h0(), "eps^0 block is not H0");
    for (int n = 1; n <= 4; ++n) {
        PolySeries expect(VarKind::birkhoff, 2);
        for (const auto& term : kBurshteinBlocks[n - 1])
            expect += eval_word(H, term.word).scaled(ExtScalar::parse(term.coeff).re_r());
        require(norm.eps_coeff(n) == expect,
                "word expansion mismatch at eps^" + std::to_string(n));
    }
}

// ---------------------------------------------------------------- criterion 6
void property_bracket_axioms() {
    Rng rng(77001);
    PolySeries zero(VarKind::birkhoff, 2);
    for (int i = 0; i < 200; ++i) {
        PolySeries f = testutil::rnd_poly(rng, VarKind::birkhoff, 2, 3, 4);
        PolySeries g = testutil::rnd_poly(rng, VarKind::birkhoff, 2, 3, 4);
        PolySeries h = testutil::rnd_poly(rng, VarKind::birkhoff, 2, 3, 4);
        require(poisson(f, g) == -poisson(g, f), "antisymmetry");
        require(poisson(f * g, h) == f * poisson(g, h) + g * poisson(f, h), "Leibniz");
        PolySeries jac = poisson(f, poisson(g, h));
        jac += poisson(g, poisson(h, f));
        jac += poisson(h, poisson(f, g));
        require(jac == zero, "Jacobi");
    }
}

void property_operator_identities() {
    Rng rng(77002);
    for (int i = 0; i < 200; ++i) {
        int dim = 1 + (i % 2);
        std::vector<mpq_class> w;
        bool nz = false;
        for (int k = 0; k < dim; ++k) {
            w.push_back(testutil::rnd_rational(rng, 3, 2));
            nz = nz || sgn(w.back()) != 0;
        }
        if (!nz) {
            --i;
            continue;
        }
        Frequencies om(w);
        PolySeries h0(VarKind::birkhoff, dim);
        for (int k = 0; k < dim; ++k) {
            Monomial m;
            m.exps.assign(2 * dim, 0);
            m.exps[k] = 1;
            m.exps[dim + k] = 1;
            h0.add_term(m, ExtScalar::imaginary(om.omega[k]));
        }
        PolySeries f = testutil::rnd_poly(rng, VarKind::birkhoff, dim, 4, 6);
        PolySeries pf = average(f, om);
        require(average(pf, om) == pf, "P^2 = P");
        require(integrate(liouville_apply(h0, f), om, 1) == f - pf, "S L = 1 - P");
        require(liouville_apply(h0, integrate(f, om, 1)) == f - pf, "L S = 1 - P");
        require(integrate(pf, om, 1).is_zero(), "S P = 0");
    }
}

void property_secular_results() {
    for (auto H : {pendulum(4), henon_heiles(), toda2d(4)}) {
        const int N = 4;
        PolySeries results[3] = {direct_transform(explicit_generator(H, N), H, N),
                                 deprit_classical(H, N).normalized,
                                 henrard_normalize(H, N).normalized};
        for (const auto& norm : results)
            require(average(norm, H.omega) == norm, "normalized series not secular: " + H.name);
    }
}

void property_integrals_commute() {
    const int N = 4;
    for (auto H : {henon_heiles(), toda2d(N)}) {
        GeneratorSeries G = explicit_generator(H, N);
        PolySeries seed = center_element(center_generators(H.omega, H.dim).betas[0], H.dim);
        PolySeries integral = gustavson_integral(G, seed, N, H.omega);
        require(poisson(integral, H.full_h(N)).with_caps(N, PolySeries::kNoCap).is_zero(),
                "[I,H] != O(eps^{N+1}) for " + H.name);
    }
}

void property_kato_identities() {
    auto H = henon_heiles();
    const int N = 3;
    auto lie_full = [&](const PolySeries& f) {
        return poisson(f.with_caps(N, f.z_cap()), H.full_h(N));
    };
    require(kato_apply(KatoKind::P, H, H.full_h(N), N) == H.full_h(N), "P_H H = H");
    Rng rng(77003);
    for (int i = 0; i < 200; ++i) {
        PolySeries f = testutil::rnd_poly(rng, VarKind::birkhoff, 2, 3, 5);
        PolySeries pf = kato_apply(KatoKind::P, H, f, N);
        PolySeries sf = kato_apply(KatoKind::S, H, f, N);
        PolySeries df = kato_apply(KatoKind::D, H, f, N);
        PolySeries one_minus_p = f.with_caps(N, f.z_cap()) - pf;
        require(kato_apply(KatoKind::S, H, lie_full(f), N) == one_minus_p, "S_H L_H = 1 - P_H");
        require(lie_full(sf) == one_minus_p, "L_H S_H = 1 - P_H");
        require(lie_full(pf) == df, "L_H P_H = D_H");
        require(kato_apply(KatoKind::P, H, lie_full(f), N) == df, "P_H L_H = D_H");
        require(kato_apply(KatoKind::S, H, pf, N).is_zero(), "S_H P_H = 0");
        require(kato_apply(KatoKind::P, H, df, N) == df, "P_H D_H = D_H");
    }
}

void property_intertwining() {
    auto H = henon_heiles();
    const int N = 2;
    GeneratorSeries G = explicit_generator(H, N);
    Rng rng(77004);
    for (int i = 0; i < 200; ++i) {
        PolySeries f = testutil::rnd_poly(rng, VarKind::birkhoff, 2, 3, 5);
        PolySeries lhs = direct_transform_fn(G, kato_apply(KatoKind::P, H, f, N), N);
        PolySeries rhs = average(direct_transform_fn(G, f, N), H.omega);
        require(lhs == rhs, "U_G P_H != P_{H0} U_G");
    }
}

void property_uniqueness() {
    const int N = 3;
    for (auto H : {henon_heiles(), toda2d(N + 1)}) {
        GeneratorSeries G = explicit_generator(H, N + 1);
        require(kato_apply(KatoKind::P, H, G.combined(N), N).is_zero(),
                "P_H G != O(eps^{N+1}) for " + H.name);
    }
}

void property_insensitivity() {
    const int N = 4;
    for (auto H : {henon_heiles(), toda2d(N)}) {
        PolySeries seed = center_element(center_generators(H.omega, H.dim).betas[0], H.dim);
        PolySeries a = gustavson_integral(explicit_generator(H, N), seed, N, H.omega);
        PolySeries b = gustavson_integral(deprit_classical(H, N).generator, seed, N, H.omega);
        require(a == b, "gustavson integral depends on the generator choice: " + H.name);
    }
}

void bench_csv_complete(const std::string& cli_path) {
    require(!cli_path.empty(), "CLI binary path not provided");
    const std::string out_path = "acceptance_bench.csv";
    std::string cmd = cli_path +
                      " --model henon_heiles --order 12 --method all --bench --format csv > " +
                      out_path + " 2> acceptance_bench.err";
    int rc = std::system(cmd.c_str());
    require(rc == 0, "CLI benchmark run exited with a failure");
    std::ifstream in(out_path);
    require(static_cast<bool>(in), "benchmark CSV missing");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "empty CSV");
    require(line == "model,method,order,seconds,max_terms", "bad CSV header: " + line);
    std::map<std::pair<std::string, int>, int> seen;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string model, method, order_s, seconds_s, terms_s;
        require(std::getline(fields, model, ',') && std::getline(fields, method, ',') &&
                    std::getline(fields, order_s, ',') && std::getline(fields, seconds_s, ',') &&
                    std::getline(fields, terms_s, ','),
                "short CSV row: " + line);
        require(model == "henon_heiles", "unexpected model in row: " + line);
        int order = std::stoi(order_s);
        require(std::stod(seconds_s) >= 0.0, "negative time in row: " + line);
        require(std::stoul(terms_s) > 0, "zero max_terms in row: " + line);
        ++seen[{method, order}];
    }
    for (const std::string& method : {"explicit", "deprit", "henrard"})
        for (int order = 2; order <= 12; ++order)
            require(seen[{method, order}] == 1,
                    "missing or duplicated row for " + method + " at order " +
                        std::to_string(order));
    std::remove(out_path.c_str());
    std::remove("acceptance_bench.err");
}

struct Criterion {
    std::string label;
    double limit_seconds; // 0 = no stated limit
    std::function<void()> fn;
};

} // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";
    std::vector<Criterion> criteria = {
        {"1 pendulum golden normalized series (N=6, exact)", 5.0, pendulum_golden_series},
        {"2 pendulum golden generator (N=2, exact)", 1.0, pendulum_golden_generator},
        {"3 toda2d golden blocks: normalized eps^2/eps^4, hori eps^0/eps^1 (N=4, exact)", 60.0,
         toda_golden_blocks},
        {"4 toda2d method comparison: equal through eps^7, differ at eps^8, secular (N=8)",
         1800.0, toda_method_comparison},
        {"5 classical Deprit matches the four-order word expansion (exact)", 0.0,
         burshtein_expansion},
        {"6a bracket axioms (200 random instances)", 0.0, property_bracket_axioms},
        {"6b averaging/integrating identities (200 random instances)", 0.0,
         property_operator_identities},
        {"6c every normalized Hamiltonian is secular", 0.0, property_secular_results},
        {"6d [I,H] = O(eps^5) for henon_heiles and toda2d (N=4)", 0.0,
         property_integrals_commute},
        {"6e perturbed-operator identities at N=3 (200 random instances)", 0.0,
         property_kato_identities},
        {"6f projector intertwining at N=2 (200 random instances)", 0.0, property_intertwining},
        {"6g generator uniqueness P_H G = O(eps^4) at N=3", 0.0, property_uniqueness},
        {"6h gustavson integrals insensitive to the generator (N=4)", 0.0,
         property_insensitivity},
        {"6i benchmark CSV complete for orders 2..12, all methods", 0.0,
         [&cli_path] { bench_csv_complete(cli_path); }},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.fn();
        } catch (const CheckFailure& e) {
            verdict = "FAIL";
            detail = e.msg;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "PASS" && c.limit_seconds > 0 && secs > c.limit_seconds) {
            verdict = "FAIL";
            detail = "exceeded the " + std::to_string(c.limit_seconds) + "s limit";
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << verdict << "  criterion " << c.label << "  [" << buf << "]";
        if (!detail.empty()) std::cout << "  -- " << detail;
        std::cout << std::endl;
        if (verdict == "FAIL") ++failures;
    }
    return failures;
}
