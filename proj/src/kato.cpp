#include "lienorm/kato.hpp"

#include "lienorm/canonical.hpp"
#include "lienorm/errors.hpp"

namespace lienorm {

std::string OperatorWord::str() const {
    std::string out = sign >= 0 ? "+" : "-";
    for (const auto& t : tokens) {
        out += " ";
        switch (t.type) {
        case OpToken::Type::Avg: out += "P"; break;
        case OpToken::Type::IntPow: out += t.arg == 1 ? "S" : "S^" + std::to_string(t.arg); break;
        case OpToken::Type::Lie: out += "L" + std::to_string(t.arg); break;
        }
    }
    return out;
}

namespace {

// All ways to write total as `parts` ordered integers >= min_part,
// lexicographic in the part vector.
std::vector<std::vector<int>> compositions(int total, int parts, int min_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == parts - 1) {
            if (left >= min_part) {
                cur[idx] = left;
                out.push_back(cur);
            }
            return;
        }
        for (int v = min_part; v <= left - min_part * (parts - 1 - idx); ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    if (parts > 0 && total >= min_part * parts) rec(rec, 0, total);
    return out;
}

OpToken slot_token(int p) {
    if (p == 0) return {OpToken::Type::Avg, 0};
    return {OpToken::Type::IntPow, p};
}

} // namespace

std::vector<OperatorWord> kato_words(KatoKind kind, int n) {
    if (n < 0) throw UsageError("kato_words: order must be >= 0");
    if (kind == KatoKind::D && n < 1) throw UsageError("kato_words: kind D requires n >= 1");
    std::vector<OperatorWord> out;
    if (n == 0) {
        OperatorWord w;
        w.tokens.push_back(kind == KatoKind::P ? OpToken{OpToken::Type::Avg, 0}
                                               : OpToken{OpToken::Type::IntPow, 1});
        out.push_back(w);
        return out;
    }
    for (int m = 1; m <= n; ++m) {
        const int slot_sum = kind == KatoKind::P ? m : (kind == KatoKind::S ? m + 1 : m - 1);
        // (-1)^m for S, (-1)^{m+1} for P and D
        const int base_sign = (kind == KatoKind::S) == (m % 2 == 0) ? 1 : -1;
        for (const auto& ks : compositions(n, m, 1)) {      // ks[j] = k_{j+1}
            for (const auto& ps : compositions(slot_sum, m + 1, 0)) { // ps[j] = p_{j+1}
                OperatorWord w;
                w.sign = base_sign;
                for (int p : ps)
                    if (p == 0) w.sign = -w.sign; // each Sr^0 slot is -P
                w.tokens.push_back(slot_token(ps[m]));
                for (int j = m - 1; j >= 0; --j) {
                    w.tokens.push_back({OpToken::Type::Lie, ks[j]});
                    w.tokens.push_back(slot_token(ps[j]));
                }
                out.push_back(w);
            }
        }
    }
    return out;
}

PolySeries word_apply(const OperatorWord& w, const HamiltonianModel& H, const PolySeries& f) {
    if (f.kind() != VarKind::birkhoff)
        throw UsageError("word_apply: input must be in the Birkhoff frame");
    PolySeries cur = f;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        switch (it->type) {
        case OpToken::Type::Avg: cur = average(cur, H.omega); break;
        case OpToken::Type::IntPow: cur = integrate(cur, H.omega, it->arg); break;
        case OpToken::Type::Lie: cur = poisson(cur, H.term(it->arg)); break;
        }
    }
    return w.sign >= 0 ? cur : -cur;
}

PolySeries kato_apply(KatoKind kind, const HamiltonianModel& H, const PolySeries& f, int N) {
    if (N < 0) throw UsageError("kato_apply: order must be >= 0");
    PolySeries acc(VarKind::birkhoff, H.dim, std::min<int32_t>(N, f.eps_cap()), f.z_cap());
    for (int n = (kind == KatoKind::D ? 1 : 0); n <= N; ++n) {
        PolySeries fn = f.with_caps(N - n, f.z_cap());
        for (const auto& w : kato_words(kind, n)) {
            bool applicable = true;
            for (const auto& t : w.tokens)
                if (t.type == OpToken::Type::Lie && !H.has_term(t.arg)) applicable = false;
            if (!applicable) continue; // the Lie factor is zero
            acc += word_apply(w, H, fn).shifted_eps(n);
        }
    }
    return acc;
}

} // namespace lienorm
