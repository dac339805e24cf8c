#pragma once

#include <string>
#include <vector>

#include "lienorm/model.hpp"

namespace lienorm {

enum class KatoKind { P, S, D };

// One token of an operator word, applied right to left:
// Avg is the averaging projector (a resolved Sr^0 slot, its -1 folded into
// the word sign), IntPow(p) is S^p, Lie(k) is the Liouvillian of H_k.
struct OpToken {
    enum class Type { Avg, IntPow, Lie };
    Type type;
    int arg = 0;
};

struct OperatorWord {
    int sign = 1;
    std::vector<OpToken> tokens; // display order; rightmost token acts first
    std::string str() const;     // e.g. "+ S^2 L1 P"
};

// Complete signed word list for the eps^n coefficient of the perturbed
// averaging (P), integrating (S) or eigen-nilpotent (D) operator. A word
// with m Lie tokens carries m+1 operator slots whose S-powers sum to m,
// m+1 or m-1 respectively; empty slots resolve to Avg with a sign flip.
std::vector<OperatorWord> kato_words(KatoKind kind, int n);

// Applies one word to f (Birkhoff frame). Lie(k) beyond the model's stored
// terms is a usage error.
PolySeries word_apply(const OperatorWord& w, const HamiltonianModel& H, const PolySeries& f);

// sum_{n<=N} eps^n sum_words word_apply, truncated at eps_cap = N. Words
// referencing absent H_k vanish and are skipped.
PolySeries kato_apply(KatoKind kind, const HamiltonianModel& H, const PolySeries& f, int N);

} // namespace lienorm
