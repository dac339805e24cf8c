#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lienorm/ext_scalar.hpp"

namespace lienorm {

enum class VarKind { pq, birkhoff };

/*
 * Monomial over one variable frame plus the two grading exponents.
 *
 * exps has length 2d: coordinates first (q1..qd or zeta1..zetad), then
 * momenta (p1..pd or eta1..etad). eps_pow grades the perturbation
 * parameter, z_pow the ancillary bookkeeping variable of the resolvent
 * algorithm. A monomial never mixes the two frames; the frame lives on
 * the series that owns it.
 */
struct Monomial {
    std::vector<int32_t> exps;
    int32_t eps_pow = 0;
    int32_t z_pow = 0;

    int32_t degree() const {
        int32_t d = 0;
        for (int32_t e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const {
        return eps_pow == o.eps_pow && z_pow == o.z_pow && exps == o.exps;
    }
    // Fixed total order: (eps_pow, z_pow), then graded-lex on exps.
    bool operator<(const Monomial& o) const {
        if (eps_pow != o.eps_pow) return eps_pow < o.eps_pow;
        if (z_pow != o.z_pow) return z_pow < o.z_pow;
        int32_t da = degree(), db = o.degree();
        if (da != db) return da < db;
        return exps < o.exps;
    }

    Monomial times(const Monomial& o) const;
    std::string str(VarKind kind) const; // "1" for the empty product
};

/*
 * PolySeries
 * ----------
 * Sparse truncated multivariate polynomial: an ordered map from Monomial
 * to a nonzero ExtScalar. eps_cap and z_cap bound the retained grading
 * powers; terms beyond a cap are discarded as they arise, inside products,
 * not afterwards. kNoCap means unbounded.
 *
 * Values are immutable in spirit: every operation returns a new series.
 * Iteration order is the fixed monomial order, so printing is
 * deterministic. Equality compares frame, dimension and terms; caps are
 * bookkeeping, not part of the value.
 */
class PolySeries {
public:
    static constexpr int32_t kNoCap = std::numeric_limits<int32_t>::max();

    PolySeries(VarKind kind, int dim, int32_t eps_cap = kNoCap, int32_t z_cap = kNoCap);

    static PolySeries constant(VarKind kind, int dim, const ExtScalar& c,
                               int32_t eps_cap = kNoCap, int32_t z_cap = kNoCap);
    // Single phase-space variable to a power; var indexes exps directly.
    static PolySeries variable(VarKind kind, int dim, int var, int power = 1,
                               int32_t eps_cap = kNoCap, int32_t z_cap = kNoCap);

    VarKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int32_t eps_cap() const { return eps_cap_; }
    int32_t z_cap() const { return z_cap_; }
    const std::map<Monomial, ExtScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c on m, dropping zero results and capped monomials.
    void add_term(const Monomial& m, const ExtScalar& c);

    PolySeries operator-() const;
    PolySeries& operator+=(const PolySeries& o);
    PolySeries& operator-=(const PolySeries& o);
    friend PolySeries operator+(PolySeries a, const PolySeries& b) { a += b; return a; }
    friend PolySeries operator-(PolySeries a, const PolySeries& b) { a -= b; return a; }
    friend PolySeries operator*(const PolySeries& a, const PolySeries& b);

    PolySeries scaled(const ExtScalar& c) const;
    PolySeries scaled(const mpq_class& q) const { return scaled(ExtScalar::rational(q)); }

    // Multiplication by eps^k (k >= 0); capped terms drop.
    PolySeries shifted_eps(int k) const;

    // Copy with new caps; drops terms beyond them.
    PolySeries with_caps(int32_t eps_cap, int32_t z_cap) const;

    // Coefficient extraction removes the grading variable.
    PolySeries eps_coeff(int n) const;
    PolySeries z_coeff(int n) const;

    PolySeries derivative(int var) const;

    bool operator==(const PolySeries& o) const {
        return kind_ == o.kind_ && dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool operator!=(const PolySeries& o) const { return !(*this == o); }

    std::string str() const;
    static PolySeries parse(std::string_view text, VarKind kind, int dim,
                            int32_t eps_cap = kNoCap, int32_t z_cap = kNoCap);

private:
    void check_compatible(const PolySeries& o) const;

    VarKind kind_;
    int dim_;
    int32_t eps_cap_, z_cap_;
    std::map<Monomial, ExtScalar> terms_;
};

inline PolySeries coeff_of_z(const PolySeries& f, int n) { return f.z_coeff(n); }
inline PolySeries coeff_of_eps(const PolySeries& f, int n) { return f.eps_coeff(n); }

} // namespace lienorm
