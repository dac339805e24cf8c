#include "lienorm/poly.hpp"

#include <cctype>
#include <cstdlib>

#include "lienorm/errors.hpp"

namespace lienorm {

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
    r.eps_pow = eps_pow + o.eps_pow;
    r.z_pow = z_pow + o.z_pow;
    return r;
}

std::string Monomial::str(VarKind kind) const {
    const int d = static_cast<int>(exps.size()) / 2;
    std::string out;
    auto factor = [&](const std::string& name, int32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (int k = 0; k < d; ++k)
        factor((kind == VarKind::pq ? "q" : "zeta") + std::to_string(k + 1), exps[k]);
    for (int k = 0; k < d; ++k)
        factor((kind == VarKind::pq ? "p" : "eta") + std::to_string(k + 1), exps[d + k]);
    factor("eps", eps_pow);
    factor("z", z_pow);
    return out.empty() ? "1" : out;
}

PolySeries::PolySeries(VarKind kind, int dim, int32_t eps_cap, int32_t z_cap)
    : kind_(kind), dim_(dim), eps_cap_(eps_cap), z_cap_(z_cap) {
    if (dim < 1) throw UsageError("PolySeries: dimension must be >= 1");
}

PolySeries PolySeries::constant(VarKind kind, int dim, const ExtScalar& c,
                                int32_t eps_cap, int32_t z_cap) {
    PolySeries p(kind, dim, eps_cap, z_cap);
    Monomial m;
    m.exps.assign(2 * dim, 0);
    p.add_term(m, c);
    return p;
}

PolySeries PolySeries::variable(VarKind kind, int dim, int var, int power,
                                int32_t eps_cap, int32_t z_cap) {
    if (var < 0 || var >= 2 * dim) throw UsageError("PolySeries: variable index out of range");
    PolySeries p(kind, dim, eps_cap, z_cap);
    Monomial m;
    m.exps.assign(2 * dim, 0);
    m.exps[var] = power;
    p.add_term(m, ExtScalar(1));
    return p;
}

void PolySeries::add_term(const Monomial& m, const ExtScalar& c) {
    if (c.is_zero()) return;
    if (m.eps_pow > eps_cap_ || m.z_pow > z_cap_) return;
    if (static_cast<int>(m.exps.size()) != 2 * dim_)
        throw UsageError("PolySeries: monomial has wrong variable count");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PolySeries::check_compatible(const PolySeries& o) const {
    if (kind_ != o.kind_) throw UsageError("PolySeries: mixed variable frames");
    if (dim_ != o.dim_) throw UsageError("PolySeries: dimension mismatch");
}

PolySeries PolySeries::operator-() const {
    PolySeries r(kind_, dim_, eps_cap_, z_cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolySeries& PolySeries::operator+=(const PolySeries& o) {
    check_compatible(o);
    eps_cap_ = std::min(eps_cap_, o.eps_cap_);
    z_cap_ = std::min(z_cap_, o.z_cap_);
    // re-clip existing terms against the tightened caps
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.eps_pow > eps_cap_ || it->first.z_pow > z_cap_)
            it = terms_.erase(it);
        else
            ++it;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& o) {
    check_compatible(o);
    eps_cap_ = std::min(eps_cap_, o.eps_cap_);
    z_cap_ = std::min(z_cap_, o.z_cap_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.eps_pow > eps_cap_ || it->first.z_pow > z_cap_)
            it = terms_.erase(it);
        else
            ++it;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    a.check_compatible(b);
    PolySeries r(a.kind_, a.dim_, std::min(a.eps_cap_, b.eps_cap_),
                 std::min(a.z_cap_, b.z_cap_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // b iterates in eps-major order, so past the cap nothing returns below it
            if (ma.eps_pow + mb.eps_pow > r.eps_cap_) break;
            if (ma.z_pow + mb.z_pow > r.z_cap_) continue;
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

PolySeries PolySeries::scaled(const ExtScalar& c) const {
    PolySeries r(kind_, dim_, eps_cap_, z_cap_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

PolySeries PolySeries::shifted_eps(int k) const {
    // The shift widens the knowledge window: known mod eps^(C+1) becomes
    // known mod eps^(C+k+1).
    int32_t cap = eps_cap_ == kNoCap ? kNoCap : eps_cap_ + k;
    PolySeries r(kind_, dim_, cap, z_cap_);
    for (const auto& [m, c] : terms_) {
        Monomial sm = m;
        sm.eps_pow += k;
        r.terms_.emplace(sm, c);
    }
    return r;
}

PolySeries PolySeries::with_caps(int32_t eps_cap, int32_t z_cap) const {
    PolySeries r(kind_, dim_, eps_cap, z_cap);
    for (const auto& [m, c] : terms_) {
        if (m.eps_pow > eps_cap || m.z_pow > z_cap) continue;
        r.terms_.emplace(m, c);
    }
    return r;
}

PolySeries PolySeries::eps_coeff(int n) const {
    PolySeries r(kind_, dim_, kNoCap, z_cap_);
    for (const auto& [m, c] : terms_) {
        if (m.eps_pow != n) continue;
        Monomial sm = m;
        sm.eps_pow = 0;
        r.terms_.emplace(sm, c);
    }
    return r;
}

PolySeries PolySeries::z_coeff(int n) const {
    PolySeries r(kind_, dim_, eps_cap_, kNoCap);
    for (const auto& [m, c] : terms_) {
        if (m.z_pow != n) continue;
        Monomial sm = m;
        sm.z_pow = 0;
        r.terms_.emplace(sm, c);
    }
    return r;
}

PolySeries PolySeries::derivative(int var) const {
    if (var < 0 || var >= 2 * dim_) throw UsageError("PolySeries: variable index out of range");
    PolySeries r(kind_, dim_, eps_cap_, z_cap_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        Monomial dm = m;
        const int32_t e = dm.exps[var]--;
        r.terms_.emplace(dm, c * ExtScalar(e));
    }
    return r;
}

std::string PolySeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool multi = cs.find_first_of("+-", 1) != std::string::npos;
        bool neg = !multi && cs[0] == '-';
        if (out.empty()) {
            if (multi) cs = "(" + cs + ")";
            out += cs;
        } else {
            if (neg) {
                out += " - " + cs.substr(1);
            } else {
                out += " + " + (multi ? "(" + cs + ")" : cs);
            }
        }
        std::string ms = m.str(kind_);
        if (ms != "1") out += "*" + ms;
    }
    return out;
}

namespace {

struct PolyLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eof() { return peek() == '\0'; }

    mpq_class rational() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number", pos);
        std::string num(s.substr(start, pos - start));
        std::string den = "1";
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator digits after '/'", pos);
            den = std::string(s.substr(dstart, pos - dstart));
        }
        mpq_class q(num + "/" + den);
        q.canonicalize();
        return q;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return std::strtol(std::string(s.substr(start, pos - start)).c_str(), nullptr, 10);
    }

    // letters then digits; returns (letters, digits-or-empty)
    std::pair<std::string, std::string> word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string letters(s.substr(start, pos - start));
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return {letters, std::string(s.substr(dstart, pos - dstart))};
    }
};

} // namespace

PolySeries PolySeries::parse(std::string_view text, VarKind kind, int dim,
                             int32_t eps_cap, int32_t z_cap) {
    PolyLexer lx{text};
    PolySeries out(kind, dim, eps_cap, z_cap);
    bool any = false;
    while (!lx.eof()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++lx.pos;
        } else if (any) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        ExtScalar coeff(1);
        Monomial mono;
        mono.exps.assign(2 * dim, 0);
        for (;;) {
            char f = lx.peek();
            std::size_t at = lx.pos;
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= ExtScalar::rational(lx.rational());
            } else if (f == '(') {
                ++lx.pos;
                std::size_t depth = 1, start = lx.pos;
                while (lx.pos < lx.s.size() && depth > 0) {
                    if (lx.s[lx.pos] == '(') ++depth;
                    if (lx.s[lx.pos] == ')') --depth;
                    ++lx.pos;
                }
                if (depth > 0) throw ParseError("unbalanced '('", at);
                coeff *= ExtScalar::parse(lx.s.substr(start, lx.pos - 1 - start));
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                auto [letters, digits] = lx.word();
                int exp = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    exp = static_cast<int>(lx.integer());
                }
                if (letters == "i" && digits.empty()) {
                    for (int j = 0; j < (exp & 3); ++j) coeff = coeff.times_i();
                } else if (letters == "r" && digits == "2") {
                    if (lx.peek() == '^') throw ParseError("exponent not allowed on r2", lx.pos);
                    coeff *= ExtScalar::sqrt2(1);
                } else if (letters == "eps" && digits.empty()) {
                    mono.eps_pow += exp;
                } else if (letters == "z" && digits.empty()) {
                    mono.z_pow += exp;
                } else {
                    int base = -1;
                    if (kind == VarKind::pq && letters == "q") base = 0;
                    else if (kind == VarKind::pq && letters == "p") base = dim;
                    else if (kind == VarKind::birkhoff && letters == "zeta") base = 0;
                    else if (kind == VarKind::birkhoff && letters == "eta") base = dim;
                    if (base < 0)
                        throw ParseError("unknown variable '" + letters + digits + "'", at);
                    if (digits.empty()) throw ParseError("variable needs an index", at);
                    int idx = std::atoi(digits.c_str());
                    if (idx < 1 || idx > dim)
                        throw ParseError("variable index out of range in '" + letters + digits + "'", at);
                    mono.exps[base + idx - 1] += exp;
                }
            } else {
                throw ParseError("expected term factor", lx.pos);
            }
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (neg) coeff = -coeff;
        out.add_term(mono, coeff);
        any = true;
    }
    return out;
}

} // namespace lienorm
