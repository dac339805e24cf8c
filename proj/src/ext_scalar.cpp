#include "lienorm/ext_scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "lienorm/errors.hpp"

namespace lienorm {

mpq_class make_q(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class q_pow(const mpq_class& base, unsigned n) {
    mpq_class r(1);
    mpq_class b = base;
    for (unsigned i = 0; i < n; ++i) r *= b;
    return r;
}

ExtScalar ExtScalar::rational(const mpq_class& r) {
    ExtScalar s;
    s.re_r_ = r;
    return s;
}

ExtScalar ExtScalar::rational(long num, long den) { return rational(make_q(num, den)); }

ExtScalar ExtScalar::imaginary(const mpq_class& r) {
    ExtScalar s;
    s.im_r_ = r;
    return s;
}

ExtScalar ExtScalar::sqrt2(const mpq_class& r) {
    ExtScalar s;
    s.re_s_ = r;
    return s;
}

ExtScalar ExtScalar::parts(const mpq_class& re_r, const mpq_class& re_s,
                           const mpq_class& im_r, const mpq_class& im_s) {
    ExtScalar s;
    s.re_r_ = re_r;
    s.re_s_ = re_s;
    s.im_r_ = im_r;
    s.im_s_ = im_s;
    return s;
}

bool ExtScalar::is_zero() const {
    return sgn(re_r_) == 0 && sgn(re_s_) == 0 && sgn(im_r_) == 0 && sgn(im_s_) == 0;
}

bool ExtScalar::is_rational() const {
    return sgn(re_s_) == 0 && sgn(im_r_) == 0 && sgn(im_s_) == 0;
}

ExtScalar ExtScalar::operator-() const {
    return parts(mpq_class(-re_r_), mpq_class(-re_s_), mpq_class(-im_r_), mpq_class(-im_s_));
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    re_r_ += o.re_r_;
    re_s_ += o.re_s_;
    im_r_ += o.im_r_;
    im_s_ += o.im_s_;
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
    re_r_ -= o.re_r_;
    re_s_ -= o.re_s_;
    im_r_ -= o.im_r_;
    im_s_ -= o.im_s_;
    return *this;
}

namespace {

// Product in Q[sqrt2]: (x1 + x2*r2)(y1 + y2*r2) = (x1*y1 + 2*x2*y2) + (x1*y2 + x2*y1)*r2.
void qmul(const mpq_class& x1, const mpq_class& x2, const mpq_class& y1, const mpq_class& y2,
          mpq_class& out1, mpq_class& out2) {
    out1 = x1 * y1 + 2 * x2 * y2;
    out2 = x1 * y2 + x2 * y1;
}

} // namespace

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    // (A + iB)(C + iD) = (AC - BD) + i(AD + BC), components in Q[sqrt2].
    mpq_class ac1, ac2, bd1, bd2, ad1, ad2, bc1, bc2;
    qmul(a.re_r_, a.re_s_, b.re_r_, b.re_s_, ac1, ac2);
    qmul(a.im_r_, a.im_s_, b.im_r_, b.im_s_, bd1, bd2);
    qmul(a.re_r_, a.re_s_, b.im_r_, b.im_s_, ad1, ad2);
    qmul(a.im_r_, a.im_s_, b.re_r_, b.re_s_, bc1, bc2);
    return ExtScalar::parts(mpq_class(ac1 - bd1), mpq_class(ac2 - bd2),
                            mpq_class(ad1 + bc1), mpq_class(ad2 + bc2));
}

ExtScalar ExtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExtScalar: inverse of zero");
    // 1/(A + iB) = (A - iB) / (A^2 + B^2); the norm lies in Q[sqrt2],
    // and 1/(n1 + n2*r2) = (n1 - n2*r2) / (n1^2 - 2*n2^2).
    mpq_class n1, n2, t1, t2;
    qmul(re_r_, re_s_, re_r_, re_s_, n1, n2);
    qmul(im_r_, im_s_, im_r_, im_s_, t1, t2);
    n1 += t1;
    n2 += t2;
    mpq_class d = n1 * n1 - 2 * n2 * n2; // nonzero: sqrt2 is irrational
    mpq_class i1 = n1 / d, i2 = mpq_class(-n2) / d;
    ExtScalar conj = parts(re_r_, re_s_, mpq_class(-im_r_), mpq_class(-im_s_));
    return conj * parts(i1, i2, mpq_class(0), mpq_class(0));
}

ExtScalar ExtScalar::times_i() const {
    return parts(mpq_class(-im_r_), mpq_class(-im_s_), re_r_, re_s_);
}

ExtScalar ExtScalar::conjugate() const {
    return parts(re_r_, re_s_, mpq_class(-im_r_), mpq_class(-im_s_));
}

bool ExtScalar::operator==(const ExtScalar& o) const {
    return re_r_ == o.re_r_ && re_s_ == o.re_s_ && im_r_ == o.im_r_ && im_s_ == o.im_s_;
}

namespace {

// One signed component of the textual form, e.g. "i*3/4*r2".
void append_component(std::string& out, const mpq_class& v, bool imag, bool root, bool first) {
    mpq_class a = abs(v);
    if (sgn(v) < 0)
        out += "-";
    else if (!first)
        out += "+";
    std::string body;
    if (imag) body += "i";
    if (a != 1 || (!imag && !root)) {
        if (!body.empty()) body += "*";
        body += a.get_str();
    }
    if (root) {
        if (!body.empty()) body += "*";
        body += "r2";
    }
    out += body;
}

} // namespace

std::string ExtScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    const mpq_class* comps[4] = {&re_r_, &re_s_, &im_r_, &im_s_};
    const bool imag[4] = {false, false, true, true};
    const bool root[4] = {false, true, false, true};
    for (int k = 0; k < 4; ++k) {
        if (sgn(*comps[k]) == 0) continue;
        append_component(out, *comps[k], imag[k], root[k], first);
        first = false;
    }
    return out;
}

namespace {

struct ScalarLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

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

    // Word of letters followed by optional digits ("i", "r2", "eps", "zeta1").
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

ExtScalar ExtScalar::parse(std::string_view text) {
    ScalarLexer lx{text};
    ExtScalar acc;
    bool any = false;
    while (!lx.eof()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++lx.pos;
        } else if (any) {
            throw ParseError("expected '+' or '-' between components", lx.pos);
        }
        // component: '*'-separated factors from {rational, i, r2}
        bool have_i = false, have_r2 = false, have_q = false;
        mpq_class q(1);
        for (;;) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                if (have_q) throw ParseError("repeated rational factor", lx.pos);
                q = lx.rational();
                have_q = true;
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                std::size_t at = lx.pos;
                std::string w = lx.word();
                if (w == "i") {
                    if (have_i) throw ParseError("repeated 'i' factor", at);
                    have_i = true;
                } else if (w == "r2") {
                    if (have_r2) throw ParseError("repeated 'r2' factor", at);
                    have_r2 = true;
                } else {
                    throw ParseError("unexpected token '" + w + "' in scalar", at);
                }
            } else {
                throw ParseError("expected scalar factor", lx.pos);
            }
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (neg) q = -q;
        ExtScalar comp = have_r2 ? sqrt2(q) : rational(q);
        if (have_i) comp = comp.times_i();
        acc += comp;
        any = true;
    }
    if (!any) throw ParseError("empty scalar", 0);
    return acc;
}

} // namespace lienorm
