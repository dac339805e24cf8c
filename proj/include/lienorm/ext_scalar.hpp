#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lienorm {

/*
 * ExtScalar
 * ---------
 * Exact element of Q(i)[sqrt2], stored as
 *
 *     (re_r + re_s*sqrt2) + i*(im_r + im_s*sqrt2)
 *
 * with four arbitrary-precision rationals, each kept canonical (lowest
 * terms, positive denominator). Zero is the unique all-zero representation.
 *
 * Textual form: signed sum of components "a/b", "a/b*r2", "i*a/b",
 * "i*a/b*r2", e.g. "-1/64", "1/2+i*1/2", "3/4*r2". A unit rational is
 * omitted when an i or r2 factor is present ("i", "r2", "i*r2").
 */
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long n) : re_r_(n) {}
    explicit ExtScalar(const mpq_class& r) : re_r_(r) {}

    static ExtScalar rational(const mpq_class& r);
    static ExtScalar rational(long num, long den);
    static ExtScalar imaginary(const mpq_class& r); // i*r
    static ExtScalar sqrt2(const mpq_class& r);     // r*sqrt2
    static ExtScalar parts(const mpq_class& re_r, const mpq_class& re_s,
                           const mpq_class& im_r, const mpq_class& im_s);

    const mpq_class& re_r() const { return re_r_; }
    const mpq_class& re_s() const { return re_s_; }
    const mpq_class& im_r() const { return im_r_; }
    const mpq_class& im_s() const { return im_s_; }

    bool is_zero() const;
    bool is_rational() const; // no sqrt2 and no imaginary component

    ExtScalar operator-() const;
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { a += b; return a; }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { a -= b; return a; }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
    ExtScalar& operator*=(const ExtScalar& o) { *this = *this * o; return *this; }

    // Exact field inverse; throws std::domain_error on zero.
    ExtScalar inverse() const;
    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * b.inverse(); }

    ExtScalar times_i() const; // multiply by the imaginary unit
    ExtScalar conjugate() const;

    bool operator==(const ExtScalar& o) const;
    bool operator!=(const ExtScalar& o) const { return !(*this == o); }

    std::string str() const;
    // Parses the full textual grammar; throws ParseError on bad input.
    static ExtScalar parse(std::string_view text);

private:
    mpq_class re_r_{0}, re_s_{0}, im_r_{0}, im_s_{0};
};

// Canonical rational from a num/den pair (gmp does not canonicalize these).
mpq_class make_q(long num, long den);
mpq_class q_pow(const mpq_class& base, unsigned n);

} // namespace lienorm
