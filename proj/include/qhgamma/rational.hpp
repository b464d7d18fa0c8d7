#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qhgamma {

/// Exact rational number. No floating point anywhere in the kernel.
using Rational = mpq_class;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "a", "-a", "a/b" (decimal digits) into a canonical rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// "num/den" in lowest terms, or just "num" for integers.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

/// Floor division for machine integers, well-defined for negative a.
inline long floordiv(long a, long b) {
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

/// Mathematical modulus: result in [0, b) for b > 0.
inline long imod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

inline Rational rfloor(const Rational& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(z);
}

inline Rational rceil(const Rational& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(z);
}

/// Fixed-point decimal rendering (display only; used by the SVG emitter).
inline std::string to_decimal(const Rational& q, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = q.get_num() * scale;
    mpz_class scaled;
    // round half away from zero
    mpz_class den = q.get_den();
    mpz_class twice = 2 * num + (num >= 0 ? den : -den);
    mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    bool neg = scaled < 0;
    mpz_class mag = abs(scaled);
    mpz_class whole = mag / scale;
    mpz_class frac = mag % scale;
    std::string f = digits > 0 ? frac.get_str() : std::string();
    if (f.size() < static_cast<size_t>(digits))
        f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (!f.empty()) out += "." + f;
    return out;
}

}  // namespace qhgamma
