#pragma once

#include "qhgamma/errors.hpp"
#include "qhgamma/rational.hpp"

namespace qhgamma {

/// Exponent of the Novikov variable t, affine in the area parameter mu:
/// const_part + mu_coeff * mu. The exponent lattice of every computation in
/// this toolkit lives here; quantities that depend on mu nonlinearly are
/// evaluated to exact rationals before they enter an exponent.
struct AffineExponent {
    Rational const_part{0};
    Rational mu_coeff{0};

    AffineExponent() = default;
    AffineExponent(Rational c, Rational m) : const_part(std::move(c)), mu_coeff(std::move(m)) {}

    friend bool operator==(const AffineExponent& a, const AffineExponent& b) {
        return a.const_part == b.const_part && a.mu_coeff == b.mu_coeff;
    }
    friend bool operator!=(const AffineExponent& a, const AffineExponent& b) { return !(a == b); }

    AffineExponent operator+(const AffineExponent& o) const {
        return {const_part + o.const_part, mu_coeff + o.mu_coeff};
    }
    AffineExponent operator-(const AffineExponent& o) const {
        return {const_part - o.const_part, mu_coeff - o.mu_coeff};
    }
    AffineExponent operator-() const { return {-const_part, -mu_coeff}; }
    AffineExponent operator*(const Rational& s) const { return {const_part * s, mu_coeff * s}; }
};

/// const_part + mu_coeff * mu, exactly. mu must be positive.
inline Rational exp_eval(const AffineExponent& e, const Rational& mu) {
    if (mu <= 0) throw InvalidParameterError("exp_eval: mu must be positive");
    Rational v = e.const_part + e.mu_coeff * mu;
    return v;
}

/// "b*mu+a" rendering, e.g. "6*mu+4", "-2*mu+3", "1/2", "0".
inline std::string to_string(const AffineExponent& e) {
    if (e.mu_coeff == 0) return to_string(e.const_part);
    std::string s;
    if (e.mu_coeff == 1) {
        s = "mu";
    } else if (e.mu_coeff == -1) {
        s = "-mu";
    } else {
        s = to_string(e.mu_coeff) + "*mu";
    }
    if (e.const_part > 0) {
        s += "+" + to_string(e.const_part);
    } else if (e.const_part < 0) {
        s += to_string(e.const_part);
    }
    return s;
}

}  // namespace qhgamma
