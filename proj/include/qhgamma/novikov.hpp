#pragma once

#include "qhgamma/affine.hpp"
#include "qhgamma/errors.hpp"
#include "qhgamma/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qhgamma {

/// One monomial c * q^d * t^kappa of a Novikov scalar. The map key is the
/// exponent kappa evaluated at the fixed mu; the tag remembers its affine
/// form a + b*mu when that is still unambiguous. Terms whose distinct affine
/// forms collide at a non-generic mu merge into a single term with tag and
/// q-degree degraded to "mixed" (nullopt).
struct NovikovTerm {
    Rational coeff;
    std::optional<AffineExponent> tag;
    std::optional<long> q_exp;
};

/// Finite truncated generalized Laurent series over Q at a fixed rational
/// mu > 0: finitely many terms, all with evaluated exponent >= floor.
/// Immutable in spirit: operations are pure and return fresh values.
class NovikovScalar {
public:
    /// Leading (maximum-exponent) term first.
    using TermMap = std::map<Rational, NovikovTerm, std::greater<Rational>>;

    NovikovScalar(Rational mu, Rational floor) : mu_(std::move(mu)), floor_(std::move(floor)) {
        if (mu_ <= 0) throw InvalidParameterError("NovikovScalar: mu must be positive");
    }

    static NovikovScalar zero(const Rational& mu, const Rational& floor) {
        return NovikovScalar(mu, floor);
    }
    static NovikovScalar constant(const Rational& c, const Rational& mu, const Rational& floor) {
        return monomial(c, AffineExponent{0, 0}, 0, mu, floor);
    }
    static NovikovScalar one(const Rational& mu, const Rational& floor) {
        return constant(1, mu, floor);
    }
    static NovikovScalar monomial(const Rational& coeff, const AffineExponent& e, long q_exp,
                                  const Rational& mu, const Rational& floor) {
        NovikovScalar s(mu, floor);
        if (coeff != 0) {
            Rational key = exp_eval(e, mu);
            if (key >= floor) s.terms_.emplace(std::move(key), NovikovTerm{coeff, e, q_exp});
        }
        return s;
    }

    const Rational& mu() const { return mu_; }
    const Rational& floor() const { return floor_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True once any merge in this value's history combined terms whose
    /// affine tags disagreed -- the signature of a non-generic mu.
    bool saw_tie() const { return saw_tie_; }

    /// max { kappa | coefficient != 0 }; nullopt encodes -infinity (zero scalar).
    std::optional<Rational> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    const NovikovTerm* leading() const {
        return terms_.empty() ? nullptr : &terms_.begin()->second;
    }

    /// Copy whose floor is moved (usually lowered); term content unchanged,
    /// terms strictly below the new floor dropped.
    NovikovScalar refloored(const Rational& new_floor) const {
        NovikovScalar out(mu_, new_floor);
        out.saw_tie_ = saw_tie_;
        for (const auto& [k, t] : terms_) {
            if (k >= new_floor) out.terms_.emplace(k, t);
        }
        return out;
    }

    /// Value equality: same mu, same floor, same coefficient per evaluated
    /// exponent. Affine tags and q-degrees are grading/mu metadata (they
    /// degrade under merges) and do not count.
    friend bool operator==(const NovikovScalar& x, const NovikovScalar& y) {
        if (x.mu_ != y.mu_ || x.floor_ != y.floor_) return false;
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = x.terms_.begin();
        auto jt = y.terms_.begin();
        for (; it != x.terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (it->second.coeff != jt->second.coeff) return false;
        }
        return true;
    }
    friend bool operator!=(const NovikovScalar& x, const NovikovScalar& y) { return !(x == y); }

    friend NovikovScalar scalar_add(const NovikovScalar& x, const NovikovScalar& y);
    friend NovikovScalar scalar_mul(const NovikovScalar& x, const NovikovScalar& y);
    friend void scalar_mul_accumulate(NovikovScalar& acc, const NovikovScalar& x,
                                      const NovikovScalar& y);
    friend NovikovScalar scalar_invert(const NovikovScalar& x);

    NovikovScalar operator-() const {
        NovikovScalar out(mu_, floor_);
        out.saw_tie_ = saw_tie_;
        for (const auto& [k, t] : terms_) out.terms_.emplace(k, NovikovTerm{-t.coeff, t.tag, t.q_exp});
        return out;
    }
    NovikovScalar scaled(const Rational& c) const {
        NovikovScalar out(mu_, floor_);
        if (c == 0) return out;
        out.saw_tie_ = saw_tie_;
        for (const auto& [k, t] : terms_) out.terms_.emplace(k, NovikovTerm{c * t.coeff, t.tag, t.q_exp});
        return out;
    }

private:
    /// Shared merge rule: like keys add, unequal tag histories degrade.
    void merge(const Rational& key, const NovikovTerm& t) {
        if (key < floor_ || t.coeff == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, t);
            return;
        }
        NovikovTerm& cur = it->second;
        if (!(cur.tag && t.tag && *cur.tag == *t.tag)) {
            saw_tie_ = true;
            cur.tag = std::nullopt;
        }
        if (!(cur.q_exp && t.q_exp && *cur.q_exp == *t.q_exp)) cur.q_exp = std::nullopt;
        cur.coeff += t.coeff;
        if (cur.coeff == 0) terms_.erase(it);
    }

    static void require_compatible(const NovikovScalar& x, const NovikovScalar& y) {
        if (x.mu_ != y.mu_)
            throw ParameterMismatchError("scalar operands evaluated at different mu");
        if (x.floor_ != y.floor_)
            throw ParameterMismatchError("scalar operands carry different precision floors");
    }

    TermMap terms_;
    Rational mu_;
    Rational floor_;
    bool saw_tie_ = false;
};

inline NovikovScalar scalar_add(const NovikovScalar& x, const NovikovScalar& y) {
    NovikovScalar::require_compatible(x, y);
    NovikovScalar out = x;
    out.saw_tie_ = x.saw_tie_ || y.saw_tie_;
    for (const auto& [k, t] : y.terms_) out.merge(k, t);
    return out;
}

/// acc += x * y without building a temporary product scalar.
inline void scalar_mul_accumulate(NovikovScalar& acc, const NovikovScalar& x,
                                  const NovikovScalar& y) {
    NovikovScalar::require_compatible(x, y);
    NovikovScalar::require_compatible(acc, x);
    acc.saw_tie_ = acc.saw_tie_ || x.saw_tie_ || y.saw_tie_;
    for (const auto& [kx, tx] : x.terms_) {
        for (const auto& [ky, ty] : y.terms_) {
            Rational key = kx + ky;
            if (key < x.floor_) break;  // y is sorted descending: the rest only sinks lower
            NovikovTerm t;
            t.coeff = tx.coeff * ty.coeff;
            if (tx.tag && ty.tag) t.tag = *tx.tag + *ty.tag;
            if (tx.q_exp && ty.q_exp) t.q_exp = *tx.q_exp + *ty.q_exp;
            acc.merge(key, t);
        }
    }
}

/// Convolution with exponent addition; affine tags add componentwise and
/// "mixed" is absorbing; products falling below the floor are dropped.
inline NovikovScalar scalar_mul(const NovikovScalar& x, const NovikovScalar& y) {
    NovikovScalar out(x.mu_, x.floor_);
    scalar_mul_accumulate(out, x, y);
    return out;
}

/// Inverse to working precision. Factor the leading monomial c*t^g out of x,
/// so x = c*t^g (1 - r) with val(r) < 0, and accumulate the expansion of
/// sum r^k until every exponent falls below the floor; organised as long
/// division of 1 by x, which produces the identical series term by term.
/// val(result) = -val(x) exactly.
inline NovikovScalar scalar_invert(const NovikovScalar& x) {
    if (x.is_zero()) throw NotInvertibleError("cannot invert the zero scalar");
    const Rational g = x.terms_.begin()->first;
    const NovikovTerm& lead = x.terms_.begin()->second;
    const Rational rem_floor = x.floor_ + g;  // remainder terms below this cannot reach the quotient

    NovikovScalar out(x.mu_, x.floor_);
    out.saw_tie_ = x.saw_tie_;

    NovikovScalar rem = NovikovScalar::one(x.mu_, x.floor_);
    rem.floor_ = rem_floor;  // internal working floor for the running remainder

    while (!rem.terms_.empty()) {
        const Rational& kr = rem.terms_.begin()->first;
        const NovikovTerm hr = rem.terms_.begin()->second;
        Rational eq = kr - g;
        if (eq < x.floor_) break;

        NovikovTerm q;
        q.coeff = hr.coeff / lead.coeff;
        if (hr.tag && lead.tag) q.tag = *hr.tag - *lead.tag;
        if (hr.q_exp && lead.q_exp) q.q_exp = *hr.q_exp - *lead.q_exp;
        out.terms_.emplace(eq, q);  // quotient exponents strictly decrease

        // rem -= q * x; the leading term cancels exactly
        for (const auto& [kx, tx] : x.terms_) {
            Rational key = eq + kx;
            if (key < rem_floor) break;
            NovikovTerm t;
            t.coeff = -q.coeff * tx.coeff;
            if (q.tag && tx.tag) t.tag = *q.tag + *tx.tag;
            if (q.q_exp && tx.q_exp) t.q_exp = *q.q_exp + *tx.q_exp;
            rem.merge(key, t);
        }
        out.saw_tie_ = out.saw_tie_ || rem.saw_tie_;
    }
    return out;
}

inline std::optional<Rational> valuation(const NovikovScalar& x) { return x.valuation(); }

inline NovikovScalar operator+(const NovikovScalar& x, const NovikovScalar& y) {
    return scalar_add(x, y);
}
inline NovikovScalar operator-(const NovikovScalar& x, const NovikovScalar& y) {
    return scalar_add(x, -y);
}
inline NovikovScalar operator*(const NovikovScalar& x, const NovikovScalar& y) {
    return scalar_mul(x, y);
}

/// k-fold product; k = 0 gives 1, k < 0 inverts first.
inline NovikovScalar scalar_pow(const NovikovScalar& x, long k) {
    if (k < 0) return scalar_pow(scalar_invert(x), -k);
    NovikovScalar acc = NovikovScalar::one(x.mu(), x.floor());
    for (long i = 0; i < k; ++i) acc = scalar_mul(acc, x);
    return acc;
}

inline std::string to_string(const NovikovScalar& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, t] : x.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        Rational a = abs(c);
        bool unit_coeff = (a == 1) && !(k == 0 && (!t.q_exp || *t.q_exp == 0));
        if (!unit_coeff) s += to_string(a);
        if (t.q_exp && *t.q_exp != 0) {
            if (!unit_coeff) s += "*";
            s += "q^" + std::to_string(*t.q_exp);
            unit_coeff = false;
        }
        if (k != 0) {
            if (!unit_coeff) s += "*";
            s += "t^(" + to_string(k) + ")";
            if (t.tag && t.tag->mu_coeff != 0) s += "[" + to_string(*t.tag) + "]";
        }
    }
    return s;
}

}  // namespace qhgamma
