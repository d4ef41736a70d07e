#ifndef LOGJET_UNIVARIATE_HPP
#define LOGJET_UNIVARIATE_HPP

#include "logjet/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace logjet {

inline bool is_univariate_in(const Polynomial& p, const VarId& v) {
    for (const auto& var : p.variables())
        if (!(var == v)) return false;
    return true;
}

// The single variable occurring in any of the given polynomials, nullopt if
// all are constant. Throws if more than one variable occurs.
inline std::optional<VarId> common_variable(const std::vector<Polynomial>& ps) {
    std::optional<VarId> found;
    for (const auto& p : ps) {
        for (const auto& v : p.variables()) {
            if (!found) {
                found = v;
            } else if (!(*found == v)) {
                throw std::domain_error("univariate: polynomials involve more than one variable (" +
                                        found->str() + ", " + v.str() + ")");
            }
        }
    }
    return found;
}

// Dense coefficient vector c[0..deg], c[k] the coefficient of v^k.
inline std::vector<Scalar> to_dense(const Polynomial& p, const VarId& v) {
    if (!is_univariate_in(p, v)) throw std::domain_error("to_dense: not univariate in " + v.str());
    std::vector<Scalar> c(static_cast<std::size_t>(p.degree_in(v)) + 1, Scalar(0));
    for (const auto& [m, coef] : p.terms()) c[static_cast<std::size_t>(m.exponent(v))] = coef;
    return c;
}

inline Polynomial from_dense(const std::vector<Scalar>& c, const VarId& v) {
    Polynomial p;
    for (std::size_t k = 0; k < c.size(); ++k)
        p.add_term(Monomial::variable(v, static_cast<int>(k)), c[k]);
    return p;
}

struct UnivariateDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline UnivariateDivMod divmod_univariate(const Polynomial& a, const Polynomial& b, const VarId& v) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<Scalar> r = to_dense(a, v);
    std::vector<Scalar> d = to_dense(b, v);
    while (!d.empty() && d.back() == 0) d.pop_back();
    std::vector<Scalar> q(r.size(), Scalar(0));
    while (r.size() >= d.size() && !(r.size() == 1 && r[0] == 0)) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < d.size() || r.empty()) break;
        std::size_t shift = r.size() - d.size();
        Scalar factor = r.back() / d.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= factor * d[i];
    }
    return {from_dense(q, v), from_dense(r, v)};
}

inline Polynomial make_monic(const Polynomial& p, const VarId& v) {
    if (p.is_zero()) return p;
    std::vector<Scalar> c = to_dense(p, v);
    Scalar lead = c.back();
    return p * (Scalar(1) / lead);
}

// Monic greatest common divisor of two polynomials univariate in the same
// variable. gcd(p, 0) is the monic multiple of p; gcd(0, 0) = 0.
inline Polynomial gcd_univariate(Polynomial a, Polynomial b) {
    auto var = common_variable({a, b});
    if (!var) {
        // both constant
        if (a.is_zero() && b.is_zero()) return Polynomial();
        return Polynomial::constant(Scalar(1));
    }
    const VarId v = *var;
    while (!b.is_zero()) {
        Polynomial r = divmod_univariate(a, b, v).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    if (a.is_constant()) return Polynomial::constant(Scalar(1));
    return make_monic(a, v);
}

struct BezoutCertificate {
    Polynomial gcd;
    Polynomial s;  // s*a + t*b == gcd
    Polynomial t;
};

inline BezoutCertificate ext_gcd_univariate(const Polynomial& a, const Polynomial& b) {
    auto var = common_variable({a, b});
    if (!var) {
        if (!a.is_zero()) return {Polynomial::constant(Scalar(1)),
                                  Polynomial::constant(Scalar(1) / a.constant_value()), Polynomial()};
        if (!b.is_zero()) return {Polynomial::constant(Scalar(1)), Polynomial(),
                                  Polynomial::constant(Scalar(1) / b.constant_value())};
        return {Polynomial(), Polynomial(), Polynomial()};
    }
    const VarId v = *var;
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Scalar(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod_univariate(r0, r1, v);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
    Scalar lead = r0.is_constant() ? r0.constant_value() : to_dense(r0, v).back();
    Scalar inv = Scalar(1) / lead;
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace logjet

#endif
