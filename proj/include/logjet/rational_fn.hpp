#ifndef LOGJET_RATIONAL_FN_HPP
#define LOGJET_RATIONAL_FN_HPP

#include "logjet/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace logjet {

// Normalized quotient of two polynomials. Normalization cancels the common
// monomial content, makes the denominator have content 1 with positive
// leading coefficient, and cancels the denominator entirely when it divides
// the numerator exactly (trial division). No multivariate gcd is attempted.
class RationalFn {
public:
    RationalFn() : num_(), den_(Polynomial::constant(Scalar(1))) {}
    RationalFn(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(Scalar(1))) {
        normalize();
    }
    RationalFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
        normalize();
    }
    static RationalFn constant(Scalar c) { return RationalFn(Polynomial::constant(std::move(c))); }
    static RationalFn variable(const VarId& v, int exp = 1) {
        return RationalFn(Polynomial::variable(v, exp));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Polynomial::constant(Scalar(1)); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        if (a.den_ == b.den_) return RationalFn(a.num_ - b.num_, a.den_);
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFn operator-() const {
        RationalFn out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.num_.is_zero()) throw std::domain_error("RationalFn: division by zero");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    RationalFn pow(unsigned e) const {
        RationalFn out = RationalFn::constant(Scalar(1));
        RationalFn base = *this;
        while (e != 0) {
            if (e & 1u) out = out * base;
            if (e >>= 1u) base = base * base;
        }
        return out;
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Scalar eval(const std::map<VarId, Scalar>& point) const {
        Scalar d = den_.eval(point);
        if (d == 0) throw std::domain_error("RationalFn: denominator vanishes at the point");
        return num_.eval(point) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(Scalar(1));
            return;
        }
        Monomial common = num_.monomial_content().gcd(den_.monomial_content());
        if (!common.is_one()) {
            Polynomial cm = Polynomial::monomial(common, Scalar(1));
            num_ = *num_.divide_exact(cm);
            den_ = *den_.divide_exact(cm);
        }
        Scalar dc = den_.content();  // carries the leading-coefficient sign
        if (dc != 1) {
            num_ = num_ * (Scalar(1) / dc);
            den_ = den_ * (Scalar(1) / dc);
        }
        if (!den_.is_constant()) {
            if (auto q = num_.divide_exact(den_)) {
                num_ = std::move(*q);
                den_ = Polynomial::constant(Scalar(1));
            }
        }
    }

    Polynomial num_;
    Polynomial den_;
};

// Substitution of rational functions into a polynomial; variables absent from
// sigma stay themselves. The result's denominator divides a product of the
// sigma denominators.
inline RationalFn substitute(const Polynomial& p, const std::map<VarId, RationalFn>& sigma) {
    RationalFn out;
    for (const auto& [m, c] : p.terms()) {
        RationalFn term = RationalFn::constant(c);
        Monomial untouched;
        for (const auto& [v, e] : m.factors()) {
            auto it = sigma.find(v);
            if (it == sigma.end()) {
                untouched = untouched.times(Monomial::variable(v, e));
            } else {
                term = term * it->second.pow(static_cast<unsigned>(e));
            }
        }
        term = term * RationalFn(Polynomial::monomial(untouched, Scalar(1)));
        out = out + term;
    }
    return out;
}

inline RationalFn substitute(const RationalFn& f, const std::map<VarId, RationalFn>& sigma) {
    return substitute(f.num(), sigma) / substitute(f.den(), sigma);
}

}  // namespace logjet

#endif
