#ifndef LOGJET_POLYNOMIAL_HPP
#define LOGJET_POLYNOMIAL_HPP

#include "logjet/scalar.hpp"
#include "logjet/variables.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace logjet {

// A monomial: finite product of variables with positive exponents, kept as a
// vector sorted by the canonical VarId order.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial variable(const VarId& v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw std::domain_error("Monomial: negative exponent");
        if (exp > 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    int exponent(const VarId& v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, const VarId& w) { return f.first < w; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    // Sum of weight(v) * exponent over all factors.
    int weighted_degree(const std::function<int(const VarId&)>& weight) const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += weight(v) * e;
        return d;
    }

    // Total degree over the variables selected by `pred`.
    int degree_where(const std::function<bool(const VarId&)>& pred) const {
        int d = 0;
        for (const auto& [v, e] : factors_)
            if (pred(v)) d += e;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
                out.factors_.push_back(*a++);
            } else if (a == factors_.end() || b->first < a->first) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return out;
    }

    // Exact division; nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial out;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (b != o.factors_.end()) {
            if (a == factors_.end() || b->first < a->first) return std::nullopt;
            if (a->first < b->first) {
                out.factors_.push_back(*a++);
                continue;
            }
            if (a->second < b->second) return std::nullopt;
            if (a->second > b->second) out.factors_.emplace_back(a->first, a->second - b->second);
            ++a;
            ++b;
        }
        out.factors_.insert(out.factors_.end(), a, factors_.end());
        return out;
    }

    // Componentwise minimum of exponents (gcd of monomials).
    Monomial gcd(const Monomial& o) const {
        Monomial out;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first) {
                ++a;
            } else if (b->first < a->first) {
                ++b;
            } else {
                out.factors_.emplace_back(a->first, std::min(a->second, b->second));
                ++a;
                ++b;
            }
        }
        return out;
    }

    // Split into (part over variables selected by pred, remaining part).
    std::pair<Monomial, Monomial> split(const std::function<bool(const VarId&)>& pred) const {
        Monomial sel, rest;
        for (const auto& f : factors_) (pred(f.first) ? sel : rest).factors_.push_back(f);
        return {sel, rest};
    }

    // Canonical monomial order: pure lexicographic on the fixed VarId order.
    // Walking the variables in increasing VarId order, the first position
    // where the exponents differ decides; the larger exponent wins.
    friend std::strong_ordering lex_order(const Monomial& x, const Monomial& y) {
        auto a = x.factors_.begin(), b = y.factors_.begin();
        while (a != x.factors_.end() && b != y.factors_.end()) {
            if (a->first < b->first) return std::strong_ordering::greater;  // y has exponent 0 here
            if (b->first < a->first) return std::strong_ordering::less;
            if (a->second != b->second)
                return a->second < b->second ? std::strong_ordering::less : std::strong_ordering::greater;
            ++a;
            ++b;
        }
        if (a != x.factors_.end()) return std::strong_ordering::greater;
        if (b != y.factors_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors_ == y.factors_; }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [v, e] : factors_) {
            if (!out.empty()) out += "*";
            out += v.str();
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::vector<Factor> factors_;
};

// Descending lex order, so the map's first entry is the leading term.
struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_order(a, b) == std::strong_ordering::greater;
    }
};

// Canonical sparse multivariate polynomial over Scalar: a term map with no
// zero coefficients and no zero exponents. Equality is structural.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLexGreater>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Scalar c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
        return p;
    }
    static Polynomial variable(const VarId& v, int exp = 1) {
        return monomial(Monomial::variable(v, exp), Scalar(1));
    }
    static Polynomial monomial(Monomial m, Scalar c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
        return terms_.begin()->second;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: zero has no leading term");
        return terms_.begin()->first;
    }
    const Scalar& leading_coefficient() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: zero has no leading term");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& p, const Scalar& s) {
        if (s == 0) return Polynomial();
        Polynomial out(p);
        for (auto& [m, c] : out.terms_) c *= s;
        return out;
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& p) { return p * s; }
    Polynomial& operator*=(const Scalar& s) { return *this = *this * s; }

    Polynomial pow(unsigned e) const {
        Polynomial result = Polynomial::constant(Scalar(1));
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1u) result = result * base;
            if (e >>= 1u) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Formal partial derivative.
    Polynomial partial(const VarId& v) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            Monomial dm = *m.divide(Monomial::variable(v));
            out.add_term(dm, c * e);
        }
        return out;
    }

    std::set<VarId> variables() const {
        std::set<VarId> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) vars.insert(v);
        return vars;
    }

    int degree_in(const VarId& v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    int degree_where(const std::function<bool(const VarId&)>& pred) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_where(pred));
        return d;
    }
    int weighted_degree(const std::function<int(const VarId&)>& weight) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree(weight));
        return d;
    }

    // Exact evaluation. Every variable of the polynomial must be assigned.
    Scalar eval(const std::map<VarId, Scalar>& point) const {
        Scalar total(0);
        for (const auto& [m, c] : terms_) {
            Scalar term = c;
            for (const auto& [v, e] : m.factors()) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::domain_error("eval: no value for variable " + v.str());
                term *= scalar_pow(it->second, static_cast<unsigned>(e));
            }
            total += term;
        }
        return total;
    }

    // Polynomial substitution; variables absent from the map stay themselves.
    Polynomial substitute_poly(const std::map<VarId, Polynomial>& sigma) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial term = Polynomial::constant(c);
            Monomial untouched;
            for (const auto& [v, e] : m.factors()) {
                auto it = sigma.find(v);
                if (it == sigma.end()) {
                    untouched = untouched.times(Monomial::variable(v, e));
                } else {
                    term = term * it->second.pow(static_cast<unsigned>(e));
                }
            }
            out += term * Polynomial::monomial(untouched, Scalar(1));
        }
        return out;
    }

    // Group terms by their sub-monomial over the variables selected by pred:
    // p = sum over keys of key * value, where keys involve only selected
    // variables and values only unselected ones.
    std::map<Monomial, Polynomial, MonomialLexGreater> collect(
        const std::function<bool(const VarId&)>& pred) const {
        std::map<Monomial, Polynomial, MonomialLexGreater> groups;
        for (const auto& [m, c] : terms_) {
            auto [sel, rest] = m.split(pred);
            groups[sel].add_term(rest, c);
        }
        return groups;
    }

    // Coefficient of the monomial `key` (over selected variables) in the
    // grouping above.
    Polynomial coefficient_of(const Monomial& key, const std::function<bool(const VarId&)>& pred) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            auto [sel, rest] = m.split(pred);
            if (sel == key) out.add_term(rest, c);
        }
        return out;
    }

    // Rational content: gcd of numerators over lcm of denominators, sign of
    // the leading coefficient. p / content(p) has coprime integer coefficients
    // and positive leading coefficient. content(0) = 0.
    Scalar content() const {
        if (terms_.empty()) return Scalar(0);
        Scalar g(0);
        for (const auto& [m, c] : terms_) g = scalar_gcd(g, c);
        if (leading_coefficient() < 0) g = -g;
        return g;
    }

    // Componentwise-min monomial over all terms (one() for constants/zero).
    Monomial monomial_content() const {
        if (terms_.empty()) return Monomial::one();
        auto it = terms_.begin();
        Monomial g = it->first;
        for (++it; it != terms_.end(); ++it) {
            g = g.gcd(it->first);
            if (g.is_one()) break;
        }
        return g;
    }

    // Exact multivariate division: returns q with *this == q * g, or nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial& g) const {
        if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
        Polynomial r = *this;
        Polynomial q;
        const Monomial& gl = g.leading_monomial();
        const Scalar& gc = g.leading_coefficient();
        while (!r.is_zero()) {
            auto mq = r.leading_monomial().divide(gl);
            if (!mq) return std::nullopt;
            Scalar cq = r.leading_coefficient() / gc;
            Polynomial t = Polynomial::monomial(*mq, cq);
            q += t;
            r -= t * g;
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Scalar a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (m.is_one()) {
                out << to_string(a);
            } else if (a == 1) {
                out << m.str();
            } else {
                out << to_string(a) << "*" << m.str();
            }
            first = false;
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    TermMap terms_;
};

inline Polynomial operator*(const Polynomial& p, const Monomial& m) {
    return p * Polynomial::monomial(m, Scalar(1));
}

}  // namespace logjet

#endif
