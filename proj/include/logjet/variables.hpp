#ifndef LOGJET_VARIABLES_HPP
#define LOGJET_VARIABLES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace logjet {

// Bivariate multi-index (alpha_1, alpha_2) used for curve coefficients a_alpha
// and for indexing the z1/z2 monomial blocks of the tangency systems.
class MultiIndex {
public:
    constexpr MultiIndex() = default;
    constexpr MultiIndex(int a1, int a2) : a1_(a1), a2_(a2) {
        if (a1 < 0 || a2 < 0) throw std::domain_error("MultiIndex: negative component");
    }

    constexpr int operator[](int j) const {
        if (j == 1) return a1_;
        if (j == 2) return a2_;
        throw std::out_of_range("MultiIndex: component must be 1 or 2");
    }
    constexpr int total() const { return a1_ + a2_; }

    // alpha + delta_j
    constexpr MultiIndex plus_delta(int j, int amount = 1) const {
        return j == 1 ? MultiIndex(a1_ + amount, a2_) : MultiIndex(a1_, a2_ + amount);
    }
    // alpha - delta_j; only defined when alpha_j >= amount.
    constexpr MultiIndex minus_delta(int j, int amount = 1) const {
        int c = (*this)[j] - amount;
        if (c < 0) throw std::domain_error("MultiIndex: subtraction below zero");
        return j == 1 ? MultiIndex(c, a2_) : MultiIndex(a1_, c);
    }
    constexpr bool leq_componentwise(const MultiIndex& o) const {
        return a1_ <= o.a1_ && a2_ <= o.a2_;
    }
    constexpr MultiIndex minus(const MultiIndex& o) const {
        if (!o.leq_componentwise(*this)) throw std::domain_error("MultiIndex: subtraction below zero");
        return MultiIndex(a1_ - o.a1_, a2_ - o.a2_);
    }
    constexpr MultiIndex plus(const MultiIndex& o) const { return MultiIndex(a1_ + o.a1_, a2_ + o.a2_); }

    friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const { return "(" + std::to_string(a1_) + "," + std::to_string(a2_) + ")"; }

private:
    int a1_ = 0;
    int a2_ = 0;
};

// Typed variable alphabet. The total order below is the canonical one used for
// the monomial order and for printing; it is fixed and documented:
//
//   Coord(i)           z_i, increasing i            (smallest kind)
//   Coeff(c, alpha)    a_alpha resp. a^(c)_alpha, by (c, alpha lexicographic)
//   Jet(j, k)          xi_j^(k), by (j, k)
//   HatJet(j, k)       xihat_j^(k), by (j, k)
//   Param(name)        formal symbols, by name      (largest kind)
enum class VarKind : std::uint8_t { Coord = 0, Coeff, Jet, HatJet, Param };

class VarId {
public:
    static VarId coord(int i) {
        check_range(i, 1, 4, "coordinate index");
        return VarId(VarKind::Coord, i, 0, 0, {});
    }
    static VarId coeff(int component, MultiIndex alpha) {
        check_range(component, 1, 2, "coefficient component");
        return VarId(VarKind::Coeff, component, alpha[1], alpha[2], {});
    }
    static VarId coeff(MultiIndex alpha) { return coeff(1, alpha); }
    static VarId jet(int j, int k) {
        check_range(j, 1, 4, "jet direction");
        check_range(k, 1, 4, "jet order");
        return VarId(VarKind::Jet, j, k, 0, {});
    }
    static VarId hat_jet(int j, int k) {
        check_range(j, 1, 4, "jet direction");
        check_range(k, 1, 4, "jet order");
        return VarId(VarKind::HatJet, j, k, 0, {});
    }
    static VarId param(std::string name) {
        if (name.empty()) throw std::invalid_argument("VarId: empty parameter name");
        return VarId(VarKind::Param, 0, 0, 0, std::move(name));
    }

    VarKind kind() const { return kind_; }
    int coord_index() const { return a_; }
    int component() const { return a_; }
    MultiIndex alpha() const { return MultiIndex(b_, c_); }
    int direction() const { return a_; }  // j of xi_j^(k)
    int order() const { return b_; }      // k of xi_j^(k)
    const std::string& name() const { return name_; }

    friend bool operator==(const VarId& x, const VarId& y) = default;
    friend std::strong_ordering operator<=>(const VarId& x, const VarId& y) {
        return std::tie(x.kind_, x.a_, x.b_, x.c_, x.name_) <=>
               std::tie(y.kind_, y.a_, y.b_, y.c_, y.name_);
    }

    std::string str() const {
        switch (kind_) {
            case VarKind::Coord:
                return "z" + std::to_string(a_);
            case VarKind::Coeff:
                if (a_ == 1) return "a(" + std::to_string(b_) + "," + std::to_string(c_) + ")";
                return "a(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
            case VarKind::Jet:
                return "xi(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case VarKind::HatJet:
                return "xih(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
            case VarKind::Param:
                return name_;
        }
        return "?";
    }

private:
    VarId(VarKind kind, int a, int b, int c, std::string name)
        : kind_(kind), a_(a), b_(b), c_(c), name_(std::move(name)) {}

    static void check_range(int v, int lo, int hi, const char* what) {
        if (v < lo || v > hi)
            throw std::domain_error(std::string("VarId: ") + what + " out of range: " + std::to_string(v));
    }

    VarKind kind_;
    int a_;
    int b_;
    int c_;
    std::string name_;  // Param only
};

// Pole-order weight at infinity: z carries weight 1, xi^(k) weight k+1.
// Coefficient and parameter variables are weightless (the twist on the
// parameter-space factor is unconstrained).
inline int pole_weight(const VarId& v) {
    switch (v.kind()) {
        case VarKind::Coord: return 1;
        case VarKind::Jet:
        case VarKind::HatJet: return v.order() + 1;
        default: return 0;
    }
}

// Jet weight used for the weighted homogeneity of the jet-space equations:
// xi^(k) has weight k, everything else weight 0.
inline int jet_weight(const VarId& v) {
    if (v.kind() == VarKind::Jet || v.kind() == VarKind::HatJet) return v.order();
    return 0;
}

}  // namespace logjet

#endif
