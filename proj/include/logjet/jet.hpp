#ifndef LOGJET_JET_HPP
#define LOGJET_JET_HPP

#include "logjet/polynomial.hpp"
#include "logjet/rational_fn.hpp"
#include "logjet/rng.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace logjet {

// Jet orders are capped at 4; the constructions only need 2 but the
// coordinate transforms are exercised up to the cap.
inline constexpr int kMaxJetOrder = 4;

inline void check_jet_order(int k) {
    if (k < 1 || k > kMaxJetOrder)
        throw std::domain_error("jet order must be in 1.." + std::to_string(kMaxJetOrder));
}

// Total derivative along a parametrized curve, in standard jet coordinates:
// D(z_j) = xihat_j^(1), D(xihat_j^(i)) = xihat_j^(i+1), coefficients inert.
inline Polynomial total_derivative(const Polynomial& p) {
    Polynomial out;
    for (const VarId& v : p.variables()) {
        Polynomial dp = p.partial(v);
        if (dp.is_zero()) continue;
        if (v.kind() == VarKind::Coord) {
            out += dp * Polynomial::variable(VarId::hat_jet(v.coord_index(), 1));
        } else if (v.kind() == VarKind::HatJet) {
            if (v.order() + 1 > kMaxJetOrder)
                throw std::domain_error("total_derivative: jet order cap exceeded");
            out += dp * Polynomial::variable(VarId::hat_jet(v.direction(), v.order() + 1));
        }
        // Coeff and Param variables are constants along the curve.
    }
    return out;
}

// [D^1 F, ..., D^k F] for a polynomial F in coordinates and coefficients.
inline std::vector<Polynomial> prolong(const Polynomial& f, int k) {
    check_jet_order(k);
    for (const VarId& v : f.variables())
        if (v.kind() == VarKind::Jet || v.kind() == VarKind::HatJet)
            throw std::domain_error("prolong: input already involves jet variables");
    std::vector<Polynomial> out;
    Polynomial cur = f;
    for (int i = 1; i <= k; ++i) {
        cur = total_derivative(cur);
        out.push_back(cur);
    }
    return out;
}

// Coordinate change between logarithmic jets xi_j^(k) (derivatives taken
// through dz_j/z_j along divisor directions) and standard jets xihat_j^(k).
// For a divisor direction, xihat^(i) = z * B_i(xi^(1)..xi^(i)) where B_i is
// produced by formally differentiating z = exp(w) with w^(i) |-> xi^(i); the
// inverse is obtained by triangular back-substitution.
struct LogChartTransform {
    int order = 0;
    std::set<int> divisor_vars;                // coordinate indices carrying dz/z
    std::map<VarId, Polynomial> forward;       // HatJet -> polynomial in (z, Jet)
    std::map<VarId, RationalFn> inverse;       // Jet -> rational in (z, HatJet)

    std::map<VarId, RationalFn> forward_as_rational() const {
        std::map<VarId, RationalFn> out;
        for (const auto& [v, p] : forward) out.emplace(v, RationalFn(p));
        return out;
    }
};

// The Bell-type polynomials B_i with B_i = xi^(i) + g_i(xi^(1)..xi^(i-1)),
// computed by the derivation xi^(i) -> xi^(i+1) rather than from tables:
// z^(i) = z * B_i  and  z^(i+1) = z * (xi^(1) B_i + D B_i).
inline std::vector<Polynomial> log_jet_bell_polynomials(int j, int k) {
    check_jet_order(k);
    std::vector<Polynomial> bell;
    Polynomial cur = Polynomial::variable(VarId::jet(j, 1));
    bell.push_back(cur);
    for (int i = 2; i <= k; ++i) {
        Polynomial derived;
        for (int r = 1; r < i; ++r) {
            derived += cur.partial(VarId::jet(j, r)) * Polynomial::variable(VarId::jet(j, r + 1));
        }
        cur = Polynomial::variable(VarId::jet(j, 1)) * cur + derived;
        bell.push_back(cur);
    }
    return bell;
}

inline LogChartTransform log_transform(int k, const std::set<int>& divisor_vars) {
    check_jet_order(k);
    LogChartTransform t;
    t.order = k;
    t.divisor_vars = divisor_vars;
    for (int j = 1; j <= 4; ++j) {
        bool divisor = divisor_vars.count(j) > 0;
        if (!divisor) {
            for (int i = 1; i <= k; ++i) {
                t.forward.emplace(VarId::hat_jet(j, i), Polynomial::variable(VarId::jet(j, i)));
                t.inverse.emplace(VarId::jet(j, i), RationalFn::variable(VarId::hat_jet(j, i)));
            }
            continue;
        }
        const Polynomial z = Polynomial::variable(VarId::coord(j));
        std::vector<Polynomial> bell = log_jet_bell_polynomials(j, k);
        for (int i = 1; i <= k; ++i) t.forward.emplace(VarId::hat_jet(j, i), z * bell[i - 1]);
        // xi^(i) = xihat^(i)/z - g_i(xi^(1..i-1)), substituting lower orders.
        std::map<VarId, RationalFn> solved;
        for (int i = 1; i <= k; ++i) {
            Polynomial g = bell[i - 1] - Polynomial::variable(VarId::jet(j, i));
            RationalFn expr = RationalFn(Polynomial::variable(VarId::hat_jet(j, i)), z) -
                              substitute(g, solved);
            solved.emplace(VarId::jet(j, i), expr);
        }
        for (int i = 1; i <= k; ++i) t.inverse.emplace(VarId::jet(j, i), solved.at(VarId::jet(j, i)));
    }
    return t;
}

// Vertical logarithmic 2-jet space of the universal curve, in the chart where
// the fibration degenerates along z3 = 0:
//   E1 = z3^d + sum_{|alpha| <= d} a_alpha z^alpha      (z^alpha in z1, z2)
//   E2, E3 = prolongations of E1 rewritten in log jets.
struct JetVarietyPresentation {
    int degree = 0;
    Polynomial e1, e2, e3;

    const Polynomial& equation(int i) const {
        switch (i) {
            case 1: return e1;
            case 2: return e2;
            case 3: return e3;
        }
        throw std::out_of_range("equation index must be 1..3");
    }
};

inline std::vector<MultiIndex> coefficient_indices(int d) {
    std::vector<MultiIndex> idx;
    for (int a1 = 0; a1 <= d; ++a1)
        for (int a2 = 0; a2 + a1 <= d; ++a2) idx.emplace_back(a1, a2);
    return idx;
}

// z^alpha = z1^a1 * z2^a2
inline Monomial z_monomial(const MultiIndex& alpha) {
    return Monomial::variable(VarId::coord(1), alpha[1]).times(Monomial::variable(VarId::coord(2), alpha[2]));
}

// sum_{|alpha| <= d} a_alpha z^alpha
inline Polynomial curve_coefficient_sum(int d) {
    Polynomial f;
    for (const MultiIndex& alpha : coefficient_indices(d))
        f.add_term(z_monomial(alpha).times(Monomial::variable(VarId::coeff(alpha))), Scalar(1));
    return f;
}

inline JetVarietyPresentation universal_jet_equations(int d) {
    if (d < 1) throw std::domain_error("universal_jet_equations: degree must be positive");
    JetVarietyPresentation pres;
    pres.degree = d;
    pres.e1 = Polynomial::variable(VarId::coord(3), d) + curve_coefficient_sum(d);
    std::vector<Polynomial> prolonged = prolong(pres.e1, 2);
    LogChartTransform t = log_transform(2, {3});
    std::map<VarId, Polynomial> fwd(t.forward.begin(), t.forward.end());
    pres.e2 = prolonged[0].substitute_poly(fwd);
    pres.e3 = prolonged[1].substitute_poly(fwd);
    return pres;
}

// The wronskian W12 = det(xi_i^(j))_{1<=i,j<=2}; its vanishing locus is the
// Sigma locus of jets coming from lines.
inline Polynomial wronskian_w12() {
    Polynomial w;
    w.add_term(Monomial::variable(VarId::jet(1, 1)).times(Monomial::variable(VarId::jet(2, 2))), Scalar(1));
    w.add_term(Monomial::variable(VarId::jet(2, 1)).times(Monomial::variable(VarId::jet(1, 2))), Scalar(-1));
    return w;
}

// Exact rational point on {E1 = E2 = E3 = 0} with z3 != 0 and W12 != 0.
// Free data is drawn from the seeded generator; a_(0,0), xi_3^(1), xi_3^(2)
// are then solved from the three equations. Fixed seed, fixed point.
inline std::map<VarId, Scalar> sample_jet_point(const JetVarietyPresentation& pres, std::uint64_t seed) {
    Rng rng(seed);
    const int d = pres.degree;
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::map<VarId, Scalar> pt;
        pt[VarId::coord(1)] = rng.small_scalar();
        pt[VarId::coord(2)] = rng.small_scalar();
        pt[VarId::coord(3)] = rng.small_nonzero_scalar();
        for (const MultiIndex& alpha : coefficient_indices(d))
            if (alpha.total() != 0) pt[VarId::coeff(alpha)] = rng.small_scalar();
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) pt[VarId::jet(j, k)] = rng.small_scalar();
        if (wronskian_w12().eval(pt) == 0) continue;

        // E1 is linear in a_(0,0) with unit coefficient.
        pt[VarId::coeff(MultiIndex(0, 0))] = Scalar(0);
        pt[VarId::coeff(MultiIndex(0, 0))] = -pres.e1.eval(pt);
        // E2 is linear in xi_3^(1) with coefficient d*z3^d != 0.
        Scalar lead = scalar_pow(pt[VarId::coord(3)], static_cast<unsigned>(d)) * Scalar(d);
        pt[VarId::jet(3, 1)] = Scalar(0);
        pt[VarId::jet(3, 1)] = -pres.e2.eval(pt) / lead;
        // E3 is linear in xi_3^(2) with the same leading coefficient.
        pt[VarId::jet(3, 2)] = Scalar(0);
        pt[VarId::jet(3, 2)] = -pres.e3.eval(pt) / lead;
        return pt;
    }
    throw std::runtime_error("sample_jet_point: resampling limit reached");
}

}  // namespace logjet

#endif
