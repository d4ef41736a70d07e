#ifndef LOGJET_LAMBDA_HPP
#define LOGJET_LAMBDA_HPP

#include "logjet/linalg.hpp"
#include "logjet/polynomial.hpp"
#include "logjet/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace logjet {

// The rotation derivation R = sum_{j=1,2} xi_2^(j) d/dxi_3^(j) - xi_3^(j) d/dxi_2^(j)
// acting on polynomials in the jet coordinates at a point; other variables
// ride along as inert parameters.
inline Polynomial apply_rotation(const Polynomial& p) {
    Polynomial out;
    for (int j = 1; j <= 2; ++j) {
        out += Polynomial::variable(VarId::jet(2, j)) * p.partial(VarId::jet(3, j));
        out -= Polynomial::variable(VarId::jet(3, j)) * p.partial(VarId::jet(2, j));
    }
    return out;
}

// Wronskian annihilated by the rotation: xi_2^(1) xi_3^(2) - xi_3^(1) xi_2^(2).
inline Polynomial rotation_wronskian() {
    Polynomial w;
    w.add_term(Monomial::variable(VarId::jet(2, 1)).times(Monomial::variable(VarId::jet(3, 2))), Scalar(1));
    w.add_term(Monomial::variable(VarId::jet(3, 1)).times(Monomial::variable(VarId::jet(2, 2))), Scalar(-1));
    return w;
}

// Monomial bases stable under the rotation. FirstOrderForms(n) is the space
// of degree-n forms in (xi_2^(1), xi_3^(1)); WeightedJets(w) the span of all
// monomials in the four jet coordinates of weighted degree w (weights 1 and 2
// on first and second order jets). Basis order: descending canonical
// monomial order (graded by construction).
struct RotationBasisProfile {
    enum class Kind { FirstOrderForms, WeightedJets } kind;
    int degree;

    static RotationBasisProfile first_order_forms(int n) { return {Kind::FirstOrderForms, n}; }
    static RotationBasisProfile weighted_jets(int w) { return {Kind::WeightedJets, w}; }
};

inline std::vector<Monomial> rotation_basis(const RotationBasisProfile& profile) {
    if (profile.degree < 0) throw std::domain_error("rotation_basis: negative degree");
    std::vector<Monomial> basis;
    if (profile.kind == RotationBasisProfile::Kind::FirstOrderForms) {
        for (int a = profile.degree; a >= 0; --a) {
            basis.push_back(Monomial::variable(VarId::jet(2, 1), a)
                                .times(Monomial::variable(VarId::jet(3, 1), profile.degree - a)));
        }
    } else {
        // exponents (a, b) on first-order jets, (c, e) on second-order ones
        for (int a = 0; a <= profile.degree; ++a)
            for (int b = 0; a + b <= profile.degree; ++b)
                for (int c = 0; a + b + 2 * c <= profile.degree; ++c) {
                    int rem = profile.degree - a - b - 2 * c;
                    if (rem % 2 != 0) continue;
                    int e = rem / 2;
                    basis.push_back(Monomial::variable(VarId::jet(2, 1), a)
                                        .times(Monomial::variable(VarId::jet(3, 1), b))
                                        .times(Monomial::variable(VarId::jet(2, 2), c))
                                        .times(Monomial::variable(VarId::jet(3, 2), e)));
                }
    }
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& x, const Monomial& y) { return MonomialLexGreater()(x, y); });
    return basis;
}

// Matrix of the rotation on the chosen basis, rows-as-images: row i lists the
// coordinates of R(basis_i).
inline Matrix<Scalar> rotation_matrix(const RotationBasisProfile& profile) {
    std::vector<Monomial> basis = rotation_basis(profile);
    Matrix<Scalar> m(basis.size(), basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Polynomial image = apply_rotation(Polynomial::monomial(basis[i], Scalar(1)));
        for (const auto& [mon, coeff] : image.terms()) {
            auto it = std::find(basis.begin(), basis.end(), mon);
            if (it == basis.end())
                throw std::logic_error("rotation_matrix: image leaves the basis span");
            m(i, static_cast<std::size_t>(it - basis.begin())) = coeff;
        }
    }
    return m;
}

// Kernel of the rotation operator on the given graded piece.
inline std::vector<std::vector<Scalar>> rotation_kernel(const RotationBasisProfile& profile) {
    // rows-as-images means the operator matrix is the transpose
    return kernel_basis(rotation_matrix(profile).transposed());
}

// ---------------------------------------------------------------------------
// The lambda-polynomial systems of the weighted-degree argument. The m = 4, 5
// systems are transcriptions; the m = 3 case is the single equation lambda = 0
// together with the obligation that the rotation kernel on degree-3 forms is
// trivial.
// ---------------------------------------------------------------------------

struct LambdaSystem {
    int m = 0;
    std::vector<Polynomial> polys;  // univariate in lam
    bool kernel_obligation = false;
};

inline LambdaSystem lambda_system(int m) {
    const Polynomial lam = Polynomial::variable(VarId::param("lam"));
    auto c = [](long long k) { return Polynomial::constant(Scalar(k)); };
    LambdaSystem sys;
    sys.m = m;
    switch (m) {
        case 3:
            sys.polys = {lam};
            sys.kernel_obligation = true;
            break;
        case 4:
            sys.polys = {lam * lam - c(1), lam * (lam.pow(4) + c(8) * lam + c(16))};
            break;
        case 5:
            sys.polys = {lam * (lam * lam + c(4)),
                         lam * lam * (c(13) + lam * lam).pow(2) + c(9) * (c(5) + lam * lam)};
            break;
        default:
            throw std::domain_error("lambda_system: m must be 3, 4 or 5");
    }
    return sys;
}

struct CoprimalityCertificate {
    bool coprime = false;
    Polynomial gcd;
    std::vector<Polynomial> cofactors;  // sum cofactor_i * poly_i == gcd
};

// gcd of a list of univariate polynomials with Bezout cofactors, folded
// pairwise through the extended Euclidean algorithm. The fold keeps the
// invariant sum cofactor_i * poly_i == gcd, with gcd monic.
inline CoprimalityCertificate coprimality(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw std::domain_error("coprimality: empty system");
    auto var = common_variable(polys);
    CoprimalityCertificate cert;
    cert.gcd = polys[0];
    cert.cofactors = {Polynomial::constant(Scalar(1))};
    for (std::size_t i = 1; i < polys.size(); ++i) {
        BezoutCertificate step = ext_gcd_univariate(cert.gcd, polys[i]);
        for (Polynomial& cof : cert.cofactors) cof = cof * step.s;
        cert.cofactors.push_back(step.t);
        cert.gcd = step.gcd;
    }
    if (polys.size() == 1 && !cert.gcd.is_zero()) {
        Scalar lead = var && !cert.gcd.is_constant() ? to_dense(cert.gcd, *var).back()
                                                     : cert.gcd.constant_value();
        cert.gcd = cert.gcd * (Scalar(1) / lead);
        cert.cofactors[0] = Polynomial::constant(Scalar(1) / lead);
        if (cert.gcd.is_constant() && !cert.gcd.is_zero()) cert.gcd = Polynomial::constant(Scalar(1));
    }
    cert.coprime = cert.gcd == Polynomial::constant(Scalar(1));
    return cert;
}

struct NoCommonSolutionResult {
    int m = 0;
    bool ok = false;
    CoprimalityCertificate certificate;
    int kernel_dim = -1;  // m = 3 only
};

inline NoCommonSolutionResult no_common_solution(const LambdaSystem& sys) {
    NoCommonSolutionResult result;
    result.m = sys.m;
    if (sys.kernel_obligation) {
        result.kernel_dim = static_cast<int>(rotation_kernel(RotationBasisProfile::first_order_forms(3)).size());
        result.ok = result.kernel_dim == 0;
        result.certificate.gcd = sys.polys.empty() ? Polynomial() : sys.polys[0];
        return result;
    }
    result.certificate = coprimality(sys.polys);
    result.ok = result.certificate.coprime;
    return result;
}

}  // namespace logjet

#endif
