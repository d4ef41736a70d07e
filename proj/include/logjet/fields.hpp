#ifndef LOGJET_FIELDS_HPP
#define LOGJET_FIELDS_HPP

#include "logjet/jet.hpp"
#include "logjet/linalg.hpp"
#include "logjet/polynomial.hpp"
#include "logjet/rational_fn.hpp"

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logjet {

// Meromorphic vector field on the jet-space chart: a finite map from
// variables to rational-function coefficients. Variables absent from the map
// have coefficient zero.
struct VectorField {
    std::map<VarId, RationalFn> coeffs;
    std::string family;

    void add(const VarId& v, RationalFn c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(v);
        if (it == coeffs.end()) {
            coeffs.emplace(v, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    bool is_zero() const { return coeffs.empty(); }

    VectorField scaled(const Scalar& s) const {
        VectorField out;
        out.family = family;
        if (s == 0) return out;
        for (const auto& [v, c] : coeffs) out.coeffs.emplace(v, c * RationalFn::constant(s));
        return out;
    }

    // V(p) = sum over variables of coeff * dp/dvar.
    RationalFn apply(const Polynomial& p) const {
        // Common fast path: all coefficients share one denominator.
        bool same_den = true;
        const Polynomial* den = nullptr;
        for (const auto& [v, c] : coeffs) {
            if (den == nullptr) {
                den = &c.den();
            } else if (!(c.den() == *den)) {
                same_den = false;
                break;
            }
        }
        if (same_den && den != nullptr) {
            Polynomial num;
            for (const auto& [v, c] : coeffs) num += c.num() * p.partial(v);
            return RationalFn(num, *den);
        }
        RationalFn out;
        for (const auto& [v, c] : coeffs) {
            Polynomial dp = p.partial(v);
            if (!dp.is_zero()) out += c * RationalFn(dp);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Reduction modulo the variety: rewrite every monomial carrying z3^d using
// the three defining equations, eliminating z3-powers (and the xi_3 jets that
// accompany them). Terms that are genuinely in the ideal reduce to 0.
// ---------------------------------------------------------------------------

inline Polynomial reduce_on_variety(Polynomial p, const JetVarietyPresentation& pres) {
    const int d = pres.degree;
    const VarId z3 = VarId::coord(3);
    const VarId xi31 = VarId::jet(3, 1);
    const VarId xi32 = VarId::jet(3, 2);
    const Scalar inv_d = Scalar(1) / Scalar(d);

    // E1 = z3^d + rest1, E2 = d z3^d xi31 + rest2, E3 = d z3^d xi32 + rest3.
    const Polynomial rest1 = pres.e1 - Polynomial::variable(z3, d);
    const Polynomial rest2 =
        pres.e2 - Scalar(d) * Polynomial::variable(z3, d) * Polynomial::variable(xi31);
    const Polynomial rest3 =
        pres.e3 - Scalar(d) * Polynomial::variable(z3, d) * Polynomial::variable(xi32);

    const Monomial mz3d = Monomial::variable(z3, d);
    auto find_target = [&](int pass) -> std::optional<std::pair<Monomial, Scalar>> {
        for (const auto& [m, c] : p.terms()) {
            if (m.exponent(z3) < d) continue;
            bool has2 = m.exponent(xi32) > 0;
            bool has1 = m.exponent(xi31) > 0;
            if (pass == 0 && !has2) continue;
            if (pass == 1 && (has2 || !has1)) continue;
            if (pass == 2 && (has2 || has1)) continue;
            return std::make_pair(m, c);
        }
        return std::nullopt;
    };

    for (int pass = 0; pass < 3; ++pass) {
        for (;;) {
            auto target = find_target(pass);
            if (!target) break;
            const auto& [m, c] = *target;
            Monomial rest;
            Polynomial replacement;
            if (pass == 0) {
                rest = *m.divide(mz3d.times(Monomial::variable(xi32)));
                replacement = rest3 * (-inv_d);
            } else if (pass == 1) {
                rest = *m.divide(mz3d.times(Monomial::variable(xi31)));
                replacement = rest2 * (-inv_d);
            } else {
                rest = *m.divide(mz3d);
                replacement = -rest1;
            }
            p.add_term(m, -c);
            p += replacement * Polynomial::monomial(rest, c);
        }
    }
    return p;
}

inline bool involves_pole_coordinates(const Polynomial& p) {
    for (const VarId& v : p.variables()) {
        if (v.kind() == VarKind::Coord && v.coord_index() == 3) return true;
        if (v.kind() == VarKind::Jet && v.direction() == 3) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// First package: the telescoping fields constant in a, polynomial in one or
// two coordinates, annihilating the defining equations identically.
// ---------------------------------------------------------------------------

enum class FirstPackageKind { V30, V21 };

// V30 (with main coordinate z_s): d/da_alpha - 3 z_s d/da_{alpha-delta_s}
//   + 3 z_s^2 d/da_{alpha-2delta_s} - z_s^3 d/da_{alpha-3delta_s}
// V21 (main z_s, secondary z_t): the displayed six-term field following the
// (X - z_s)^2 (Y - z_t) pattern. `swap_z12` permutes the roles of z1 and z2.
inline VectorField first_package(const MultiIndex& alpha, FirstPackageKind kind, bool swap_z12 = false) {
    const int s = swap_z12 ? 2 : 1;
    const int t = swap_z12 ? 1 : 2;
    VectorField f;
    f.family = "first";
    auto zs = [&](int e) { return Monomial::variable(VarId::coord(s), e); };
    auto zt = [&](int e) { return Monomial::variable(VarId::coord(t), e); };
    auto put = [&](const MultiIndex& idx, const Monomial& m, long long c) {
        f.add(VarId::coeff(idx), RationalFn(Polynomial::monomial(m, Scalar(c))));
    };
    try {
        if (kind == FirstPackageKind::V30) {
            if (alpha[s] < 3)
                throw std::domain_error("first_package: V30 requires alpha_" + std::to_string(s) + " >= 3");
            put(alpha, Monomial::one(), 1);
            put(alpha.minus_delta(s, 1), zs(1), -3);
            put(alpha.minus_delta(s, 2), zs(2), 3);
            put(alpha.minus_delta(s, 3), zs(3), -1);
        } else {
            if (alpha[s] < 2 || alpha[t] < 1)
                throw std::domain_error("first_package: V21 requires alpha_" + std::to_string(s) +
                                        " >= 2 and alpha_" + std::to_string(t) + " >= 1");
            put(alpha, Monomial::one(), 1);
            put(alpha.minus_delta(s, 1), zs(1), -2);
            put(alpha.minus_delta(t, 1), zt(1), -1);
            put(alpha.minus_delta(s, 1).minus_delta(t, 1), zs(1).times(zt(1)), 2);
            put(alpha.minus_delta(s, 2), zs(2), 1);
            put(alpha.minus_delta(s, 2).minus_delta(t, 1), zs(2).times(zt(1)), -1);
        }
    } catch (const std::domain_error&) {
        throw;
    }
    return f;
}

// All admissible (alpha, kind, permutation) triples for coefficients |alpha| <= d.
struct FirstPackageId {
    MultiIndex alpha;
    FirstPackageKind kind;
    bool swap_z12;
};

inline std::vector<FirstPackageId> first_package_family(int d) {
    std::vector<FirstPackageId> out;
    for (const MultiIndex& alpha : coefficient_indices(d)) {
        if (alpha[1] >= 3) out.push_back({alpha, FirstPackageKind::V30, false});
        if (alpha[2] >= 3) out.push_back({alpha, FirstPackageKind::V30, true});
        if (alpha[1] >= 2 && alpha[2] >= 1) out.push_back({alpha, FirstPackageKind::V21, false});
        if (alpha[2] >= 2 && alpha[1] >= 1) out.push_back({alpha, FirstPackageKind::V21, true});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Slanted fields (constant horizontal part plus v3 z3 d/dz3): the a-block
// coefficients are forced by identifying coefficients of z^rho,
//   v_rho = d v3 a_rho - sum_j (rho_j + 1) a_{rho+delta_j} v_j,
// with a_{rho+delta_j} read as zero above degree d.
// ---------------------------------------------------------------------------

inline VectorField slanted_field(const Scalar& v1, const Scalar& v2, const Scalar& v3, int d) {
    if (d < 1) throw std::domain_error("slanted_field: degree must be positive");
    VectorField f;
    f.family = "slanted";
    f.add(VarId::coord(1), RationalFn::constant(v1));
    f.add(VarId::coord(2), RationalFn::constant(v2));
    f.add(VarId::coord(3), RationalFn(Polynomial::variable(VarId::coord(3)) * v3));
    const std::array<Scalar, 3> v = {v1, v2, v3};
    for (const MultiIndex& rho : coefficient_indices(d)) {
        Polynomial coeff = Polynomial::variable(VarId::coeff(rho)) * (v3 * Scalar(d));
        for (int j = 1; j <= 2; ++j) {
            MultiIndex up = rho.plus_delta(j);
            if (up.total() > d) continue;
            coeff -= Polynomial::variable(VarId::coeff(up)) * (v[j - 1] * Scalar(rho[j] + 1));
        }
        f.add(VarId::coeff(rho), RationalFn(coeff));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Jet-linear fields w^(k) = A xi^(k) with correcting a-block:
// per z^rho monomial block, the unknown coefficients v_beta^alpha
// (alpha + beta = rho, |beta| <= 2) solve the square system whose matrix is
// the order-<=2 derivative interpolation matrix and whose right-hand sides
// are extracted symbolically from the reduced tangency conditions.
//
// The top-degree blocks |rho| in {d+1, d+2} have fewer admissible unknowns
// than equations whenever the third row of A is nonzero; they are repaired
// with degree-3 correction terms (see MatrixABlock::augmented). This keeps
// the field exactly tangent while preserving a-linearity and pole order 3.
// ---------------------------------------------------------------------------

struct MatrixABlock {
    MultiIndex rho;
    std::size_t size = 0;  // number of equations = number of unknowns
    Scalar det;
    bool boundary = false;   // some component of rho is < 2
    bool augmented = false;  // degree-3 correction columns in use
    bool trivial = false;    // no unknowns; right-hand side verified zero
};

struct MatrixAField {
    VectorField field;
    std::vector<MatrixABlock> blocks;
};

namespace detail {

inline bool is_z12(const VarId& v) {
    return v.kind() == VarKind::Coord && v.coord_index() <= 2;
}
inline bool is_jet_var(const VarId& v) { return v.kind() == VarKind::Jet; }

// Falling factorial n(n-1)...(n-k+1).
inline long long falling(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

// The multi-indices gamma with |gamma| <= 2, in a fixed documented order.
inline const std::vector<MultiIndex>& order2_indices() {
    static const std::vector<MultiIndex> idx = {MultiIndex(0, 0), MultiIndex(1, 0), MultiIndex(0, 1),
                                                MultiIndex(2, 0), MultiIndex(1, 1), MultiIndex(0, 2)};
    return idx;
}
inline const std::vector<MultiIndex>& order3_indices() {
    static const std::vector<MultiIndex> idx = {MultiIndex(3, 0), MultiIndex(2, 1), MultiIndex(1, 2),
                                                MultiIndex(0, 3)};
    return idx;
}

}  // namespace detail

// Interpolation matrix of a block: entry (gamma, beta) is the gamma-th partial
// derivative of z^{rho-beta} evaluated at z0 = (1, 1), i.e. the product of
// falling factorials of the components.
inline Matrix<Scalar> interpolation_matrix(const MultiIndex& rho, const std::vector<MultiIndex>& gammas,
                                           const std::vector<MultiIndex>& betas) {
    Matrix<Scalar> m(gammas.size(), betas.size());
    for (std::size_t r = 0; r < gammas.size(); ++r)
        for (std::size_t c = 0; c < betas.size(); ++c) {
            MultiIndex n = rho.minus(betas[c]);
            m(r, c) = Scalar(detail::falling(n[1], gammas[r][1]) * detail::falling(n[2], gammas[r][2]));
        }
    return m;
}

inline MatrixAField matrixA_field(const Matrix<Scalar>& a_matrix, int d,
                                  const JetVarietyPresentation* pres_in = nullptr) {
    if (a_matrix.rows() != 3 || a_matrix.cols() != 3)
        throw std::domain_error("matrixA_field: A must be 3x3");
    for (int j = 0; j < 3; ++j)
        if (a_matrix(j, 2) != 0) throw std::domain_error("matrixA_field: third column of A must be zero");
    if (d < 5) throw std::domain_error("matrixA_field: degree must be at least 5");

    JetVarietyPresentation pres = pres_in ? *pres_in : universal_jet_equations(d);

    VectorField field;
    field.family = "matrixA";
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 2; ++k) {
            Polynomial w;
            for (int m = 1; m <= 2; ++m)
                w += Polynomial::variable(VarId::jet(m, k)) * a_matrix(j - 1, m - 1);
            field.add(VarId::jet(j, k), RationalFn(w));
        }

    // Reduced jet parts of the tangency conditions; the a-block unknowns do
    // not enter here, so these carry exactly the inhomogeneous data.
    RationalFn t2r = field.apply(pres.e2);
    RationalFn t3r = field.apply(pres.e3);
    if (!t2r.is_polynomial() || !t3r.is_polynomial())
        throw std::logic_error("matrixA_field: jet part should be polynomial");
    Polynomial t2 = reduce_on_variety(t2r.num(), pres);
    Polynomial t3 = reduce_on_variety(t3r.num(), pres);
    if (involves_pole_coordinates(t2) || involves_pole_coordinates(t3))
        throw std::logic_error("matrixA_field: reduction left pole coordinates");

    // Inhomogeneous coefficient polynomials C_gamma(z, a), keyed by the
    // derivative index gamma. The xi_j^(2)-linear parts of the third
    // condition must coincide with the xi_j^(1) parts of the second one
    // ("automatically zero"); this is asserted, not assumed.
    std::map<MultiIndex, Polynomial> inhom;
    auto jet1_mon = [](int j) { return Monomial::variable(VarId::jet(j, 1)); };
    inhom[MultiIndex(1, 0)] = t2.coefficient_of(jet1_mon(1), detail::is_jet_var);
    inhom[MultiIndex(0, 1)] = t2.coefficient_of(jet1_mon(2), detail::is_jet_var);
    inhom[MultiIndex(2, 0)] = t3.coefficient_of(jet1_mon(1).times(jet1_mon(1)), detail::is_jet_var);
    inhom[MultiIndex(0, 2)] = t3.coefficient_of(jet1_mon(2).times(jet1_mon(2)), detail::is_jet_var);
    inhom[MultiIndex(1, 1)] =
        t3.coefficient_of(jet1_mon(1).times(jet1_mon(2)), detail::is_jet_var) * scalar_from(1, 2);
    inhom[MultiIndex(0, 0)] = Polynomial();
    for (int j = 1; j <= 2; ++j) {
        Polynomial second_order = t3.coefficient_of(Monomial::variable(VarId::jet(j, 2)), detail::is_jet_var);
        MultiIndex gamma = (j == 1) ? MultiIndex(1, 0) : MultiIndex(0, 1);
        if (!(second_order == inhom[gamma]))
            throw std::logic_error("matrixA_field: xi^(2) conditions do not match the xi^(1) conditions");
    }
    {
        // Any jet monomial beyond the displayed system (including a jet-free
        // residue) would mean the reduction produced equations we are not
        // solving; refuse rather than drop them.
        std::vector<Monomial> allowed = {jet1_mon(1),
                                         jet1_mon(2),
                                         jet1_mon(1).times(jet1_mon(1)),
                                         jet1_mon(1).times(jet1_mon(2)),
                                         jet1_mon(2).times(jet1_mon(2)),
                                         Monomial::variable(VarId::jet(1, 2)),
                                         Monomial::variable(VarId::jet(2, 2))};
        auto groups = (t2 + t3).collect(detail::is_jet_var);
        for (const auto& [key, val] : groups) {
            bool ok = false;
            for (const Monomial& a : allowed) ok = ok || key == a;
            if (!ok) throw std::logic_error("matrixA_field: unexpected jet monomial " + key.str());
        }
    }

    MatrixAField out;
    for (int r1 = 0; r1 <= d + 2; ++r1) {
        for (int r2 = 0; r1 + r2 <= d + 2; ++r2) {
            MultiIndex rho(r1, r2);
            std::vector<MultiIndex> gammas;
            for (const MultiIndex& g : detail::order2_indices())
                if (g.leq_componentwise(rho)) gammas.push_back(g);
            std::vector<MultiIndex> betas;
            for (const MultiIndex& b : detail::order2_indices())
                if (b.leq_componentwise(rho) && rho.minus(b).total() <= d) betas.push_back(b);
            bool augmented = false;
            if (betas.size() < gammas.size()) {
                for (const MultiIndex& b : detail::order3_indices()) {
                    if (betas.size() == gammas.size()) break;
                    if (b.leq_componentwise(rho) && rho.minus(b).total() <= d) {
                        betas.push_back(b);
                        augmented = true;
                    }
                }
            }

            std::vector<Polynomial> rhs;
            bool rhs_zero = true;
            for (const MultiIndex& g : gammas) {
                Polynomial r = -inhom.at(g).coefficient_of(z_monomial(rho.minus(g)), detail::is_z12);
                rhs_zero = rhs_zero && r.is_zero();
                rhs.push_back(std::move(r));
            }

            MatrixABlock block;
            block.rho = rho;
            block.boundary = rho[1] < 2 || rho[2] < 2;
            block.augmented = augmented;
            block.size = gammas.size();
            if (betas.empty() || betas.size() < gammas.size()) {
                if (!rhs_zero) {
                    std::ostringstream msg;
                    msg << "matrixA_field: block " << rho.str() << " is unsolvable";
                    throw std::logic_error(msg.str());
                }
                block.trivial = true;
                block.det = Scalar(0);
                out.blocks.push_back(block);
                continue;
            }

            Matrix<Scalar> m = interpolation_matrix(rho, gammas, betas);
            CramerPolyResult solved = solve_cramer(m, rhs);
            if (solved.det == 0) {
                std::ostringstream msg;
                msg << "matrixA_field: singular block system at rho=" << rho.str() << " (det 0)";
                throw std::logic_error(msg.str());
            }
            block.det = solved.det;
            out.blocks.push_back(block);
            for (std::size_t c = 0; c < betas.size(); ++c) {
                if (solved.solution[c].is_zero()) continue;
                MultiIndex alpha = rho.minus(betas[c]);
                field.add(VarId::coeff(alpha),
                          RationalFn(solved.solution[c] * Polynomial::monomial(z_monomial(betas[c]), Scalar(1))));
            }
        }
    }
    out.field = std::move(field);
    return out;
}

// ---------------------------------------------------------------------------
// Third package: quadric-coefficient fields with v_00, v_10, v_01 solved by
// Cramer's rule off the wronskian locus. Coefficients come out as rational
// functions with denominator W12.
// ---------------------------------------------------------------------------

inline std::vector<MultiIndex> third_package_free_indices() {
    return {MultiIndex(2, 0), MultiIndex(1, 1), MultiIndex(0, 2)};
}

// Row seeds of the displayed 3-equation system: the alpha-column of the
// conditions V(E_i) = 0 restricted to |alpha| <= 2.
inline std::array<Polynomial, 3> third_package_condition_column(const MultiIndex& alpha) {
    Polynomial za = Polynomial::monomial(z_monomial(alpha), Scalar(1));
    Polynomial row2, row3;
    for (int j = 1; j <= 2; ++j) {
        Polynomial dz = za.partial(VarId::coord(j));
        row2 += dz * Polynomial::variable(VarId::jet(j, 1));
        row3 += dz * Polynomial::variable(VarId::jet(j, 2));
        for (int k = 1; k <= 2; ++k)
            row3 += za.partial(VarId::coord(j)).partial(VarId::coord(k)) *
                    Polynomial::variable(VarId::jet(j, 1)) * Polynomial::variable(VarId::jet(k, 1));
    }
    return {za, row2, row3};
}

inline VectorField third_package(const std::map<MultiIndex, Scalar>& free_coeffs,
                                 const std::map<VarId, Scalar>* point = nullptr) {
    const std::vector<MultiIndex> free_idx = third_package_free_indices();
    for (const auto& [idx, val] : free_coeffs) {
        bool known = false;
        for (const MultiIndex& f : free_idx) known = known || f == idx;
        if (!known) throw std::domain_error("third_package: " + idx.str() + " is not a free index");
    }
    const Polynomial w12 = wronskian_w12();
    if (point != nullptr && w12.eval(*point) == 0)
        throw std::domain_error("third_package: the point lies on the Sigma locus (W12 = 0)");

    const std::vector<MultiIndex> solved_idx = {MultiIndex(0, 0), MultiIndex(1, 0), MultiIndex(0, 1)};
    Matrix<Polynomial> m(3, 3);
    for (std::size_t c = 0; c < solved_idx.size(); ++c) {
        auto col = third_package_condition_column(solved_idx[c]);
        for (std::size_t r = 0; r < 3; ++r) m(r, c) = col[r];
    }
    Polynomial det = det_laplace(m);
    if (!(det == w12)) throw std::logic_error("third_package: system determinant is not W12");

    std::array<Polynomial, 3> rhs;
    for (const MultiIndex& idx : free_idx) {
        auto it = free_coeffs.find(idx);
        Scalar v = it == free_coeffs.end() ? Scalar(0) : it->second;
        if (v == 0) continue;
        auto col = third_package_condition_column(idx);
        for (std::size_t r = 0; r < 3; ++r) rhs[r] -= col[r] * v;
    }

    VectorField field;
    field.family = "third";
    for (std::size_t c = 0; c < solved_idx.size(); ++c) {
        Matrix<Polynomial> replaced = m;
        for (std::size_t r = 0; r < 3; ++r) replaced(r, c) = rhs[r];
        field.add(VarId::coeff(solved_idx[c]), RationalFn(det_laplace(replaced), w12));
    }
    for (const MultiIndex& idx : free_idx) {
        auto it = free_coeffs.find(idx);
        if (it != free_coeffs.end()) field.add(VarId::coeff(idx), RationalFn::constant(it->second));
    }
    return field;
}

// ---------------------------------------------------------------------------
// Tangency verification and pole-order accounting.
// ---------------------------------------------------------------------------

enum class TangencyVerdict { Identical, Tangent, NotTangent };

inline const char* to_string(TangencyVerdict v) {
    switch (v) {
        case TangencyVerdict::Identical: return "IDENTICAL";
        case TangencyVerdict::Tangent: return "TANGENT";
        case TangencyVerdict::NotTangent: return "NOT_TANGENT";
    }
    return "?";
}

struct TangencyReport {
    std::array<TangencyVerdict, 3> equations{};
    bool tangent = false;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string witness;  // set when some equation fails
};

// Verdict per defining equation: IDENTICAL when V(E_i) is zero outright,
// TANGENT when it evaluates to zero at `n_samples` exact on-variety points,
// NOT_TANGENT otherwise. Sample points hitting a coefficient denominator are
// resampled (bounded).
inline TangencyReport check_tangency(const VectorField& field, const JetVarietyPresentation& pres,
                                     int n_samples, std::uint64_t seed) {
    TangencyReport report;
    report.samples = n_samples;
    report.seed = seed;
    std::array<RationalFn, 3> images = {field.apply(pres.e1), field.apply(pres.e2), field.apply(pres.e3)};
    std::array<bool, 3> needs_sampling{};
    for (int i = 0; i < 3; ++i) {
        if (images[i].is_zero()) {
            report.equations[i] = TangencyVerdict::Identical;
        } else {
            report.equations[i] = TangencyVerdict::Tangent;  // until refuted
            needs_sampling[i] = true;
        }
    }
    bool any_sampling = needs_sampling[0] || needs_sampling[1] || needs_sampling[2];
    if (any_sampling) {
        std::uint64_t subseed = seed;
        for (int s = 0; s < n_samples; ++s) {
            std::map<VarId, Scalar> pt;
            bool ok = false;
            for (int retry = 0; retry < 50 && !ok; ++retry) {
                pt = sample_jet_point(pres, subseed++);
                ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    if (needs_sampling[i] && images[i].den().eval(pt) == 0) ok = false;
            }
            if (!ok) throw std::runtime_error("check_tangency: could not sample off the denominators");
            for (int i = 0; i < 3; ++i) {
                if (!needs_sampling[i] || report.equations[i] == TangencyVerdict::NotTangent) continue;
                Scalar value = images[i].num().eval(pt);
                if (value != 0) {
                    report.equations[i] = TangencyVerdict::NotTangent;
                    std::ostringstream w;
                    w << "V(E" << (i + 1) << ") = " << to_string(value) << " at sample " << s;
                    report.witness = w.str();
                }
            }
        }
    }
    report.tangent = true;
    for (int i = 0; i < 3; ++i) report.tangent = report.tangent && report.equations[i] != TangencyVerdict::NotTangent;
    return report;
}

struct PoleOrderEntry {
    VarId var;
    int order;
};

struct PoleOrderReport {
    std::vector<PoleOrderEntry> entries;
    int order = 0;
};

// Conservative weighted-degree bound: max over numerator monomials of
// deg_z * 1 + deg_xi1 * 2 + deg_xi2 * 3. Denominators are ignored; they
// vanish on the Sigma locus, not at infinity.
inline PoleOrderReport pole_order(const VectorField& field) {
    PoleOrderReport report;
    for (const auto& [v, c] : field.coeffs) {
        int w = c.num().weighted_degree(pole_weight);
        report.entries.push_back({v, w});
        report.order = std::max(report.order, w);
    }
    return report;
}

}  // namespace logjet

#endif
