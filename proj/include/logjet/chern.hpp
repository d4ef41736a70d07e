#ifndef LOGJET_CHERN_HPP
#define LOGJET_CHERN_HPP

#include "logjet/polynomial.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logjet {

// ---------------------------------------------------------------------------
// Logarithmic Chern numbers of (P^2, C) for a curve with one or two smooth
// components. Computed from the closed formulas and cross-checked against the
// truncated total-Chern-class quotient (1 + 3H + 3H^2) / prod(1 + d_i H).
// ---------------------------------------------------------------------------

struct LogPairData {
    std::vector<int> degrees;
    long long d_total = 0;
    long long c1bar_sq = 0;
    long long c2bar = 0;

    long long positivity_lhs() const { return 13 * c1bar_sq - 9 * c2bar; }
};

// Degree-2 truncation of (1 + 3H + 3H^2) * prod (1 + d_i H)^{-1}; returns
// {1, c1bar, c2bar} as coefficients of H^0, H^1, H^2.
inline std::vector<long long> log_chern_series(const std::vector<int>& degrees) {
    std::vector<long long> c = {1, 3, 3};
    for (int d : degrees) {
        // multiply by 1 - dH + d^2 H^2 mod H^3
        long long dd = d;
        std::vector<long long> out(3);
        out[0] = c[0];
        out[1] = c[1] - dd * c[0];
        out[2] = c[2] - dd * c[1] + dd * dd * c[0];
        c = std::move(out);
    }
    return c;
}

inline LogPairData log_chern(const std::vector<int>& degrees) {
    if (degrees.empty() || degrees.size() > 2)
        throw std::domain_error("log_chern: expected 1 or 2 component degrees");
    for (int d : degrees)
        if (d < 1) throw std::domain_error("log_chern: degrees must be positive");
    LogPairData data;
    data.degrees = degrees;
    for (int d : degrees) data.d_total += d;
    long long c1 = 3 - data.d_total;
    data.c1bar_sq = c1 * c1;
    if (degrees.size() == 1) {
        long long d = degrees[0];
        data.c2bar = d * d - 3 * d + 3;
    } else {
        long long d1 = degrees[0], d2 = degrees[1];
        data.c2bar = 3 - 3 * (d1 + d2) + d1 * d1 + d2 * d2 + d1 * d2;
    }
    std::vector<long long> series = log_chern_series(degrees);
    if (series[1] != c1 || series[2] != data.c2bar)
        throw std::logic_error("log_chern: closed formulas disagree with the series oracle");
    return data;
}

inline bool positivity(const std::vector<int>& degrees) {
    return log_chern(degrees).positivity_lhs() > 0;
}

// Lower bound on the vanishing order t: m (13 c1bar^2 - 9 c2bar) / (12 c1bar^2).
inline Scalar vanishing_order_bound(const std::vector<int>& degrees, int m) {
    LogPairData data = log_chern(degrees);
    if (data.c1bar_sq == 0)
        throw std::domain_error("vanishing_order_bound: criterion inapplicable, c1bar^2 = 0");
    return Scalar(Integer(m) * Integer(data.positivity_lhs()), Integer(12) * Integer(data.c1bar_sq));
}

struct CriterionReport {
    std::vector<int> degrees;
    int m = 0;
    long long bound = 0;
    long long c1bar_sq = 0;
    long long c2bar = 0;
    long long positivity_lhs = 0;
    Scalar threshold_value;
    bool verdict = false;

    friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

// threshold_value = m (13 c1bar^2 - 9 c2bar)(d_total - 3) / (12 c1bar^2);
// verdict is threshold_value > bound. bound = 7 reproduces the degeneracy
// thresholds, bound = 0 the pure positivity frontier.
inline CriterionReport theorem_threshold(const std::vector<int>& degrees, int m, long long bound) {
    LogPairData data = log_chern(degrees);
    if (data.c1bar_sq == 0)
        throw std::domain_error("theorem_threshold: criterion inapplicable, c1bar^2 = 0");
    CriterionReport report;
    report.degrees = degrees;
    report.m = m;
    report.bound = bound;
    report.c1bar_sq = data.c1bar_sq;
    report.c2bar = data.c2bar;
    report.positivity_lhs = data.positivity_lhs();
    report.threshold_value = Scalar(Integer(m) * Integer(report.positivity_lhs) * Integer(data.d_total - 3),
                                    Integer(12) * Integer(data.c1bar_sq));
    report.verdict = report.threshold_value > Scalar(bound);
    return report;
}

struct ScanRow {
    std::vector<int> degrees;
    bool applicable = false;  // false when c1bar^2 = 0
    long long c1bar_sq = 0;
    long long c2bar = 0;
    long long positivity_lhs = 0;
    Scalar threshold_value;
    bool verdict = false;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct FrontierEntry {
    int d1 = 0;
    std::optional<int> min_d2;  // empty when nothing passes up to d_max
};

struct ScanResult {
    int components = 1;
    int m = 0;
    long long bound = 0;
    int d_max = 0;
    std::vector<ScanRow> rows;
    std::optional<int> min_passing_degree;        // single-component case
    std::vector<FrontierEntry> frontier;          // two-component case
    std::vector<std::string> monotonicity_violations;
};

inline ScanRow scan_row(const std::vector<int>& degrees, int m, long long bound) {
    ScanRow row;
    row.degrees = degrees;
    LogPairData data = log_chern(degrees);
    row.c1bar_sq = data.c1bar_sq;
    row.c2bar = data.c2bar;
    row.positivity_lhs = data.positivity_lhs();
    if (data.c1bar_sq == 0) return row;
    row.applicable = true;
    CriterionReport rep = theorem_threshold(degrees, m, bound);
    row.threshold_value = rep.threshold_value;
    row.verdict = rep.verdict;
    return row;
}

// Enumerate all degree tuples up to d_max and report verdicts together with
// the minimal passing frontier. Monotonicity beyond the frontier is checked
// over the scanned range, never assumed; violations are reported.
inline ScanResult scan_degrees(int components, int m, long long bound, int d_max) {
    if (components != 1 && components != 2)
        throw std::domain_error("scan_degrees: components must be 1 or 2");
    if (d_max < 1 || d_max > 200) throw std::domain_error("scan_degrees: d_max must be in 1..200");
    ScanResult result;
    result.components = components;
    result.m = m;
    result.bound = bound;
    result.d_max = d_max;
    if (components == 1) {
        for (int d = 1; d <= d_max; ++d) result.rows.push_back(scan_row({d}, m, bound));
        for (const ScanRow& row : result.rows) {
            if (row.verdict && !result.min_passing_degree) result.min_passing_degree = row.degrees[0];
            if (result.min_passing_degree && !row.verdict) {
                std::ostringstream msg;
                msg << "degree " << row.degrees[0] << " fails after minimal passing degree "
                    << *result.min_passing_degree;
                result.monotonicity_violations.push_back(msg.str());
            }
        }
    } else {
        for (int d1 = 1; d1 <= d_max; ++d1) {
            FrontierEntry entry;
            entry.d1 = d1;
            for (int d2 = d1; d2 <= d_max; ++d2) {
                ScanRow row = scan_row({d1, d2}, m, bound);
                if (row.verdict && !entry.min_d2) entry.min_d2 = d2;
                if (entry.min_d2 && !row.verdict) {
                    std::ostringstream msg;
                    msg << "(" << d1 << "," << d2 << ") fails after minimal passing d2 " << *entry.min_d2;
                    result.monotonicity_violations.push_back(msg.str());
                }
                result.rows.push_back(std::move(row));
            }
            result.frontier.push_back(entry);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Leading coefficient of chi(E_{2,m} Tbar*): symbolic Riemann-Roch over the
// graded pieces S^{m-3j} Tbar* (x) Kbar^j of the order-2 filtration, with the
// m^4 coefficient extracted exactly. Everything runs over Q[m, u, v] where
// u, v are the Chern roots of Tbar*.
// ---------------------------------------------------------------------------

// S_k(N) = sum_{i=0}^{N} i^k as a polynomial in the parameter N, from the
// recurrence (k+1) S_k = (N+1)^{k+1} - sum_{r<k} C(k+1, r) S_r.
inline Polynomial faulhaber_sum(int k) {
    if (k < 0 || k > 16) throw std::domain_error("faulhaber_sum: order out of range");
    const Polynomial upper = Polynomial::variable(VarId::param("N"));
    std::vector<Polynomial> s;
    s.push_back(upper + Polynomial::constant(Scalar(1)));  // S_0 = N + 1
    for (int kk = 1; kk <= k; ++kk) {
        Polynomial acc = (upper + Polynomial::constant(Scalar(1))).pow(static_cast<unsigned>(kk) + 1);
        Scalar binom(1);
        for (int r = 0; r < kk; ++r) {
            // C(kk+1, r) built incrementally: C(n,0)=1, C(n,r+1)=C(n,r)(n-r)/(r+1)
            acc -= s[static_cast<std::size_t>(r)] * binom;
            binom = binom * Scalar(kk + 1 - r) / Scalar(r + 1);
        }
        s.push_back(acc * (Scalar(1) / Scalar(kk + 1)));
    }
    return s[static_cast<std::size_t>(k)];
}

// Symbolic sum of p over var = 0..upper, where upper is any polynomial in the
// remaining variables.
inline Polynomial sum_range(const Polynomial& p, const VarId& var, const Polynomial& upper) {
    auto by_power = p.collect([&](const VarId& v) { return v == var; });
    Polynomial total;
    const VarId n = VarId::param("N");
    for (const auto& [key, coeff] : by_power) {
        int e = key.exponent(var);
        if (key.total_degree() != e)
            throw std::domain_error("sum_range: unexpected variable in summation key");
        Polynomial s = faulhaber_sum(e).substitute_poly({{n, upper}});
        total += coeff * s;
    }
    return total;
}

struct ChiLeadingResult {
    Polynomial coefficient;       // in the parameters c1bar_sq, c2bar
    Polynomial chi_of_m;          // full truncated chi as polynomial in m, u, v
    bool matches_expected = false;  // equals (13 c1bar_sq - 9 c2bar)/648
};

inline Polynomial chi_expected_leading_coefficient() {
    Polynomial p;
    p += Polynomial::variable(VarId::param("c1bar_sq")) * scalar_from(13, 648);
    p -= Polynomial::variable(VarId::param("c2bar")) * scalar_from(9, 648);
    return p;
}

inline ChiLeadingResult chi_leading_coefficient() {
    const VarId iu = VarId::param("i");
    const VarId ju = VarId::param("j");
    const VarId mu = VarId::param("m");
    const VarId u = VarId::param("u");
    const VarId v = VarId::param("v");
    const Polynomial pi = Polynomial::variable(iu);
    const Polynomial pj = Polynomial::variable(ju);
    const Polynomial pm = Polynomial::variable(mu);
    const Polynomial pu = Polynomial::variable(u);
    const Polynomial pv = Polynomial::variable(v);

    // Chern roots of S^p Tbar* (x) Kbar^j are i*u + (p-i)*v + j*(u+v) with
    // p = m - 3j; per root the Riemann-Roch integrand truncates to
    // L^2/2 + L*td1 + td2 with the log Todd classes
    // td1 = c1bar/2 = -(u+v)/2, td2 = (c1bar^2 + c2bar)/12.
    Polynomial p_deg = pm - pj * Scalar(3);
    Polynomial L = pi * pu + (p_deg - pi) * pv + pj * (pu + pv);
    Polynomial td1 = (pu + pv) * scalar_from(-1, 2);
    Polynomial td2 = ((pu + pv).pow(2) + pu * pv) * scalar_from(1, 12);
    Polynomial per_root = L * L * scalar_from(1, 2) + L * td1 + td2;

    Polynomial inner = sum_range(per_root, iu, p_deg);
    // Upper limit taken at the exact rational endpoint m/3; only the leading
    // coefficient is consumed downstream and it is branch-independent.
    Polynomial chi = sum_range(inner, ju, pm * scalar_from(1, 3));

    Polynomial lead =
        chi.coefficient_of(Monomial::variable(mu, 4), [&](const VarId& w) { return w == mu; });
    Scalar quu = lead.coefficient_of(Monomial::variable(u, 2), [&](const VarId& w) { return w == u || w == v; })
                     .constant_value();
    Scalar qvv = lead.coefficient_of(Monomial::variable(v, 2), [&](const VarId& w) { return w == u || w == v; })
                     .constant_value();
    Scalar quv = lead.coefficient_of(Monomial::variable(u).times(Monomial::variable(v)),
                                     [&](const VarId& w) { return w == u || w == v; })
                     .constant_value();
    if (quu != qvv) throw std::logic_error("chi_leading_coefficient: asymmetric quadratic form");

    // Rewrite the symmetric form in log Chern numbers: with u + v = -c1bar
    // and uv = c2bar, u^2 + v^2 = c1bar^2 - 2 c2bar.
    const Polynomial c1sq = Polynomial::variable(VarId::param("c1bar_sq"));
    const Polynomial c2 = Polynomial::variable(VarId::param("c2bar"));
    ChiLeadingResult result;
    result.chi_of_m = chi;
    result.coefficient = c1sq * quu + c2 * (quv - Scalar(2) * quu);
    result.matches_expected = result.coefficient == chi_expected_leading_coefficient();
    return result;
}

}  // namespace logjet

#endif
