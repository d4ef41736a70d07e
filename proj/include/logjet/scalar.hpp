#ifndef LOGJET_SCALAR_HPP
#define LOGJET_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logjet {

// Exact arbitrary-precision rational scalar. The representation is always in
// lowest terms with positive denominator; zero is 0/1. cpp_rational maintains
// this canonical form after every operation, so equality is plain value
// equality and no rounding can ever occur.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer scalar_num(const Scalar& s) { return numerator(s); }
inline Integer scalar_den(const Scalar& s) { return denominator(s); }

inline Scalar scalar_from(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("scalar: zero denominator");
    return Scalar(Integer(num), Integer(den));
}

// Accepts "n" or "n/d", optionally signed. Throws std::invalid_argument on
// malformed input or zero denominator.
inline Scalar parse_scalar(const std::string& text) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("scalar: cannot parse '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("scalar: zero denominator in '" + text + "'");
        return Scalar(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

inline std::string to_string(const Scalar& s) {
    std::string out = scalar_num(s).str();
    if (scalar_den(s) != 1) out += "/" + scalar_den(s).str();
    return out;
}

inline Scalar scalar_pow(Scalar base, unsigned exp) {
    Scalar result(1);
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline int scalar_sign(const Scalar& s) { return s.sign(); }

inline Scalar scalar_abs(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

// gcd for rational "contents": gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d) reduced,
// i.e. the largest rational dividing both with integer quotients.
inline Scalar scalar_gcd(const Scalar& a, const Scalar& b) {
    if (a == 0) return scalar_abs(b);
    if (b == 0) return scalar_abs(a);
    Integer num = gcd(scalar_num(a) * scalar_den(b), scalar_num(b) * scalar_den(a));
    Integer den = scalar_den(a) * scalar_den(b);
    return Scalar(num, den);
}

}  // namespace logjet

#endif
