#ifndef LOGJET_PARSE_HPP
#define LOGJET_PARSE_HPP

#include "logjet/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace logjet {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Recursive-descent parser for polynomial literals:
//
//   poly := [+|-] term ((+|-) term)*
//   term := atom (* atom)*            atoms are numbers or variable powers
//   atom := int[/int] | var [^ nat]
//   var  := z1..z4 | a(i1,i2) | a(c,i1,i2) | xi(j,k) | xih(j,k) | lam
//
// a(i1,i2) is the component-1 coefficient a_(i1,i2); the three-argument form
// names the component explicitly. Whitespace is insignificant.
class PolynomialParser {
public:
    explicit PolynomialParser(std::string text) : text_(std::move(text)) {}

    Polynomial parse() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial parse_poly() {
        Polynomial acc;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (take() == '-');
        acc += parse_term(negative);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            acc += parse_term(c == '-');
        }
        return acc;
    }

    Polynomial parse_term(bool negative) {
        Polynomial term = parse_atom();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            term = term * parse_atom();
        }
        return negative ? -term : term;
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_nat();
            Integer den(1);
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                den = parse_nat();
                if (den == 0) fail("zero denominator");
            }
            return Polynomial::constant(Scalar(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            VarId v = parse_var();
            int exp = 1;
            skip_ws();
            if (peek() == '^') {
                take();
                skip_ws();
                Integer e = parse_nat();
                if (e > 64) fail("exponent too large");
                exp = static_cast<int>(e);
            }
            return exp == 0 ? Polynomial::constant(Scalar(1)) : Polynomial::variable(v, exp);
        }
        fail(pos_ >= text_.size() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    VarId parse_var() {
        int at = static_cast<int>(pos_);
        std::string word;
        while (std::isalpha(static_cast<unsigned char>(peek()))) word += take();
        if (word == "z") {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected coordinate index after 'z'");
            int i = take() - '0';
            if (i < 1 || i > 4) fail_at(at, "coordinate index must be 1..4");
            return VarId::coord(i);
        }
        if (word == "lam") return VarId::param("lam");
        if (word == "a") {
            auto args = parse_int_args(2, 3);
            try {
                if (args.size() == 2) return VarId::coeff(1, MultiIndex(args[0], args[1]));
                return VarId::coeff(args[0], MultiIndex(args[1], args[2]));
            } catch (const std::exception& e) {
                fail_at(at, e.what());
            }
        }
        if (word == "xi" || word == "xih") {
            auto args = parse_int_args(2, 2);
            try {
                return word == "xi" ? VarId::jet(args[0], args[1]) : VarId::hat_jet(args[0], args[1]);
            } catch (const std::exception& e) {
                fail_at(at, e.what());
            }
        }
        fail_at(at, "unknown variable name '" + word + "'");
    }

    std::vector<int> parse_int_args(std::size_t min_n, std::size_t max_n) {
        skip_ws();
        if (peek() != '(') fail("expected '('");
        take();
        std::vector<int> args;
        for (;;) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer argument");
            Integer n = parse_nat();
            if (n > 1000) fail("index too large");
            args.push_back(static_cast<int>(n));
            skip_ws();
            if (peek() == ',') {
                take();
                continue;
            }
            if (peek() == ')') {
                take();
                break;
            }
            fail("expected ',' or ')'");
        }
        if (args.size() < min_n || args.size() > max_n) fail("wrong number of arguments");
        return args;
    }

    Integer parse_nat() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        if (digits.empty()) fail("expected integer");
        return Integer(digits);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(static_cast<int>(pos_), msg); }

    [[noreturn]] void fail_at(int pos, const std::string& msg) const {
        int line = 1, col = 1;
        for (int i = 0; i < pos && i < static_cast<int>(text_.size()); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, msg);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text) { return PolynomialParser(text).parse(); }

}  // namespace logjet

#endif
