#ifndef HODGERING_PARSER_HPP
#define HODGERING_PARSER_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgering/polynomial.hpp"

namespace hodgering {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar:
//   poly   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := var ('^' uint)?
//   coeff  := int ('/' uint)?
// Whitespace insensitive; '*' between coefficient and variable optional.
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse() {
        int n = static_cast<int>(vars_.size());
        Polynomial result(n);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        result += parse_term(sign);
        skip_ws();
        while (!at_end()) {
            char op = get();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-', got '") + op + "'", pos_ - 1);
            result += parse_term(op == '-' ? -1 : 1);
            skip_ws();
        }
        return result;
    }

private:
    Polynomial parse_term(int sign) {
        skip_ws();
        int n = static_cast<int>(vars_.size());
        Rational coeff(sign);
        Exponents expo(n, 0);
        bool any = false;

        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_coeff();
            any = true;
        }
        for (;;) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
            }
            if (at_end() || !is_ident_start(peek())) break;
            size_t var_pos = pos_;
            std::string name = parse_ident();
            int idx = var_index(name);
            if (idx < 0) throw ParseError("unknown variable \"" + name + "\"", var_pos);
            int power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                get();
                skip_ws();
                power = parse_uint("exponent");
                skip_ws();
                if (!at_end() && peek() == '/')
                    throw ParseError("non-integer exponent", pos_);
            }
            expo[idx] += power;
            any = true;
        }
        if (!any) throw ParseError("expected a term", pos_);
        return Polynomial::monomial(n, expo, coeff);
    }

    Rational parse_coeff() {
        long num = parse_uint("coefficient");
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            long den = parse_uint("denominator");
            if (den == 0) throw ParseError("zero denominator", pos_);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    long parse_uint(const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos_);
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) throw ParseError("number too large", pos_);
        }
        return v;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string parse_ident() {
        std::string s;
        while (!at_end() && is_ident_char(peek())) s.push_back(get());
        return s;
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables) {
    return PolynomialParser(text, variables).parse();
}

}  // namespace hodgering

#endif
