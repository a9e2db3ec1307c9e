#pragma once

// Text syntax for tropical polynomials:
//
//   expr   := term ( "+" term )*
//   term   := factor ( "*" factor )*
//   factor := rational | var [ "^" nat ]
//   var    := "x" | "y"
//
// "+" is tropical addition (max), "*" tropical multiplication (sum) and "^"
// tropical power. Rationals are "p", "-p" or "p/q". Repeated monomials merge
// by taking the larger coefficient.

#include "tropic/polynomial.hpp"
#include "tropic/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace tropic {

struct ParseError : DomainError {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : DomainError("syntax error at position " + std::to_string(pos) + ": " + what), position(pos) {}
};

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view s) : s_(s) {}

    TropicalPolynomial run() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty input");
        TropicalPolynomial::TermMap terms;
        for (;;) {
            auto [e, c] = term();
            auto [it, inserted] = terms.emplace(e, c);
            if (!inserted && it->second < c) it->second = c;
            skip();
            if (pos_ == s_.size()) break;
            expect('+');
        }
        return TropicalPolynomial(std::move(terms));
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::pair<Exponent, Rational> term() {
        Exponent e{0, 0};
        Rational c = 0;
        factor(e, c);
        while (peek('*')) {
            ++pos_;
            factor(e, c);
        }
        return {e, c};
    }

    void factor(Exponent& e, Rational& c) {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
        char ch = s_[pos_];
        if (ch == 'x' || ch == 'y') {
            ++pos_;
            long k = 1;
            if (peek('^')) {
                ++pos_;
                skip();
                k = natural();
            }
            (ch == 'x' ? e.i : e.j) += static_cast<int>(k);
            return;
        }
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            c += rational();
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
    }

    long natural() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected a natural number");
        if (pos_ - start > 6) throw ParseError(start, "exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    Rational rational() {
        std::size_t start = pos_;
        if (s_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (digits == pos_) throw ParseError(pos_, "expected digits");
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (d == pos_) throw ParseError(pos_, "expected denominator digits");
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const DomainError&) {
            throw ParseError(start, "invalid rational literal");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline TropicalPolynomial parse(std::string_view text) { return detail::PolynomialParser(text).run(); }

}  // namespace tropic
