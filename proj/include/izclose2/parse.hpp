#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "modrank2.hpp"
#include "poly.hpp"
#include "staircase.hpp"

namespace izclose2 {

/// Recursive-descent parsers for the three text grammars:
///   polynomial: term {("+"|"-") term}
///   term:       [sign] [rational "*"] [x["^"int]] ["*"] [y["^"int]]
///   rational:   int ["/" int]
///   ideal:      monomial {"," monomial}
///   matrix:     "[[" poly {"," poly} "],[" poly {"," poly} "]]"
/// The Unicode minus sign U+2212 is accepted wherever "-" is. Errors carry
/// the byte offset of the failure; parse(render(.)) is the identity.
namespace parse_detail {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    /// Consumes "-" or the UTF-8 minus sign U+2212 (0xE2 0x88 0x92).
    bool eat_minus() {
        if (eat('-')) return true;
        if (pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    BigInt integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "integer");
        BigInt value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return value;
    }

    int small_integer() {
        BigInt v = integer();
        if (v > 1000000) throw ParseError(pos_, "exponent below 10^6");
        return static_cast<int>(v);
    }

    Rat rational() {
        BigInt num = integer();
        if (eat('/')) {
            BigInt den = integer();
            if (den == 0) throw ParseError(pos_, "nonzero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

/// One summand: optional rational coefficient, optional x and y powers.
inline void term(Cursor& cur, bool negative, Poly& into) {
    cur.skip_ws();
    Rat coeff = 1;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = cur.rational();
        saw_anything = true;
        cur.skip_ws();
        if (cur.eat('*')) cur.skip_ws();
    }
    int a = 0, b = 0;
    if (cur.eat('x')) {
        a = cur.eat('^') ? cur.small_integer() : 1;
        saw_anything = true;
        cur.skip_ws();
        if (cur.eat('*')) cur.skip_ws();
    }
    if (cur.eat('y')) {
        b = cur.eat('^') ? cur.small_integer() : 1;
        saw_anything = true;
    }
    if (!saw_anything) throw ParseError(cur.pos(), "coefficient or variable");
    into.add_term({a, b}, negative ? -coeff : coeff);
}

inline Poly polynomial(Cursor& cur) {
    Poly out;
    cur.skip_ws();
    bool negative = cur.eat_minus();
    term(cur, negative, out);
    while (true) {
        cur.skip_ws();
        if (cur.eat('+'))
            term(cur, false, out);
        else if (cur.eat_minus())
            term(cur, true, out);
        else
            break;
    }
    return out;
}

inline std::vector<Poly> poly_list(Cursor& cur, char terminator) {
    std::vector<Poly> out;
    out.push_back(polynomial(cur));
    cur.skip_ws();
    while (cur.eat(',')) {
        out.push_back(polynomial(cur));
        cur.skip_ws();
    }
    if (!cur.eat(terminator))
        throw ParseError(cur.pos(), std::string("',' or '") + terminator + "'");
    return out;
}

} // namespace parse_detail

inline Poly parse_poly(const std::string& text) {
    parse_detail::Cursor cur(text);
    Poly p = parse_detail::polynomial(cur);
    cur.skip_ws();
    if (!cur.done()) throw ParseError(cur.pos(), "end of input");
    return p;
}

/// Comma-separated monomial generators, e.g. "x^3, x*y, y^3". Coefficients
/// are tolerated and discarded (they are units times a monomial as far as the
/// generated ideal is concerned); genuine multi-term entries are rejected.
inline Staircase parse_ideal(const std::string& text) {
    parse_detail::Cursor cur(text);
    std::vector<Monomial> gens;
    while (true) {
        cur.skip_ws();
        std::size_t at = cur.pos();
        Poly p = parse_detail::polynomial(cur);
        if (p.terms().size() != 1) throw ParseError(at, "a single monomial");
        gens.push_back(p.terms().begin()->first);
        cur.skip_ws();
        if (!cur.eat(',')) break;
    }
    if (!cur.done()) throw ParseError(cur.pos(), "',' or end of input");
    return Staircase::minimalize(std::move(gens));
}

/// Row-major 2 x n matrix: "[[p11, p12, ...],[p21, p22, ...]]".
inline ModuleMat parse_matrix(const std::string& text) {
    parse_detail::Cursor cur(text);
    cur.skip_ws();
    if (!cur.eat('[')) throw ParseError(cur.pos(), "'['");
    cur.skip_ws();
    if (!cur.eat('[')) throw ParseError(cur.pos(), "'['");
    std::vector<Poly> top = parse_detail::poly_list(cur, ']');
    cur.skip_ws();
    if (!cur.eat(',')) throw ParseError(cur.pos(), "','");
    cur.skip_ws();
    if (!cur.eat('[')) throw ParseError(cur.pos(), "'['");
    std::vector<Poly> bottom = parse_detail::poly_list(cur, ']');
    cur.skip_ws();
    if (!cur.eat(']')) throw ParseError(cur.pos(), "']'");
    cur.skip_ws();
    if (!cur.done()) throw ParseError(cur.pos(), "end of input");
    if (top.size() != bottom.size()) throw ParseError(cur.pos(), "rows of equal length");
    std::vector<Col> cols;
    for (std::size_t i = 0; i < top.size(); ++i) cols.push_back({top[i], bottom[i]});
    return ModuleMat(std::move(cols));
}

} // namespace izclose2
