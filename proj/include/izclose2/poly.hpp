#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace izclose2 {

/// Exact bivariate polynomial over Q. The ambient ring is Q[x,y] localized at
/// (x,y), so a unit is any polynomial with nonzero constant term. Zero
/// coefficients are never stored; terms are kept leading-first (grlex, x > y).
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexDesc>;

    Poly() = default;
    Poly(const Monomial& m, Rat coeff) {
        if (coeff != 0) terms_[m] = std::move(coeff);
    }
    explicit Poly(Rat constant) : Poly(Monomial{0, 0}, std::move(constant)) {}

    static Poly var_x() { return Poly({1, 0}, 1); }
    static Poly var_y() { return Poly({0, 1}, 1); }
    static Poly monomial(int a, int b) { return Poly({a, b}, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant_term() const { return coeff({0, 0}); }

    int degree() const { // max total degree, -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    int min_degree() const { // min total degree of a term, -1 for zero
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = (d < 0) ? m.degree() : std::min(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& rhs) const {
        Poly out = *this;
        for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
        return out;
    }

    Poly operator-(const Poly& rhs) const {
        Poly out = *this;
        for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
        return out;
    }

    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    Poly operator*(const Poly& rhs) const {
        Poly out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
        return out;
    }

    Poly operator*(const Rat& scalar) const {
        Poly out;
        if (scalar == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_[m] = c * scalar;
        return out;
    }

    bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

    /// Drop all terms of total degree >= bound (representative mod m^bound).
    Poly truncated(int bound) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (m.degree() < bound) out.terms_[m] = c;
        return out;
    }

private:
    TermMap terms_;
};

inline Poly operator*(const Rat& scalar, const Poly& p) { return p * scalar; }

/// Unit test for the localized ring: f is invertible iff f(0,0) != 0.
inline bool is_local_unit(const Poly& p) { return p.constant_term() != 0; }

/// A linear change of coordinates x -> u00*x + u01*y, y -> u10*x + u11*y
/// given by an invertible constant 2x2 matrix.
struct GL2Change {
    std::array<std::array<Rat, 2>, 2> u;

    Rat det() const { return u[0][0] * u[1][1] - u[0][1] * u[1][0]; }

    static GL2Change identity() { return {{{{1, 0}, {0, 1}}}}; }
    static GL2Change swap_xy() { return {{{{0, 1}, {1, 0}}}}; }

    GL2Change inverse() const {
        Rat d = det();
        if (d == 0) throw Error("singular coordinate change");
        return {{{{u[1][1] / d, -u[0][1] / d}, {-u[1][0] / d, u[0][0] / d}}}};
    }
};

/// Ring homomorphism induced by a GL2 coordinate change.
inline Poly apply_change(const Poly& p, const GL2Change& change) {
    if (change.det() == 0) throw Error("singular coordinate change");
    Poly nx = Poly({1, 0}, change.u[0][0]) + Poly({0, 1}, change.u[0][1]);
    Poly ny = Poly({1, 0}, change.u[1][0]) + Poly({0, 1}, change.u[1][1]);
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly term{Rat(c)};
        for (int i = 0; i < m.a; ++i) term = term * nx;
        for (int i = 0; i < m.b; ++i) term = term * ny;
        out = out + term;
    }
    return out;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Canonical rendering in the documented grammar; parse(render(p)) == p.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m.a == 0 && m.b == 0) {
            s += rat_to_string(abs_c);
        } else {
            if (abs_c != 1) s += rat_to_string(abs_c) + "*";
            s += to_string(m);
        }
    }
    return s;
}

} // namespace izclose2
