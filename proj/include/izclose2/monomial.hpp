#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace izclose2 {

/// A monomial x^a y^b with non-negative exponents.
struct Monomial {
    int a = 0; // exponent of x
    int b = 0; // exponent of y

    int degree() const { return a + b; }
    bool divides(const Monomial& other) const { return a <= other.a && b <= other.b; }
    Monomial operator*(const Monomial& other) const { return {a + other.a, b + other.b}; }
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x > y: first by total degree, then by
// exponent of x. This is the canonical term order for display and equality.
inline int grlex_cmp(const Monomial& lhs, const Monomial& rhs) {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree() ? -1 : 1;
    if (lhs.a != rhs.a) return lhs.a < rhs.a ? -1 : 1;
    return 0;
}

// Comparator placing larger monomials first (leading term first in maps).
struct GrlexDesc {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        return grlex_cmp(lhs, rhs) > 0;
    }
};

struct GrlexAsc {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        return grlex_cmp(lhs, rhs) < 0;
    }
};

/// All monomials of total degree exactly d, in grlex-descending order.
inline std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a) out.push_back({a, d - a});
    return out;
}

/// All monomials of total degree < bound, grlex-ascending. Size = bound(bound+1)/2.
inline std::vector<Monomial> monomials_below_degree(int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d < bound; ++d)
        for (int a = 0; a <= d; ++a) out.push_back({a, d - a});
    return out;
}

inline std::string to_string(const Monomial& m) {
    if (m.a == 0 && m.b == 0) return "1";
    std::string s;
    if (m.a > 0) {
        s += "x";
        if (m.a > 1) s += "^" + std::to_string(m.a);
    }
    if (m.b > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (m.b > 1) s += "^" + std::to_string(m.b);
    }
    return s;
}

} // namespace izclose2
