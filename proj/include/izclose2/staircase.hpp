#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace izclose2 {

class Staircase;
inline Staircase newton_closure(std::vector<Monomial> gens);

/// An m-primary monomial ideal given by its minimal monomial generators,
/// stored as lattice corners (a_i, b_i) with a strictly decreasing and b
/// strictly increasing. Always contains a pure power of x and of y.
class Staircase {
public:
    /// Builds the ideal generated by `gens`, discarding non-minimal
    /// generators. Throws NotMPrimary when a pure power of x or y is missing.
    static Staircase minimalize(std::vector<Monomial> gens) {
        bool pure_x = false, pure_y = false;
        for (const auto& g : gens) {
            if (g.b == 0) pure_x = true;
            if (g.a == 0) pure_y = true;
        }
        if (!pure_x || !pure_y)
            throw NotMPrimary("generators must include a pure power of x and of y");
        std::vector<Monomial> minimal;
        for (const auto& g : gens) {
            bool dominated = false;
            for (const auto& h : gens)
                if (!(h == g) && h.divides(g)) { dominated = true; break; }
            if (!dominated && std::find(minimal.begin(), minimal.end(), g) == minimal.end())
                minimal.push_back(g);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [](const Monomial& l, const Monomial& r) { return l.a > r.a; });
        return Staircase(std::move(minimal));
    }

    static Staircase maximal_ideal() { return minimalize({{1, 0}, {0, 1}}); }

    static Staircase power_of_m(int k) {
        std::vector<Monomial> gens;
        for (int a = 0; a <= k; ++a) gens.push_back({a, k - a});
        return minimalize(std::move(gens));
    }

    const std::vector<Monomial>& corners() const { return corners_; }

    int width() const { return corners_.front().a; }  // exponent of the pure x power
    int height() const { return corners_.back().b; }  // exponent of the pure y power

    /// Staircase height at column a: minimal b with x^a y^b in the ideal.
    int height_at(int column) const {
        int best = -1;
        for (const auto& c : corners_)
            if (c.a <= column && (best < 0 || c.b < best)) best = c.b;
        return best < 0 ? height() : best;
    }

    bool contains(const Monomial& m) const {
        for (const auto& c : corners_)
            if (c.divides(m)) return true;
        return false;
    }

    /// Membership of a polynomial, monomial by monomial. Valid in the
    /// localized ring: if u*f lies in a monomial ideal for a unit u, the
    /// grlex-minimal term of u*f has the same monomial as that of f, and
    /// induction on the term count strips f down to generators.
    /// (Property-tested against trunclin::ideal_membership.)
    bool contains_poly(const Poly& f) const {
        for (const auto& [m, c] : f.terms())
            if (!contains(m)) return false;
        return true;
    }

    bool operator==(const Staircase& rhs) const { return corners_ == rhs.corners_; }

    /// ord(I): the largest k with I inside m^k = minimum total degree of a
    /// generator.
    int order() const {
        int d = corners_.front().degree();
        for (const auto& c : corners_) d = std::min(d, c.degree());
        return d;
    }

    /// dim_Q(R/I) = number of lattice points under the staircase.
    long colength() const {
        long total = 0;
        for (int a = 0; a < width(); ++a) total += height_at(a);
        return total;
    }

    /// Minimal s with m^s inside I.
    int power_containment_degree() const {
        int s = 0;
        for (int a = 0; a <= width(); ++a) s = std::max(s, a + height_at(a));
        return s;
    }

    std::vector<Poly> generator_polys() const {
        std::vector<Poly> out;
        for (const auto& c : corners_) out.push_back(Poly(c, 1));
        return out;
    }

    friend Staircase ideal_product(const Staircase& lhs, const Staircase& rhs) {
        std::vector<Monomial> gens;
        for (const auto& g : lhs.corners_)
            for (const auto& h : rhs.corners_) gens.push_back(g * h);
        return minimalize(std::move(gens));
    }

    friend Staircase ideal_sum(const Staircase& lhs, const Staircase& rhs) {
        std::vector<Monomial> gens = lhs.corners_;
        gens.insert(gens.end(), rhs.corners_.begin(), rhs.corners_.end());
        return minimalize(std::move(gens));
    }

    /// (I : J) over all generators of J.
    friend Staircase colon(const Staircase& num, const Staircase& den) {
        // (I : x^c y^d) has heights max(0, s(a+c) - d); intersect over gens.
        int w = num.width();
        std::vector<int> heights(w + 1, 0);
        for (int a = 0; a <= w; ++a) {
            int best = -1;
            for (const auto& g : den.corners_) {
                int h = std::max(0, num.height_at(a + g.a) - g.b);
                if (best < 0 || h > best) best = h; // intersection takes the max
            }
            heights[a] = best;
        }
        return from_heights(heights);
    }

    Staircase pow(int k) const {
        Staircase out = *this;
        for (int i = 1; i < k; ++i) out = ideal_product(out, *this);
        return out;
    }

    bool is_integrally_closed() const { return *this == newton_closure(corners_); }

    std::string render_generators() const {
        std::string s;
        for (const auto& c : corners_) {
            if (!s.empty()) s += ", ";
            s += izclose2::to_string(c);
        }
        return s;
    }

    /// ASCII grid, rows printed from the top y down to y = 0; '#' marks
    /// monomials in the ideal.
    std::string render_ascii() const {
        std::string out;
        for (int b = height(); b >= 0; --b) {
            for (int a = 0; a <= width(); ++a)
                out += contains({a, b}) ? '#' : '.';
            out += '\n';
        }
        return out;
    }

    /// Builds a staircase from non-increasing column heights (index = column
    /// a, last entry 0).
    static Staircase from_heights(const std::vector<int>& heights) {
        std::vector<Monomial> gens;
        for (int a = 0; a < static_cast<int>(heights.size()); ++a)
            if (a == 0 || heights[a] < heights[a - 1]) gens.push_back({a, heights[a]});
        if (gens.empty() || gens.back().b != 0)
            gens.push_back({static_cast<int>(heights.size()), 0});
        return minimalize(std::move(gens));
    }

private:
    explicit Staircase(std::vector<Monomial> corners) : corners_(std::move(corners)) {}
    std::vector<Monomial> corners_;
};

/// Lower-left convex hull of the exponent set, from (0, h) to (w, 0).
/// The monomials on or above this chain are exactly the integral closure.
struct NewtonPolygon {
    std::vector<Monomial> vertices;

    static NewtonPolygon of(const Staircase& ideal) {
        // Corners sorted by a ascending give b descending; Andrew-style chain,
        // popping clockwise and collinear middle points.
        std::vector<Monomial> pts = ideal.corners();
        std::sort(pts.begin(), pts.end(),
                  [](const Monomial& l, const Monomial& r) { return l.a < r.a; });
        std::vector<Monomial> hull;
        auto cross = [](const Monomial& o, const Monomial& u, const Monomial& v) {
            return static_cast<long>(u.a - o.a) * (v.b - o.b) -
                   static_cast<long>(u.b - o.b) * (v.a - o.a);
        };
        for (const auto& p : pts) {
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        return {hull};
    }

    /// Minimal integer b with (a, b) on or above the hull chain.
    int min_height(int column) const {
        if (column >= vertices.back().a) return 0;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            const auto& v1 = vertices[i];
            const auto& v2 = vertices[i + 1];
            if (column < v1.a || column > v2.a) continue;
            // value = v1.b + (column - v1.a) * (v2.b - v1.b) / (v2.a - v1.a), rounded up
            long num = static_cast<long>(v1.b) * (v2.a - v1.a) +
                       static_cast<long>(column - v1.a) * (v2.b - v1.b);
            long den = v2.a - v1.a;
            long q = num / den;
            if (q * den < num) ++q; // ceil for positive den
            return static_cast<int>(q);
        }
        return vertices.front().b;
    }

    /// Twice the area between the axes and the chain; this is the
    /// Hilbert-Samuel multiplicity of the closed ideal.
    long twice_area_below() const {
        long twice = 0;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            twice += static_cast<long>(vertices[i + 1].a - vertices[i].a) *
                     (vertices[i].b + vertices[i + 1].b);
        return twice;
    }
};

/// Integral closure of the monomial ideal generated by `gens`: all lattice
/// points on or above the lower convex hull of the exponents. Idempotent.
inline Staircase newton_closure(std::vector<Monomial> gens) {
    Staircase ideal = Staircase::minimalize(std::move(gens));
    NewtonPolygon hull = NewtonPolygon::of(ideal);
    int w = ideal.width();
    std::vector<int> heights(w + 1);
    for (int a = 0; a <= w; ++a) heights[a] = hull.min_height(a);
    return Staircase::from_heights(heights);
}

/// e(I): twice the area between the axes and the Newton polygon. Requires I
/// integrally closed; equals the colength of any minimal reduction.
inline long multiplicity(const Staircase& ideal) {
    if (!ideal.is_integrally_closed())
        throw NotClosed("multiplicity requires an integrally closed ideal");
    return NewtonPolygon::of(ideal).twice_area_below();
}

/// One factor in the Zariski decomposition: the simple ideal
/// newton_closure({x^d, y^e}) with gcd(d, e) = 1, raised to `mult`.
struct SimpleFactor {
    int d = 1;
    int e = 1;
    int mult = 1;

    bool operator==(const SimpleFactor&) const = default;

    Staircase expand() const { return newton_closure({{d, 0}, {0, e}}).pow(mult); }
};

/// Zariski's unique factorization for integrally closed monomial ideals:
/// each primitive Newton-polygon edge of displacement (d*g, -e*g) contributes
/// the simple factor (d, e) with multiplicity g. Factors are listed in hull
/// order, left to right (ascending slope d/e).
inline std::vector<SimpleFactor> zariski_factor(const Staircase& ideal) {
    if (!ideal.is_integrally_closed())
        throw NotClosed("zariski_factor requires an integrally closed ideal");
    NewtonPolygon hull = NewtonPolygon::of(ideal);
    std::vector<SimpleFactor> factors;
    for (std::size_t i = 0; i + 1 < hull.vertices.size(); ++i) {
        int dx = hull.vertices[i + 1].a - hull.vertices[i].a;
        int dy = hull.vertices[i].b - hull.vertices[i + 1].b;
        int g = std::gcd(dx, dy);
        factors.push_back({dx / g, dy / g, g});
    }
    return factors;
}

inline bool is_simple(const Staircase& ideal) {
    auto factors = zariski_factor(ideal);
    return factors.size() == 1 && factors[0].mult == 1;
}

} // namespace izclose2
