#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "staircase.hpp"
#include "trunclin.hpp"

namespace izclose2 {

/// Total order on polynomials for canonical display: compare term lists
/// leading-first (grlex desc), then coefficients.
inline int poly_cmp(const Poly& lhs, const Poly& rhs) {
    auto it = lhs.terms().begin();
    auto jt = rhs.terms().begin();
    for (; it != lhs.terms().end() && jt != rhs.terms().end(); ++it, ++jt) {
        int c = grlex_cmp(it->first, jt->first);
        if (c != 0) return c;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    }
    if (it != lhs.terms().end()) return 1;
    if (jt != rhs.terms().end()) return -1;
    return 0;
}

inline int col_cmp(const Col& lhs, const Col& rhs) {
    int c = poly_cmp(lhs.first, rhs.first);
    return c != 0 ? c : poly_cmp(lhs.second, rhs.second);
}

/// A rank-two module M inside F = R^2, generated by the columns of a 2 x n
/// polynomial matrix. Column order is irrelevant to the semantics; display
/// order is canonical (columns supported in the first row first, grlex desc).
class ModuleMat {
public:
    explicit ModuleMat(std::vector<Col> cols) : cols_(std::move(cols)) {
        canonicalize();
    }

    const std::vector<Col>& cols() const { return cols_; }
    std::size_t ncols() const { return cols_.size(); }

    bool operator==(const ModuleMat& rhs) const { return cols_ == rhs.cols_; }

    std::string render() const {
        std::string top, bottom;
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) { top += ", "; bottom += ", "; }
            top += to_string(cols_[i].first);
            bottom += to_string(cols_[i].second);
        }
        return "[[" + top + "],[" + bottom + "]]";
    }

private:
    void canonicalize() {
        std::sort(cols_.begin(), cols_.end(),
                  [](const Col& l, const Col& r) { return col_cmp(l, r) > 0; });
    }
    std::vector<Col> cols_;
};

/// All nonzero 2x2 column-pair determinants (the ideal I_2(M) = I(M)).
/// Throws RankDeficient when every determinant vanishes.
inline std::vector<Poly> minors2(const ModuleMat& mat) {
    std::vector<Poly> out;
    const auto& cols = mat.cols();
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            Poly det = cols[i].first * cols[j].second - cols[i].second * cols[j].first;
            if (det.is_zero()) continue;
            if (std::find(out.begin(), out.end(), det) == out.end() &&
                std::find(out.begin(), out.end(), -det) == out.end())
                out.push_back(det);
        }
    if (out.empty()) throw RankDeficient("all 2x2 minors vanish");
    return out;
}

/// The ideal of entries I_1(M).
inline std::vector<Poly> entries_ideal(const ModuleMat& mat) {
    std::vector<Poly> out;
    for (const auto& col : mat.cols()) {
        if (!col.first.is_zero() &&
            std::find(out.begin(), out.end(), col.first) == out.end())
            out.push_back(col.first);
        if (!col.second.is_zero() &&
            std::find(out.begin(), out.end(), col.second) == out.end())
            out.push_back(col.second);
    }
    return out;
}

/// True iff every entry lies in m. A false answer signals a free direct
/// summand; such modules are rejected for witness purposes.
inline bool in_mF(const ModuleMat& mat) {
    for (const auto& col : mat.cols())
        if (col.first.constant_term() != 0 || col.second.constant_term() != 0)
            return false;
    return true;
}

/// I(M) = target, decided by Nakayama-certified equality.
inline bool minors_equal(const ModuleMat& mat, const Staircase& target) {
    return ideal_equals_staircase(minors2(mat), target);
}

/// newton_closure(minors2(M)) when every minor is a single term; throws
/// NotMonomialClosure otherwise.
inline Staircase monomial_minors_closure(const ModuleMat& mat) {
    std::vector<Monomial> gens;
    for (const auto& minor : minors2(mat)) {
        if (minor.terms().size() != 1)
            throw NotMonomialClosure("minor " + to_string(minor) + " is not a monomial");
        gens.push_back(minor.terms().begin()->first);
    }
    return newton_closure(std::move(gens));
}

/// Certifies m^D F inside M for D = pcd(m * Ibar) + 1 by exhibiting exact
/// combinations (g, 0) and (0, g) in M for every generator g of Ibar.
/// Throws CannotCertify when no witness exists within the degree bound.
inline int scaled_free_check(const ModuleMat& mat, const Staircase& ibar) {
    int pcd = ibar.power_containment_degree();
    for (const auto& corner : ibar.corners()) {
        Poly g(corner, 1);
        for (int side = 0; side < 2; ++side) {
            Col target = side == 0 ? Col{g, Poly()} : Col{Poly(), g};
            bool found = false;
            // Witness coefficients usually stay near pcd; escalate once before
            // giving up, since closure elements can force larger combinations.
            for (int bound : {pcd + 2, 2 * pcd + 4}) {
                if (find_unit_combination(target, mat.cols(), bound)) { found = true; break; }
            }
            if (!found)
                throw CannotCertify("no combination for (" + to_string(target.first) + ", " +
                                        to_string(target.second) + ")",
                                    2 * pcd + 4);
        }
    }
    Staircase m_ibar = ideal_product(Staircase::maximal_ideal(), ibar);
    return m_ibar.power_containment_degree() + 1;
}

struct ClosureResult {
    bool closed;
    ModuleMat closure_gens;          // minimal generators of the closure
    std::vector<Col> new_elements;   // minimal generators outside M
    int cutoff;                      // certified truncation degree
};

namespace detail {

inline Col normalize_col(const TruncSpace& space, const QVec& vec) {
    Rat lead;
    for (const auto& c : vec)
        if (c != 0) { lead = c; break; }
    Col out;
    for (std::size_t d = 0; d < space.size(); ++d) {
        // recover the monomial from its index
        // indices are grlex-ascending: solve deg*(deg+1)/2 + a = d
        int deg = 0;
        std::size_t base = 0;
        while (base + deg + 1 <= d) { base += deg + 1; ++deg; }
        Monomial m{static_cast<int>(d - base), deg - static_cast<int>(d - base)};
        if (vec[d] != 0) out.first.add_term(m, vec[d] / lead);
        if (vec[space.size() + d] != 0) out.second.add_term(m, vec[space.size() + d] / lead);
    }
    return out;
}

/// Greedy minimal-generator selection: candidates whose images in C/mC are
/// independent, preferring low degree then canonical order. `span` must
/// already contain mC (and m^{level} F implicitly via truncation).
inline std::vector<Col> select_minimal(std::vector<Col> candidates, RowSpace& span,
                                       const TruncSpace& space) {
    auto degree_of = [](const Col& c) {
        int d1 = c.first.is_zero() ? 1'000'000 : c.first.min_degree();
        int d2 = c.second.is_zero() ? 1'000'000 : c.second.min_degree();
        return std::min(d1, d2);
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Col& l, const Col& r) {
        int dl = degree_of(l), dr = degree_of(r);
        if (dl != dr) return dl < dr;
        return col_cmp(l, r) > 0;
    });
    std::vector<Col> picked;
    for (const auto& cand : candidates) {
        QVec v = space.to_vec2(cand.first.truncated(space.D), cand.second.truncated(space.D));
        if (span.add(std::move(v))) picked.push_back(cand);
    }
    return picked;
}

} // namespace detail

/// Integral closure of M by the determinantal criterion: v = (p, q) is in the
/// closure iff p*b_i - q*a_i lies in Ibar for every generator column
/// (a_i, b_i). Requires Ibar = newton_closure(minors2(M)), supplied as a
/// staircase. Solved exactly on degree-< D representatives, D = pcd(Ibar);
/// the m^D F part is in the closure unconditionally.
inline ClosureResult module_closure(const ModuleMat& mat, const Staircase& ibar) {
    for (const auto& minor : minors2(mat))
        if (!ibar.contains_poly(minor))
            throw Error("supplied closure ideal does not contain all minors");

    const int D = ibar.power_containment_degree();
    TruncSpace space(D);
    std::vector<Monomial> unknowns = monomials_below_degree(D);
    const std::size_t T = unknowns.size();

    // Constraint rows: coefficient of each monomial outside Ibar in
    // p*b_i - q*a_i must vanish. Monomials of degree >= D lie in Ibar.
    std::vector<Monomial> forbidden;
    for (const auto& nu : monomials_below_degree(D))
        if (!ibar.contains(nu)) forbidden.push_back(nu);

    QMat constraints;
    for (const auto& [a_i, b_i] : mat.cols()) {
        for (const auto& nu : forbidden) {
            QVec row(2 * T, Rat(0));
            bool nonzero = false;
            for (std::size_t k = 0; k < T; ++k) {
                Rat cp = (Poly(unknowns[k], 1) * b_i).coeff(nu);
                Rat cq = (Poly(unknowns[k], 1) * a_i).coeff(nu);
                if (cp != 0) { row[k] = cp; nonzero = true; }
                if (cq != 0) { row[T + k] = -cq; nonzero = true; }
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    }

    std::vector<Col> candidates = mat.cols();
    if (constraints.empty()) {
        // every degree-< D vector satisfies the criterion
        for (const auto& mu : unknowns) {
            candidates.push_back({Poly(mu, 1), Poly()});
            candidates.push_back({Poly(), Poly(mu, 1)});
        }
    } else {
        for (const auto& vec : nullspace(std::move(constraints), 2 * T))
            candidates.push_back(detail::normalize_col(space, vec));
    }
    for (const auto& mu : monomials_of_degree(D)) {
        candidates.push_back({Poly(mu, 1), Poly()});
        candidates.push_back({Poly(), Poly(mu, 1)});
    }

    // Minimal generators of the closure C, modulo mC (m^{D+1} F is inside mC).
    TruncSpace level(D + 1);
    RowSpace mc_span(2 * level.size());
    for (const auto& cand : candidates)
        for (const auto& mu : monomials_below_degree(D + 1)) {
            if (mu.degree() == 0) continue;
            Poly h(mu, 1);
            mc_span.add(level.to_vec2((cand.first * h).truncated(D + 1),
                                      (cand.second * h).truncated(D + 1)));
        }
    std::vector<Col> minimal = detail::select_minimal(candidates, mc_span, level);

    // Closedness: C = M iff C is inside M + mC (Nakayama).
    RowSpace m_plus_mc(2 * level.size());
    for (const auto& col : mat.cols())
        for (const auto& mu : monomials_below_degree(D + 1))
            m_plus_mc.add(level.to_vec2((col.first * Poly(mu, 1)).truncated(D + 1),
                                        (col.second * Poly(mu, 1)).truncated(D + 1)));
    for (const auto& cand : minimal)
        for (const auto& mu : monomials_below_degree(D + 1)) {
            if (mu.degree() == 0) continue;
            m_plus_mc.add(level.to_vec2((cand.first * Poly(mu, 1)).truncated(D + 1),
                                        (cand.second * Poly(mu, 1)).truncated(D + 1)));
        }
    std::vector<Col> new_elements;
    for (const auto& gen : minimal)
        if (!m_plus_mc.contains(level.to_vec2(gen.first.truncated(D + 1),
                                              gen.second.truncated(D + 1))))
            new_elements.push_back(gen);

    ModuleMat closure(minimal);
    return {new_elements.empty(), closure, new_elements, D};
}

/// Equational-criterion consequence: each coordinate of an integral element
/// is integral over the corresponding row ideal. Monomial rows only; a
/// non-monomial row throws NotMonomialClosure.
inline bool row_integrality_filter(const Col& v, const ModuleMat& mat) {
    auto row_closure = [&](bool second) {
        std::vector<Monomial> gens;
        for (const auto& col : mat.cols()) {
            const Poly& entry = second ? col.second : col.first;
            if (entry.is_zero()) continue;
            if (entry.terms().size() != 1)
                throw NotMonomialClosure("row entry " + to_string(entry) + " is not a monomial");
            gens.push_back(entry.terms().begin()->first);
        }
        return newton_closure(std::move(gens));
    };
    return row_closure(false).contains_poly(v.first) &&
           row_closure(true).contains_poly(v.second);
}

/// Minimal generators of M and mu(M) = dim M/mM, with a scaled_free_check
/// certified cutoff. When M is integrally closed this equals ord(Ibar) + 2.
inline std::pair<ModuleMat, int> minimal_generators(const ModuleMat& mat, const Staircase& ibar) {
    int D = scaled_free_check(mat, ibar);
    TruncSpace level(D + 1);
    RowSpace mm_span(2 * level.size());
    for (const auto& col : mat.cols())
        for (const auto& mu : monomials_below_degree(D + 1)) {
            if (mu.degree() == 0) continue;
            mm_span.add(level.to_vec2((col.first * Poly(mu, 1)).truncated(D + 1),
                                      (col.second * Poly(mu, 1)).truncated(D + 1)));
        }
    std::vector<Col> minimal = detail::select_minimal(mat.cols(), mm_span, level);
    return {ModuleMat(minimal), static_cast<int>(minimal.size())};
}

// ---------------------------------------------------------------------------
// Transcripts: every isomorphism used in a decomposition is recorded as an
// exact, mechanically replayable operation.

struct TranscriptOp {
    enum class Kind { RowChange, SwapVars, Adjoin, ColAddMultiple, RemoveZero, Permute };
    Kind kind;
    GL2Change row_change = GL2Change::identity();
    Col column;                       // Adjoin
    std::size_t dst = 0, src = 0;     // ColAddMultiple / RemoveZero (dst)
    Poly coeff;                       // ColAddMultiple: col[dst] += coeff * col[src]
    std::vector<std::size_t> perm;    // Permute: new_cols[i] = cols[perm[i]]
};

using Transcript = std::vector<TranscriptOp>;

/// Applies a transcript to raw columns. Throws if a RemoveZero target is not
/// exactly zero, so replays cannot silently drift.
inline std::vector<Col> replay_transcript(std::vector<Col> cols, const Transcript& ops) {
    for (const auto& op : ops) {
        switch (op.kind) {
        case TranscriptOp::Kind::RowChange:
            for (auto& [p, q] : cols) {
                Poly np = op.row_change.u[0][0] * p + op.row_change.u[0][1] * q;
                Poly nq = op.row_change.u[1][0] * p + op.row_change.u[1][1] * q;
                p = np;
                q = nq;
            }
            break;
        case TranscriptOp::Kind::SwapVars:
            for (auto& [p, q] : cols) {
                p = apply_change(p, GL2Change::swap_xy());
                q = apply_change(q, GL2Change::swap_xy());
            }
            break;
        case TranscriptOp::Kind::Adjoin:
            cols.push_back(op.column);
            break;
        case TranscriptOp::Kind::ColAddMultiple:
            cols[op.dst].first = cols[op.dst].first + op.coeff * cols[op.src].first;
            cols[op.dst].second = cols[op.dst].second + op.coeff * cols[op.src].second;
            break;
        case TranscriptOp::Kind::RemoveZero:
            if (!cols[op.dst].first.is_zero() || !cols[op.dst].second.is_zero())
                throw Error("transcript replay: RemoveZero on a nonzero column");
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(op.dst));
            break;
        case TranscriptOp::Kind::Permute: {
            std::vector<Col> next(op.perm.size());
            for (std::size_t i = 0; i < op.perm.size(); ++i) next[i] = cols[op.perm[i]];
            cols = std::move(next);
            break;
        }
        }
    }
    return cols;
}

/// Parameters of the excluded family I = (x^m, x y, y^n), m, n >= 2.
struct FamilyParams {
    int m = 2;
    int n = 2;
    bool operator==(const FamilyParams&) const = default;

    Staircase ideal() const {
        return Staircase::minimalize({{m, 0}, {1, 1}, {0, n}});
    }
};

enum class CertificateKind { MSQUARE, DECOM, IMAGE, SIMPLE_CLASH, FACTOR_CLASH, NONEXIS_DECOMP };

inline std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::MSQUARE: return "MSQUARE";
    case CertificateKind::DECOM: return "DECOM";
    case CertificateKind::IMAGE: return "IMAGE";
    case CertificateKind::SIMPLE_CLASH: return "SIMPLE_CLASH";
    case CertificateKind::FACTOR_CLASH: return "FACTOR_CLASH";
    case CertificateKind::NONEXIS_DECOMP: return "NONEXIS_DECOMP";
    }
    return "?";
}

/// A machine-verified indecomposability or decomposability argument. Every
/// fact listed was checked by this library before the certificate was issued.
struct Certificate {
    CertificateKind kind;
    std::vector<std::pair<std::string, std::string>> facts;
};

struct NonexisResult {
    std::pair<Staircase, Staircase> summands; // for the input parameters
    Transcript transcript;
    ModuleMat block;                          // replay target (working coordinates)
    std::vector<Col> block_cols;              // exact column order of the block form
    CertificateKind kind;                     // MSQUARE when m = n = 2
};

namespace detail {

/// Basis of { (c1, c2) in Q^2 : c1 * v1 + c2 * v2 in span }.
inline std::vector<std::array<Rat, 2>>
constant_solutions(const ModuleSpan& span, QVec v1, QVec v2) {
    span.residual(v1);
    span.residual(v2);
    QMat a(v1.size(), QVec(2, Rat(0)));
    for (std::size_t i = 0; i < v1.size(); ++i) {
        a[i][0] = v1[i];
        a[i][1] = v2[i];
    }
    std::vector<std::array<Rat, 2>> out;
    for (const auto& v : nullspace(std::move(a), 2)) out.push_back({v[0], v[1]});
    return out;
}

} // namespace detail

/// Executes the normalization that rewrites an integrally closed module with
/// I(M) = (x^m, xy, y^n) as the direct sum (x, y^{n-1}) + (x^{m-1}, y):
/// after a constant row change pinned down by the constant multiples of x
/// and y lying in M, the module equals the canonical block module exactly,
/// and every remaining column reduces to zero against the four block columns
/// by monomial-wise division. The m = n = 2 case is the maximal-ideal square
/// and routes to the MSQUARE certificate.
inline NonexisResult decompose_nonexis(const ModuleMat& mat, const FamilyParams& params) {
    if (params.m < 2 || params.n < 2)
        throw NotInFamily("family parameters require m, n >= 2");
    if (!in_mF(mat))
        throw NotInFamily("module has a unit entry (free summand)");
    if (!minors_equal(mat, params.ideal()))
        throw NotInFamily("I(M) differs from (x^m, x*y, y^n)");

    Transcript transcript;
    std::vector<Col> cols = mat.cols();
    int wm = params.m, wn = params.n;
    if (wm < 3 && wn >= 3) {
        TranscriptOp op;
        op.kind = TranscriptOp::Kind::SwapVars;
        transcript.push_back(op);
        cols = replay_transcript(std::move(cols), {transcript.back()});
        std::swap(wm, wn);
    }
    FamilyParams working{wm, wn};
    Staircase ideal = working.ideal();

    int cutoff;
    try {
        cutoff = scaled_free_check(ModuleMat(cols), ideal);
    } catch (const CannotCertify& e) {
        throw NormalizationFailed("certified-cutoff", e.what());
    }

    // Constant row change sending the x- and y-multiple lines to the axes.
    {
        ModuleSpan span(cols, cutoff);
        const TruncSpace& ts = span.space();
        auto vx = detail::constant_solutions(span, ts.to_vec2(Poly::var_x(), Poly()),
                                             ts.to_vec2(Poly(), Poly::var_x()));
        auto vy = detail::constant_solutions(span, ts.to_vec2(Poly::var_y(), Poly()),
                                             ts.to_vec2(Poly(), Poly::var_y()));
        if (vx.empty() || vy.empty())
            throw NormalizationFailed("unit-locate", "no constant multiple of x or y in M");
        std::array<Rat, 2> u1 = vx.front();
        std::optional<std::array<Rat, 2>> u2;
        for (const auto& cand : vy)
            if (u1[0] * cand[1] - u1[1] * cand[0] != 0) { u2 = cand; break; }
        if (!u2)
            throw NormalizationFailed("unit-locate", "x- and y-multiple lines coincide");
        GL2Change p{{{{u1[0], (*u2)[0]}, {u1[1], (*u2)[1]}}}};
        GL2Change q = p.inverse();
        bool identity = q.u[0][0] == 1 && q.u[0][1] == 0 && q.u[1][0] == 0 && q.u[1][1] == 1;
        if (!identity) {
            TranscriptOp op;
            op.kind = TranscriptOp::Kind::RowChange;
            op.row_change = q;
            transcript.push_back(op);
            cols = replay_transcript(std::move(cols), {transcript.back()});
        }
    }

    // In the new coordinates the module must equal (x, y^{n-1}) + (x^{m-1}, y)
    // on the nose; adjoin the four block columns after verifying membership.
    std::vector<Col> targets = {
        {Poly::var_x(), Poly()},
        {Poly::monomial(0, wn - 1), Poly()},
        {Poly(), Poly::monomial(wm - 1, 0)},
        {Poly(), Poly::var_y()},
    };
    {
        ModuleSpan span(cols, cutoff);
        for (const auto& t : targets) {
            if (!span.contains(t))
                throw NormalizationFailed("target-membership",
                                          "block column (" + to_string(t.first) + ", " +
                                              to_string(t.second) + ") not in module");
            TranscriptOp op;
            op.kind = TranscriptOp::Kind::Adjoin;
            op.column = t;
            transcript.push_back(op);
            cols.push_back(t);
        }
    }

    // Reduce every original column to zero against the block columns. First
    // entries lie in (I : y) = (x, y^{n-1}), second entries in
    // (I : x) = (x^{m-1}, y); both splits are monomial-wise.
    const std::size_t original = cols.size() - 4;
    const std::size_t ix = original, iyn = original + 1, ixm = original + 2, iy = original + 3;
    for (std::size_t i = 0; i < original; ++i) {
        Poly fx, fyn, gxm, gy;
        for (const auto& [mono, c] : cols[i].first.terms()) {
            if (mono.a >= 1) fx.add_term({mono.a - 1, mono.b}, c);
            else if (mono.b >= wn - 1) fyn.add_term({mono.a, mono.b - (wn - 1)}, c);
            else
                throw NormalizationFailed("row1-reduction",
                                          "first entry has a term outside (x, y^{n-1})");
        }
        for (const auto& [mono, c] : cols[i].second.terms()) {
            if (mono.b >= 1) gy.add_term({mono.a, mono.b - 1}, c);
            else if (mono.a >= wm - 1) gxm.add_term({mono.a - (wm - 1), mono.b}, c);
            else
                throw NormalizationFailed("row2-reduction",
                                          "second entry has a term outside (x^{m-1}, y)");
        }
        auto emit = [&](std::size_t src, const Poly& coeff) {
            if (coeff.is_zero()) return;
            TranscriptOp op;
            op.kind = TranscriptOp::Kind::ColAddMultiple;
            op.dst = i;
            op.src = src;
            op.coeff = -coeff;
            transcript.push_back(op);
            cols = replay_transcript(std::move(cols), {transcript.back()});
        };
        emit(ix, fx);
        emit(iyn, fyn);
        emit(ixm, gxm);
        emit(iy, gy);
        if (!cols[i].first.is_zero() || !cols[i].second.is_zero())
            throw NormalizationFailed("column-elimination", "column did not reduce to zero");
    }
    for (std::size_t i = original; i-- > 0;) {
        TranscriptOp op;
        op.kind = TranscriptOp::Kind::RemoveZero;
        op.dst = i;
        transcript.push_back(op);
        cols = replay_transcript(std::move(cols), {transcript.back()});
    }

    // Block column order [[y^{n-1}, 0, 0, x], [0, x^{m-1}, y, 0]].
    {
        TranscriptOp op;
        op.kind = TranscriptOp::Kind::Permute;
        op.perm = {1, 2, 3, 0};
        transcript.push_back(op);
        cols = replay_transcript(std::move(cols), {transcript.back()});
    }

    NonexisResult result{
        {Staircase::minimalize({{1, 0}, {0, params.n - 1}}),
         Staircase::minimalize({{params.m - 1, 0}, {0, 1}})},
        std::move(transcript),
        ModuleMat(cols),
        cols,
        (params.m == 2 && params.n == 2) ? CertificateKind::MSQUARE
                                         : CertificateKind::NONEXIS_DECOMP};
    return result;
}

namespace detail {

/// Recognizes the Proposition-order3 shape [J y 0; 0 x J]: one column of
/// independent linear forms, the rest monomial columns supported on a single
/// row with matching generator sets.
struct MPrimeShape {
    Staircase j;
    Col general; // (y', x')
};

inline std::optional<MPrimeShape> match_mprime_shape(const ModuleMat& mat) {
    std::vector<Monomial> top, bottom;
    std::optional<Col> general;
    for (const auto& col : mat.cols()) {
        bool top_only = !col.first.is_zero() && col.second.is_zero();
        bool bottom_only = col.first.is_zero() && !col.second.is_zero();
        if (top_only && col.first.terms().size() == 1) {
            top.push_back(col.first.terms().begin()->first);
        } else if (bottom_only && col.second.terms().size() == 1) {
            bottom.push_back(col.second.terms().begin()->first);
        } else if (!col.first.is_zero() && !col.second.is_zero() &&
                   col.first.degree() == 1 && col.first.min_degree() == 1 &&
                   col.second.degree() == 1 && col.second.min_degree() == 1 && !general) {
            // (y', x') with (x', y') = m: constant coefficient matrix invertible
            Rat det = col.first.coeff({1, 0}) * col.second.coeff({0, 1}) -
                      col.first.coeff({0, 1}) * col.second.coeff({1, 0});
            if (det == 0) return std::nullopt;
            general = col;
        } else {
            return std::nullopt;
        }
    }
    if (!general || top.empty() || bottom.empty()) return std::nullopt;
    try {
        Staircase jt = Staircase::minimalize(top);
        Staircase jb = Staircase::minimalize(bottom);
        if (!(jt == jb)) return std::nullopt;
        return MPrimeShape{jt, *general};
    } catch (const NotMPrimary&) {
        return std::nullopt;
    }
}

} // namespace detail

/// Issues one of the supported indecomposability certificates, with every
/// hypothesis re-verified here. Throws CertificateUnavailable when no
/// hypothesis set holds; that is never a decomposability verdict.
inline Certificate certify_indecomposable(const ModuleMat& mat, const Staircase& ideal,
                                          CertificateKind context) {
    if (!in_mF(mat))
        throw CertificateUnavailable("module has a unit entry");
    if (!minors_equal(mat, ideal))
        throw CertificateUnavailable("I(M) does not equal the given ideal");

    Certificate cert{context, {}};
    cert.facts.emplace_back("minors_equal", ideal.render_generators());
    cert.facts.emplace_back("in_mF", "true");
    Staircase max_ideal = Staircase::maximal_ideal();

    auto entries_are_m = [&] {
        return ideal_equals_staircase(entries_ideal(mat), max_ideal);
    };

    switch (context) {
    case CertificateKind::DECOM: {
        if (!entries_are_m()) throw CertificateUnavailable("I_1(M) != m");
        if (ideal.order() < 3) throw CertificateUnavailable("ord(I) < 3");
        Staircase j = colon(ideal, max_ideal);
        if (ideal == ideal_product(max_ideal, j))
            throw CertificateUnavailable("I = m*(I:m), decomposition not excluded");
        cert.facts.emplace_back("entries_ideal", "m");
        cert.facts.emplace_back("order", std::to_string(ideal.order()));
        cert.facts.emplace_back("I_neq_m_colon", j.render_generators());
        return cert;
    }
    case CertificateKind::IMAGE: {
        auto shape = detail::match_mprime_shape(mat);
        if (!shape) throw CertificateUnavailable("matrix does not have the [J y 0; 0 x J] shape");
        if (shape->j.order() < 2) throw CertificateUnavailable("ord(J) < 2");
        if (!(ideal == ideal_product(max_ideal, shape->j)))
            throw CertificateUnavailable("I != m*J for the matched J");
        cert.facts.emplace_back("shape", "[J y 0; 0 x J]");
        cert.facts.emplace_back("J", shape->j.render_generators());
        cert.facts.emplace_back("ord_J", std::to_string(shape->j.order()));
        cert.facts.emplace_back("general_pair", "(" + to_string(shape->general.first) + ", " +
                                                    to_string(shape->general.second) + ")");
        return cert;
    }
    case CertificateKind::SIMPLE_CLASH: {
        if (!entries_are_m()) throw CertificateUnavailable("I_1(M) != m");
        if (ideal.order() != 2) throw CertificateUnavailable("ord(I) != 2");
        if (!is_simple(ideal)) throw CertificateUnavailable("I is not simple");
        cert.facts.emplace_back("entries_ideal", "m");
        cert.facts.emplace_back("order", "2");
        cert.facts.emplace_back("simple", "true");
        return cert;
    }
    case CertificateKind::FACTOR_CLASH: {
        if (!entries_are_m()) throw CertificateUnavailable("I_1(M) != m");
        if (ideal.order() != 2) throw CertificateUnavailable("ord(I) != 2");
        auto factors = zariski_factor(ideal);
        std::vector<Staircase> expanded;
        for (const auto& f : factors)
            for (int i = 0; i < f.mult; ++i)
                expanded.push_back(SimpleFactor{f.d, f.e, 1}.expand());
        if (expanded.size() != 2)
            throw CertificateUnavailable("I is not a product of two simple ideals");
        if (ideal_sum(expanded[0], expanded[1]) == max_ideal)
            throw CertificateUnavailable("J + K = m (excluded family)");
        cert.facts.emplace_back("entries_ideal", "m");
        cert.facts.emplace_back("J", expanded[0].render_generators());
        cert.facts.emplace_back("K", expanded[1].render_generators());
        cert.facts.emplace_back("J_plus_K_neq_m", "true");
        return cert;
    }
    default:
        throw CertificateUnavailable("context " + to_string(context) +
                                     " is not an indecomposability argument");
    }
}

} // namespace izclose2
