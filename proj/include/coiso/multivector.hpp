#pragma once

#include <map>
#include <vector>

#include "coiso/poly.hpp"

namespace coiso {

/// Strictly increasing list of 1-based coordinate directions; the index set
/// of a wedge monomial e_S.
using DirSet = std::vector<unsigned>;

/// Sign of merging two disjoint sorted direction sets into one sorted set;
/// 0 if they overlap (square of an odd generator).
int wedge_merge(const DirSet& a, const DirSet& b, DirSet& out);

/// Polynomial multivector field: element of the Gerstenhaber algebra
/// g = A (x) Lambda E with A the polynomial functions on R^n. Terms map a
/// sorted direction set S to a nonzero coefficient; antisymmetry is absorbed
/// at construction. Mixed degrees are allowed (the map is the full direct
/// sum); most structure maps act degree-wise.
class MultiVector {
public:
    using TermMap = std::map<DirSet, Poly>;

    explicit MultiVector(const CoisoContext& ctx) : ctx_(ctx) {}
    MultiVector(const CoisoContext& ctx, const Poly& scalar);

    static MultiVector zero(const CoisoContext& ctx) { return MultiVector(ctx); }
    /// coeff * e_dirs with the sign of sorting `dirs` absorbed; zero if a
    /// direction repeats.
    static MultiVector term(const CoisoContext& ctx, const DirSet& dirs, const Poly& coeff);

    const CoisoContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree of a homogeneous element (0 for the zero multivector).
    unsigned degree() const;
    /// Homogeneous component of degree k.
    MultiVector component(unsigned k) const;
    Poly coeff(const DirSet& dirs) const;

    void add_term(const DirSet& sorted_dirs, const Poly& coeff);

    MultiVector operator+(const MultiVector& o) const;
    MultiVector operator-(const MultiVector& o) const;
    MultiVector operator-() const;
    MultiVector operator*(const Rational& c) const;
    MultiVector operator*(const Poly& f) const;
    MultiVector& operator+=(const MultiVector& o) { return *this = *this + o; }
    MultiVector& operator-=(const MultiVector& o) { return *this = *this - o; }

    bool operator==(const MultiVector& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const MultiVector& o) const { return !(*this == o); }

private:
    CoisoContext ctx_;
    TermMap terms_;
};

/// Graded-commutative exterior product.
MultiVector mv_wedge(const MultiVector& x, const MultiVector& y);

/// Schouten-Nijenhuis bracket, the graded Lie bracket on g[-1]. Convention
/// pinned by: degree-1 restriction = commutator of vector fields,
/// [X, g] = X(dg) for a vector field X and function g, and the graded
/// Leibniz rule [X, Y ^ Z] = [X,Y] ^ Z + (-1)^{(k-1)l} Y ^ [X,Z].
MultiVector schouten_bracket(const MultiVector& x, const MultiVector& y);

/// Membership in g_I: every term whose direction set lies entirely in the
/// transverse block (the empty set included) must have coefficient in I.
bool mv_compatible(const MultiVector& x);

/// Full interior contraction i(x)(dg_1 ^ ... ^ dg_k) with the dual-pairing
/// normalization <e_S, dx^S> = +1. Every term of x must have degree k = |gs|.
/// Serves as the brute-force compatibility oracle: x is compatible iff this
/// lands in I for all tuples drawn from I.
Poly pair_exact_forms(const MultiVector& x, const std::vector<Poly>& gs);

/// Element of the quotient space gtilde = B (x) Lambda E2: direction sets
/// inside the transverse block, coefficients restricted to C (no transverse
/// variables).
class QuotientMultiVector {
public:
    using TermMap = std::map<DirSet, Poly>;

    explicit QuotientMultiVector(const CoisoContext& ctx) : ctx_(ctx) {}

    const CoisoContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Inserts coeff * ebar_dirs; dirs must lie in E2 and coeff must not
    /// involve transverse variables.
    void add_term(const DirSet& sorted_dirs, const Poly& coeff);

    QuotientMultiVector operator+(const QuotientMultiVector& o) const;
    QuotientMultiVector operator-(const QuotientMultiVector& o) const;

    bool operator==(const QuotientMultiVector& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const QuotientMultiVector& o) const { return !(*this == o); }

    /// Canonical section of Psi: ebar_S -> e_S with the coefficient read in
    /// full variables.
    MultiVector lift() const;

private:
    CoisoContext ctx_;
    TermMap terms_;
};

/// Projection Psi: g -> gtilde. Kills every term with a tangential
/// direction and restricts the surviving coefficients to C; its kernel is
/// exactly g_I.
QuotientMultiVector mv_project_psi(const MultiVector& x);

/// BRST differential of a compatible Poisson structure p on the quotient:
/// a |-> Psi([p, lift(a)]). Independent of the choice of lift because
/// [g_I, g_I] stays in g_I. Throws if p is not compatible or not of
/// degree 2.
QuotientMultiVector brst_differential(const MultiVector& p, const QuotientMultiVector& a);

} // namespace coiso
