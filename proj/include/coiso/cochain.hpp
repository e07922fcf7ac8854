#pragma once

#include <map>
#include <vector>

#include "coiso/poly.hpp"

namespace coiso {

/// k-tuple of derivative multi-indices: the slot profile of one normal-form
/// term of a polydifferential operator.
using IndexTuple = std::vector<MultiIndex>;

struct IndexTupleLess {
    bool operator()(const IndexTuple& a, const IndexTuple& b) const {
        GradedLexLess less;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return a.size() < b.size();
    }
};

/// Polydifferential Hochschild cochain in standard-order normal form:
///
///     phi(f_1,...,f_k) = sum_T  c_T(x) (d^{T_1} f_1) ... (d^{T_k} f_k)
///
/// stored as a map from the slot profile T = (T_1,...,T_k) to the nonzero
/// coefficient c_T. The normal form realizes the standard-order
/// quantification bijection, so equality of cochains is equality of term
/// maps. The degree of an arity-k cochain in the shifted grading is k-1.
///
/// Vanishing on constants is checked where needed (star-product axiom
/// verification), never imposed on the type: the pointwise product mu is a
/// perfectly good cochain that fails it.
class Cochain {
public:
    using TermMap = std::map<IndexTuple, Poly, IndexTupleLess>;

    Cochain(const CoisoContext& ctx, unsigned arity) : ctx_(ctx), arity_(arity) {}

    static Cochain zero(const CoisoContext& ctx, unsigned arity) { return Cochain(ctx, arity); }
    /// 0-cochain: an element of A itself.
    static Cochain scalar(const CoisoContext& ctx, const Poly& f);
    /// The pointwise product mu(f,g) = fg.
    static Cochain mu(const CoisoContext& ctx);
    /// The derivation f |-> df/dx_coord as a 1-cochain.
    static Cochain partial_op(const CoisoContext& ctx, std::size_t coord);

    const CoisoContext& ctx() const { return ctx_; }
    unsigned arity() const { return arity_; }
    /// Shifted degree arity - 1 as an int (so a 0-cochain has degree -1).
    int degree() const { return static_cast<int>(arity_) - 1; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Value of an arity-0 cochain as a polynomial.
    Poly scalar_value() const;

    void add_term(const IndexTuple& tuple, const Poly& coeff);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain operator*(const Rational& c) const;
    Cochain& operator+=(const Cochain& o) { return *this = *this + o; }
    Cochain& operator-=(const Cochain& o) { return *this = *this - o; }

    bool operator==(const Cochain& o) const {
        return ctx_ == o.ctx_ && arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const Cochain& o) const { return !(*this == o); }

private:
    CoisoContext ctx_;
    unsigned arity_;
    TermMap terms_;
};

/// Exact evaluation phi(f_1,...,f_k); throws on arity mismatch.
Poly op_apply(const Cochain& phi, const std::vector<Poly>& fs);

/// Insertion phi o_i psi (1 <= i <= arity(phi)): the operator whose slot i
/// consumes psi's output. The outer slot's multi-index redistributes over
/// psi's coefficient and slots by the general Leibniz rule, with exact
/// multinomial weights. Coefficients of phi itself are not differentiated.
Cochain op_circ_i(const Cochain& phi, const Cochain& psi, std::size_t i);

/// phi o psi = sum_i (-1)^{(i-1)(l-1)} phi o_i psi; zero when arity(phi) = 0.
Cochain op_circ(const Cochain& phi, const Cochain& psi);

/// Gerstenhaber bracket [phi,psi]_G = phi o psi - (-1)^{(k-1)(l-1)} psi o phi.
Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi);

/// Hochschild coboundary b phi = -[phi, mu]_G.
Cochain hochschild_b(const Cochain& phi);

/// The same coboundary from the explicit alternating-sum formula
///   (b phi)(f_1,...,f_{k+1}) = f_1 phi(f_2,...,f_{k+1})
///       + sum_r (-1)^r phi(...,f_r f_{r+1},...)
///       + (-1)^{k+1} phi(f_1,...,f_k) f_{k+1},
/// built independently of the bracket route so the two can be compared.
Cochain hochschild_b_explicit(const Cochain& phi);

/// Cup product (phi u psi)(f_1,...,f_{k+l}) = phi(f_1..f_k) psi(f_{k+1}..).
Cochain cup_product(const Cochain& phi, const Cochain& psi);

/// Brace {e | f_1,...,f_p}: sum over all order-preserving non-overlapping
/// insertions of the f_j into e's slots, with sign (-1)^{sum_m i_m |f_m|}
/// where i_m counts arguments before the m-th insertion and |f| = arity - 1.
/// For p = 1 this is e o f, whose antisymmetrization is the Gerstenhaber
/// bracket.
Cochain brace(const Cochain& e, const std::vector<Cochain>& fs);

/// Membership in G_I: arity 0 means the value lies in I; otherwise every
/// normal-form term whose last slot touches the transverse block must have
/// coefficient in I.
bool op_compatible(const Cochain& phi);

} // namespace coiso
