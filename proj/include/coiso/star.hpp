#pragma once

#include <optional>
#include <vector>

#include "coiso/cochain.hpp"
#include "coiso/multivector.hpp"

namespace coiso {

/// Truncated formal series in hbar with polynomial coefficients.
class FormalSeries {
public:
    FormalSeries(const CoisoContext& ctx, unsigned order);
    /// f + 0*hbar + ... up to the truncation order.
    FormalSeries(const CoisoContext& ctx, unsigned order, const Poly& f);

    const CoisoContext& ctx() const { return ctx_; }
    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Poly& at(unsigned r) const { return coeffs_.at(r); }
    Poly& at(unsigned r) { return coeffs_.at(r); }

    FormalSeries operator+(const FormalSeries& o) const;
    FormalSeries operator-(const FormalSeries& o) const;
    bool operator==(const FormalSeries& o) const;
    bool operator!=(const FormalSeries& o) const { return !(*this == o); }
    bool is_zero() const;
    /// Every coefficient lies in the vanishing ideal I.
    bool in_ideal() const;

private:
    CoisoContext ctx_;
    std::vector<Poly> coeffs_; // hbar^0 .. hbar^order
};

struct AxiomReport {
    bool axiom_i = false;   ///< leading term is the pointwise product
    bool axiom_ii = false;  ///< C_1(f,g) - C_1(g,f) = P(df,dg)
    bool axiom_iv = false;  ///< C_r(f,1) = 0 = C_r(1,f) for r >= 1
    bool all() const { return axiom_i && axiom_ii && axiom_iv; }
};

struct AssociativityReport {
    unsigned checked_order = 0;
    std::optional<unsigned> first_failing_order; ///< empty means defect == 0 throughout
    bool ok() const { return !first_failing_order.has_value(); }
};

struct LeftIdealReport {
    bool structural = false;          ///< op_compatible(C_r) for every r
    std::optional<unsigned> first_incompatible_order;
    bool extensional = false;         ///< sampled f * g stays in I[[hbar]]
    bool right_ideal_extensional = false; ///< informational; expected to fail in general
    bool ok() const { return structural && extensional; }
};

/// Truncated star product: cochains C_1..C_N of arity 2 over an implicit
/// C_0 = mu, together with the Poisson bivector it is meant to quantize.
/// Verification is always explicit; nothing is assumed from the
/// construction.
class StarProduct {
public:
    StarProduct(const CoisoContext& ctx, unsigned order, const MultiVector& poisson,
                std::vector<Cochain> cochains);

    const CoisoContext& ctx() const { return ctx_; }
    unsigned order() const { return order_; }
    const MultiVector& poisson() const { return poisson_; }
    /// C_r for 0 <= r <= order (C_0 = mu).
    const Cochain& cochain(unsigned r) const;

private:
    CoisoContext ctx_;
    unsigned order_;
    MultiVector poisson_;
    std::vector<Cochain> cochains_; // index 0 = mu
};

/// Standard-ordered left-ideal star product of a constant compatible Poisson
/// bivector: C_r = (1/r!) (sum b^{ij} d_i (x) d_j)^r for the ordering matrix
/// b with b - b^T = P, the tangential block split evenly and every mixed
/// entry routed so that second-slot derivatives avoid the transverse block.
/// Throws if p has non-constant coefficients or is not compatible.
StarProduct build_standard_star(const MultiVector& p, unsigned order);

/// Cauchy product over hbar with C_r applied at each order.
FormalSeries star_multiply(const StarProduct& s, const FormalSeries& f, const FormalSeries& g);

/// Order-by-order associativity defect sum_{i+j=r} C_i o C_j as a normal-form
/// cochain; reports the first hbar-order at which it fails to vanish.
AssociativityReport check_associativity(const StarProduct& s, unsigned order);

/// Left-ideal verification: (a) structural membership of all C_r in G_I^2
/// and (b) extensional sampling of f * g for g in I, plus the informational
/// right-sided sample.
LeftIdealReport check_left_ideal(const StarProduct& s, unsigned order, std::uint64_t seed = 1);

/// Star-product axioms (i), (ii), (iv); (iii) holds structurally for every
/// Cochain.
AxiomReport check_axioms(const StarProduct& s);

} // namespace coiso
