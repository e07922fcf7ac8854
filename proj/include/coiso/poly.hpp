#pragma once

#include <map>
#include <vector>

#include "coiso/context.hpp"
#include "coiso/multi_index.hpp"
#include "coiso/rational.hpp"

namespace coiso {

/// Sparse multivariate polynomial with exact rational coefficients, in
/// canonical normal form: a term map in graded-lex order holding no zero
/// coefficients. Two polynomials are equal iff their term maps are equal.
///
/// Polynomials stand in for smooth functions throughout: every identity in
/// scope is a coefficient-wise polynomial identity, so the polynomial
/// subalgebra is a faithful desk-scale test bed for C^infinity(R^n).
///
/// The variable count is explicit and not tied to a CoisoContext: chains of
/// the resolution module live in (k+2)*n variables, simplex integration adds
/// auxiliary t-variables. Context-aware operations (restriction, ideal
/// membership) take the context as an argument and apply to n-variable
/// polynomials.
class Poly {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    Poly(std::size_t nvars, const Rational& c);

    /// Monomial c * x^m.
    Poly(MultiIndex m, const Rational& c);

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, const Rational& c) { return Poly(nvars, c); }
    /// The coordinate function x_coord (1-based).
    static Poly variable(std::size_t nvars, std::size_t coord);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of x^m (0 if absent).
    Rational coeff(const MultiIndex& m) const;
    /// Constant term.
    Rational constant_term() const { return coeff(MultiIndex(nvars_)); }
    unsigned total_degree() const; // 0 for the zero polynomial

    void add_term(const MultiIndex& m, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Graded-lex comparison of term maps; used only for deterministic
    /// container ordering.
    bool operator<(const Poly& o) const;

    /// Formal partial derivative with respect to x_coord (1-based).
    Poly partial(std::size_t coord) const;
    /// Iterated partial derivative d^|I|/dx^I.
    Poly partial(const MultiIndex& idx) const;

    /// Substitute the polynomial `value` (same variable space) for x_coord.
    Poly substitute(std::size_t coord, const Poly& value) const;

    /// Exact definite integral in x_coord between polynomial bounds (which
    /// must not involve x_coord themselves).
    Poly integrate(std::size_t coord, const Poly& lower, const Poly& upper) const;

    /// Remap variables: image[old] is the new 1-based index, or 0 if the old
    /// variable must not occur. Several old variables may map to one new
    /// variable (exponents add), which is how diagonal substitutions of the
    /// bar boundary are realized.
    Poly rename_vars(const std::vector<std::size_t>& image, std::size_t new_nvars) const;

    /// Same polynomial viewed in a larger variable space (new variables
    /// appended).
    Poly extended(std::size_t new_nvars) const;

    /// Substitution x'' = 0; the result involves tangential variables only.
    Poly restrict_to_C(const CoisoContext& ctx) const;
    /// Membership in the vanishing ideal I of C, i.e. restrict_to_C == 0.
    bool in_ideal(const CoisoContext& ctx) const;

private:
    std::size_t nvars_;
    TermMap terms_;

    void check_same_space(const Poly& o) const;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

enum class PolyOp { add, sub, mul };

/// Dispatch form used by the CLI; throws on dimension mismatch.
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

} // namespace coiso
