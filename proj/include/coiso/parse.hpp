#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "coiso/cochain.hpp"
#include "coiso/multivector.hpp"
#include "coiso/resolution.hpp"

namespace coiso {

/// Syntax or semantic error with the byte offset of the offending token and
/// the token set that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected, const std::string& message)
        : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

enum class ExprKind { poly, multivector, cochain };

/// Parsed expression: a polynomial, multivector or cochain together with its
/// context. parse(print(e)) == e for every well-formed expression.
struct Expr {
    CoisoContext ctx;
    std::variant<Poly, MultiVector, Cochain> value;

    ExprKind kind() const { return static_cast<ExprKind>(value.index()); }
    const Poly& poly() const { return std::get<Poly>(value); }
    const MultiVector& multivector() const { return std::get<MultiVector>(value); }
    const Cochain& cochain() const { return std::get<Cochain>(value); }

    bool operator==(const Expr& o) const { return ctx == o.ctx && value == o.value; }
    bool operator!=(const Expr& o) const { return !(*this == o); }
};

/// Grammar (LL(1), '+'/'-' separated sums of '*'-separated factors):
///   poly        "x1^2*x2 - 3/2"
///   multivector "x1*e[1] - e[1,2] + x2"      (bare scalar terms allowed)
///   cochain     "x2*D[(1,0)|(0,1)] + D[(0,0)|(1,0)]"
/// Wedge lists with a repeated direction collapse to zero; multivector terms
/// are sorted with the sign absorbed into the coefficient; like cochain
/// tuples are combined. Coordinate indices are validated against ctx.
Expr parse_expr(const std::string& src, ExprKind kind, const CoisoContext& ctx);

/// Canonical deterministic text: terms in graded-lex order, one monomial per
/// printed term.
std::string print_expr(const Expr& e);

std::string print_poly(const Poly& p);
std::string print_multivector(const MultiVector& x);
std::string print_quotient(const QuotientMultiVector& x);
std::string print_cochain(const Cochain& phi);

/// Chains use block-qualified variables: "a1", "x1_1" (middle block 1,
/// coordinate 1), "b1". The bar degree k is inferred from the highest middle
/// block mentioned unless `k` forces a larger one.
BarChain parse_bar_chain(const std::string& src, std::size_t n, int k = -1);
std::string print_bar_chain(const BarChain& c);

/// Koszul chains combine (a,b)-polynomials with the "e[...]" wedge syntax;
/// exterior degree inferred from the direction lists.
KoszulChain parse_koszul_chain(const std::string& src, std::size_t n, int k = -1);
std::string print_koszul_chain(const KoszulChain& c);

} // namespace coiso
