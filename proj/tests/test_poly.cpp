#include <doctest.h>

#include "coiso/generators.hpp"
#include "coiso/parse.hpp"
#include "coiso/poly.hpp"

using namespace coiso;

namespace {

CoisoContext ctx21(2, 1);

Poly P(const std::string& src, const CoisoContext& ctx = CoisoContext(2, 1)) {
    return parse_expr(src, ExprKind::poly, ctx).poly();
}

} // namespace

TEST_CASE("polynomial arithmetic on the spec examples") {
    CHECK(P("x1 + x2") + P("x1 - x2") == P("2*x1"));
    CHECK(P("x1") * P("x1") == P("x1^2"));
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    CHECK(poly_arith(P("x1"), P("x2"), PolyOp::mul) == P("x1*x2"));
}

TEST_CASE("arithmetic rejects dimension mismatch") {
    Poly a(2), b(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(poly_arith(a, b, PolyOp::mul), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x1^2*x2").partial(1) == P("2*x1*x2"));
    CHECK(P("x1").partial(2).is_zero());
    CHECK(P("x1*x2").partial(1).partial(2) == P("1"));
    CHECK_THROWS_AS(P("x1").partial(3), std::invalid_argument);
    CHECK_THROWS_AS(P("x1").partial(0), std::invalid_argument);
}

TEST_CASE("restriction to C and ideal membership") {
    CHECK(P("x1^2 + x2").restrict_to_C(ctx21) == P("x1^2"));
    CHECK(P("x2*x1").restrict_to_C(ctx21).is_zero());
    Poly sq = P("x1 + x2") * P("x1 + x2");
    CHECK(sq.restrict_to_C(ctx21) == P("x1^2"));

    CHECK(P("x2").in_ideal(ctx21));
    CHECK(!P("x1").in_ideal(ctx21));
    CHECK((P("x2") * P("1 + x1^3")).in_ideal(ctx21));
}

TEST_CASE("degenerate splits") {
    CoisoContext all(2, 2), none(2, 0);
    // nu = n: every variable is transverse, I = maximal ideal at 0
    CHECK(P("x1").in_ideal(all));
    CHECK(!P("1 + x1").in_ideal(all));
    // nu = 0: I = {0}
    CHECK(!P("x2").in_ideal(none));
    CHECK(P("x1 - x1").in_ideal(none));
}

TEST_CASE("exact polynomial integration") {
    // int_0^1 t^2 dt = 1/3 (single variable t)
    Poly t2(MultiIndex{std::vector<unsigned>{2}}, Rational(1));
    Poly lo(1), hi(1, Rational(1));
    CHECK(t2.integrate(1, lo, hi) == Poly(1, rat(1, 3)));

    // int_0^{t1} t2 dt2 = t1^2/2 in variables (t1, t2)
    Poly t2v = Poly::variable(2, 2);
    Poly got = t2v.integrate(2, Poly(2), Poly::variable(2, 1));
    CHECK(got == Poly::variable(2, 1) * Poly::variable(2, 1) * rat(1, 2));

    // 2-simplex volume: int_0^1 int_0^{t1} dt2 dt1 = 1/2
    Poly one(2, Rational(1));
    Poly inner = one.integrate(2, Poly(2), Poly::variable(2, 1));
    Poly outer = inner.integrate(1, Poly(2), Poly(2, Rational(1)));
    CHECK(outer == Poly(2, rat(1, 2)));
}

TEST_CASE("fundamental theorem on random inputs") {
    Rng rng(7);
    GenBounds b;
    for (int i = 0; i < 30; ++i) {
        Poly p = random_poly(rng, 2, b);
        Poly F = p.integrate(2, Poly(2), Poly::variable(2, 2));
        CHECK(F.partial(2) == p);
    }
}

TEST_CASE("substitution composes exactly") {
    // (x1 + x2)^2 with x2 := x1 - 1 gives (2 x1 - 1)^2
    Poly s = P("x1 + x2") * P("x1 + x2");
    Poly got = s.substitute(2, P("x1 - 1"));
    CHECK(got == P("4*x1^2 - 4*x1 + 1"));
}
