#include <doctest.h>

#include "coiso/generators.hpp"
#include "coiso/parse.hpp"

using namespace coiso;

namespace {
const CoisoContext ctx(2, 1);
}

TEST_CASE("poly grammar") {
    Expr e = parse_expr("x1^2*x2 - 3/2", ExprKind::poly, ctx);
    Poly expected(2);
    expected.add_term(MultiIndex{std::vector<unsigned>{2, 1}}, Rational(1));
    expected.add_term(MultiIndex(2), rat(-3, 2));
    CHECK(e.poly() == expected);
    CHECK(print_expr(e) == "x1^2*x2 - 3/2");
}

TEST_CASE("multivector grammar normalizes antisymmetry") {
    Expr e = parse_expr("1*e[2,1]", ExprKind::multivector, ctx);
    MultiVector expected = MultiVector::term(ctx, DirSet{1, 2}, Poly(2, Rational(-1)));
    CHECK(e.multivector() == expected);
    CHECK(print_expr(e) == "-e[1,2]");

    // repeated wedge direction collapses to zero, not an error
    CHECK(parse_expr("e[1,1]", ExprKind::multivector, ctx).multivector().is_zero());
    CHECK(print_multivector(MultiVector::zero(ctx)) == "0");

    // bare scalar terms denote the degree-0 part
    Expr s = parse_expr("x1 + x2*e[2]", ExprKind::multivector, ctx);
    MultiVector want(ctx, Poly::variable(2, 1));
    want += MultiVector::term(ctx, DirSet{2}, Poly::variable(2, 2));
    CHECK(s.multivector() == want);
}

TEST_CASE("cochain grammar") {
    Expr e = parse_expr("x2*D[(1,0)|(0,1)]", ExprKind::cochain, ctx);
    Cochain expected(ctx, 2);
    expected.add_term(IndexTuple{MultiIndex::unit(2, 1), MultiIndex::unit(2, 2)},
                      Poly::variable(2, 2));
    CHECK(e.cochain() == expected);
    CHECK(print_expr(e) == "x2*D[(1,0)|(0,1)]");

    // like tuples combine
    Expr c = parse_expr("D[(1,0)] + D[(1,0)]", ExprKind::cochain, ctx);
    Cochain two(ctx, 1);
    two.add_term(IndexTuple{MultiIndex::unit(2, 1)}, Poly(2, Rational(2)));
    CHECK(c.cochain() == two);

    // mismatched arities are rejected
    CHECK_THROWS_AS(parse_expr("D[(1,0)] + D[(1,0)|(0,1)]", ExprKind::cochain, ctx), ParseError);
}

TEST_CASE("located errors") {
    auto offset_of = [&](const std::string& src, ExprKind kind) -> std::size_t {
        try {
            parse_expr(src, kind, ctx);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("x1 +", ExprKind::poly) == 4);
    CHECK(offset_of("x0", ExprKind::poly) == 0);
    CHECK(offset_of("e[5]", ExprKind::multivector) == 2);
    CHECK(offset_of("3/0", ExprKind::poly) == 2);
    CHECK(offset_of("D[(1)|(1,0)]", ExprKind::cochain) == 2);
}

TEST_CASE("round trip on random expressions") {
    Rng rng(11);
    GenBounds b;
    const CoisoContext ctxs[] = {CoisoContext(1, 0), CoisoContext(2, 1), CoisoContext(3, 2)};
    for (int i = 0; i < 120; ++i) {
        const CoisoContext& c = ctxs[i % 3];
        Expr e{c, Poly(c.n)};
        switch (i % 3) {
            case 0: e = Expr{c, random_poly(rng, c.n, b)}; break;
            case 1: {
                unsigned deg = static_cast<unsigned>(rng.index(std::min<std::size_t>(c.n, 2) + 1));
                e = Expr{c, random_multivector(rng, c, deg, b)};
                break;
            }
            case 2: {
                Cochain phi = random_cochain(rng, c, static_cast<unsigned>(rng.index(3)), b);
                while (phi.is_zero()) phi = random_cochain(rng, c, 1, b);
                e = Expr{c, phi};
                break;
            }
        }
        CAPTURE(print_expr(e));
        CHECK(parse_expr(print_expr(e), e.kind(), c) == e);
    }
}

TEST_CASE("bar and koszul chain round trip") {
    BarChain c = parse_bar_chain("x1_1^2*a1 - b2 + x2_2", 2, 2);
    CHECK(c.k == 2);
    CHECK(parse_bar_chain(print_bar_chain(c), 2, 2) == c);
    CHECK(parse_bar_chain("a1*b1", 2, 0).k == 0);
    CHECK_THROWS_AS(parse_bar_chain("x3_1", 2, 1), ParseError);

    KoszulChain w = parse_koszul_chain("a1*e[1] - b1*e[2] + 2*e[2]", 2);
    CHECK(w.k == 1);
    CHECK(parse_koszul_chain(print_koszul_chain(w), 2) == w);
    // repeated direction collapses
    CHECK(parse_koszul_chain("e[1,1]", 2, 2).is_zero());
    CHECK_THROWS_AS(parse_koszul_chain("e[1] + e[1,2]", 2), ParseError);
}
