#include <doctest.h>

#include <map>

#include "coiso/generators.hpp"
#include "coiso/multivector.hpp"
#include "coiso/parse.hpp"

using namespace coiso;

namespace {

MultiVector MV(const std::string& src, const CoisoContext& ctx) {
    return parse_expr(src, ExprKind::multivector, ctx).multivector();
}

Poly P(const std::string& src, const CoisoContext& ctx) {
    return parse_expr(src, ExprKind::poly, ctx).poly();
}

// Minimal polynomial differential forms, used only to validate the Cartan
// relation [L(x), i(y)] = i([x,y]) that pins the bracket convention.
struct Form {
    CoisoContext ctx;
    std::map<DirSet, Poly> terms;

    explicit Form(const CoisoContext& c) : ctx(c) {}

    void add(const DirSet& dirs, const Poly& f) {
        if (f.is_zero()) return;
        auto [it, fresh] = terms.emplace(dirs, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Form operator+(const Form& o) const {
        Form r = *this;
        for (const auto& [s, f] : o.terms) r.add(s, f);
        return r;
    }
    Form operator-() const {
        Form r(ctx);
        for (const auto& [s, f] : terms) r.terms.emplace(s, -f);
        return r;
    }
    bool operator==(const Form& o) const { return terms == o.terms; }
};

Form d(const Form& w) {
    Form r(w.ctx);
    for (const auto& [s, f] : w.terms)
        for (unsigned i = 1; i <= w.ctx.n; ++i) {
            Poly df = f.partial(i);
            if (df.is_zero()) continue;
            DirSet merged;
            int sign = wedge_merge(DirSet{i}, s, merged);
            if (sign == 0) continue;
            r.add(merged, sign < 0 ? -df : df);
        }
    return r;
}

// single contraction with the coordinate vector e_dir
Form contract_dir(unsigned dir, const Form& w) {
    Form r(w.ctx);
    for (const auto& [s, f] : w.terms)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[j] == dir) {
                DirSet rest = s;
                rest.erase(rest.begin() + static_cast<long>(j));
                r.add(rest, j % 2 == 0 ? f : -f);
            }
    return r;
}

// i(f e_S) = f i(e_{s_k}) ... i(e_{s_1}) (matches the det pairing convention)
Form contract(const MultiVector& x, const Form& w) {
    Form r(w.ctx);
    for (const auto& [s, f] : x.terms()) {
        Form cur = w;
        for (auto it = s.begin(); it != s.end(); ++it) cur = contract_dir(*it, cur);
        for (const auto& [ds, g] : cur.terms) r.add(ds, f * g);
    }
    return r;
}

Form lie(const MultiVector& x, const Form& w) {
    // L(x) = [i(x), d] on a homogeneous degree-k multivector
    unsigned k = x.degree();
    Form a = contract(x, d(w));
    Form b = d(contract(x, w));
    return k % 2 == 0 ? a + (-b) : a + b;
}

} // namespace

TEST_CASE("wedge product") {
    CoisoContext ctx(2, 1);
    CHECK(mv_wedge(MV("e[1]", ctx), MV("e[2]", ctx)) == MV("e[1,2]", ctx));
    CHECK(mv_wedge(MV("e[1]", ctx), MV("e[1]", ctx)).is_zero());
    CHECK(mv_wedge(MV("x1*e[1]", ctx), MV("x2*e[2]", ctx)) == MV("x1*x2*e[1,2]", ctx));
    // graded commutativity on degree-1 terms: x ^ y = -y ^ x
    CHECK(mv_wedge(MV("e[2]", ctx), MV("e[1]", ctx)) == MV("-e[1,2]", ctx));
}

TEST_CASE("schouten bracket pinned values") {
    CoisoContext ctx(2, 1);
    CHECK(schouten_bracket(MV("e[1]", ctx), MV("x1", ctx)) == MV("1", ctx));
    // vector-field commutator [x1 d1, d1] = -d1
    CHECK(schouten_bracket(MV("x1*e[1]", ctx), MV("e[1]", ctx)) == MV("-e[1]", ctx));
    // Leibniz expansion case; sign fixed by this module's convention
    CHECK(schouten_bracket(MV("e[1,2]", ctx), MV("x1", ctx)) == MV("e[2]", ctx));
    // degree-1 x degree-0 is the directional derivative
    CHECK(schouten_bracket(MV("e[1]", ctx), MV("x1*x2", ctx)) == MV("x2", ctx));
}

TEST_CASE("compatibility predicate") {
    CoisoContext ctx32(3, 2);
    CHECK(!mv_compatible(MV("e[2,3]", ctx32)));
    CHECK(mv_compatible(MV("x2*e[2,3]", ctx32)));
    CoisoContext ctx21(2, 1);
    CHECK(mv_compatible(MV("e[1,2]", ctx21)));
    // degree-0 part must lie in I
    CHECK(!mv_compatible(MV("x1", ctx21)));
    CHECK(mv_compatible(MV("x2*x1", ctx21)));
}

TEST_CASE("interior pairing against exact forms") {
    CoisoContext ctx(2, 1), ctx32(3, 2);
    CHECK(pair_exact_forms(MV("e[1,2]", ctx), {P("x1", ctx), P("x2", ctx)}) == P("1", ctx));
    CHECK(pair_exact_forms(MV("e[1]", ctx), {P("x1*x2", ctx)}) == P("x2", ctx));
    CHECK(pair_exact_forms(MV("x2*e[2,3]", ctx32), {P("x2", ctx32), P("x3", ctx32)}) ==
          P("x2", ctx32));
    CHECK_THROWS_AS(pair_exact_forms(MV("e[1]", ctx), {P("x1", ctx), P("x2", ctx)}),
                    std::invalid_argument);
}

TEST_CASE("projection to the quotient") {
    CoisoContext ctx(2, 1);
    QuotientMultiVector q = mv_project_psi(MV("e[2]", ctx));
    QuotientMultiVector want(ctx);
    want.add_term(DirSet{2}, Poly(2, Rational(1)));
    CHECK(q == want);
    CHECK(mv_project_psi(MV("e[1]", ctx)).is_zero());

    QuotientMultiVector r = mv_project_psi(MV("x1*e[2] + x2*e[2]", ctx));
    QuotientMultiVector want2(ctx);
    want2.add_term(DirSet{2}, Poly::variable(2, 1));
    CHECK(r == want2);
}

TEST_CASE("brst differential") {
    CoisoContext ctx31(3, 1);
    MultiVector p = MV("e[1,3]", ctx31);
    QuotientMultiVector a = mv_project_psi(MV("x1^2", ctx31));
    QuotientMultiVector got = brst_differential(p, a);
    QuotientMultiVector want(ctx31);
    want.add_term(DirSet{3}, P("2*x1", ctx31));
    CHECK(got == want);

    CoisoContext ctx21(2, 1);
    QuotientMultiVector f = mv_project_psi(MV("x1^3 + x1", ctx21));
    CHECK(brst_differential(MV("x2*e[1,2]", ctx21), f).is_zero());
    CHECK(brst_differential(MV("x2*e[1,2]", ctx21), mv_project_psi(MV("1", ctx21))).is_zero());

    // incompatible p is rejected
    CHECK_THROWS_AS(brst_differential(MV("e[1,2]", CoisoContext(2, 2)), f),
                    std::invalid_argument);
}

TEST_CASE("cartan relation pins the bracket convention") {
    Rng rng(5);
    GenBounds b;
    CoisoContext ctx(3, 1);
    for (int i = 0; i < 25; ++i) {
        unsigned k = 1 + static_cast<unsigned>(rng.index(2));
        unsigned l = 1 + static_cast<unsigned>(rng.index(2));
        MultiVector x = random_multivector(rng, ctx, k, b);
        MultiVector y = random_multivector(rng, ctx, l, b);
        Form w(ctx);
        DirSet all{1, 2, 3};
        w.add(DirSet{1}, random_poly(rng, 3, b));
        w.add(DirSet{1, 2, 3}, random_poly(rng, 3, b));
        // [L(x), i(y)] with the graded sign (-1)^{(k-1) l}
        Form lhs1 = lie(x, contract(y, w));
        Form lhs2 = contract(y, lie(x, w));
        bool flip = ((k - 1) * l) % 2 == 1;
        Form lhs = flip ? lhs1 + lhs2 : lhs1 + (-lhs2);
        Form rhs = contract(schouten_bracket(x, y), w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quotient rejects bad terms") {
    CoisoContext ctx(2, 1);
    QuotientMultiVector q(ctx);
    CHECK_THROWS_AS(q.add_term(DirSet{1}, Poly(2, Rational(1))), std::invalid_argument);
}
