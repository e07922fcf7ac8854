#include "coiso/generators.hpp"

#include <algorithm>

namespace coiso {

Rng Rng::fork(const std::string& label) const {
    // FNV-1a over the label mixed with a fresh draw-independent copy
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    Rng copy = *this;
    return Rng(h ^ copy.raw());
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::size_t Rng::index(std::size_t size) {
    return static_cast<std::size_t>(eng_() % size);
}

bool Rng::chance(unsigned num, unsigned den) { return eng_() % den < num; }

Rational random_rational(Rng& rng, const GenBounds& b) {
    long num = rng.range(-b.coef_range, b.coef_range);
    long den = rng.range(1, 2);
    return rat(num, den);
}

Rational random_rational_nonzero(Rng& rng, const GenBounds& b) {
    Rational q = random_rational(rng, b);
    while (is_zero(q)) q = random_rational(rng, b);
    return q;
}

namespace {

MultiIndex random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree) {
    MultiIndex m(nvars);
    unsigned deg = static_cast<unsigned>(rng.range(0, max_degree));
    for (unsigned i = 0; i < deg; ++i) m.exp[rng.index(nvars)] += 1;
    return m;
}

DirSet random_dirset(Rng& rng, std::size_t n, unsigned size) {
    DirSet all;
    for (unsigned d = 1; d <= n; ++d) all.push_back(d);
    for (std::size_t i = 0; i < all.size(); ++i) std::swap(all[i], all[rng.index(all.size())]);
    DirSet s(all.begin(), all.begin() + size);
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

Poly random_poly(Rng& rng, std::size_t nvars, const GenBounds& b, bool allow_zero) {
    Poly p(nvars);
    unsigned terms = static_cast<unsigned>(rng.range(1, b.max_terms));
    for (unsigned t = 0; t < terms; ++t)
        p.add_term(random_monomial(rng, nvars, b.max_degree), random_rational(rng, b));
    if (!allow_zero && p.is_zero()) p.add_term(MultiIndex(nvars), random_rational_nonzero(rng, b));
    return p;
}

Poly random_ideal_poly(Rng& rng, const CoisoContext& ctx, const GenBounds& b) {
    Poly p(ctx.n);
    if (ctx.nu == 0) return p;
    unsigned terms = static_cast<unsigned>(rng.range(1, b.max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        std::size_t j = ctx.n - ctx.nu + 1 + rng.index(ctx.nu);
        Poly factor = random_poly(rng, ctx.n, b, true);
        p += Poly::variable(ctx.n, j) * factor;
    }
    if (p.is_zero())
        p = Poly::variable(ctx.n, ctx.n) * Poly(ctx.n, random_rational_nonzero(rng, b));
    return p;
}

MultiVector random_multivector(Rng& rng, const CoisoContext& ctx, unsigned degree,
                               const GenBounds& b) {
    MultiVector x(ctx);
    if (degree > ctx.n) return x;
    unsigned terms = static_cast<unsigned>(rng.range(1, 2));
    for (unsigned t = 0; t < terms; ++t)
        x += MultiVector::term(ctx, random_dirset(rng, ctx.n, degree),
                               random_poly(rng, ctx.n, b, true));
    return x;
}

MultiVector random_compatible_multivector(Rng& rng, const CoisoContext& ctx, unsigned degree,
                                          const GenBounds& b) {
    MultiVector x(ctx);
    if (degree > ctx.n) return x;
    unsigned terms = static_cast<unsigned>(rng.range(1, 2));
    for (unsigned t = 0; t < terms; ++t) {
        DirSet s = random_dirset(rng, ctx.n, degree);
        bool pure_transverse = true;
        for (unsigned d : s)
            if (ctx.is_tangential(d)) pure_transverse = false;
        Poly coeff = pure_transverse ? random_ideal_poly(rng, ctx, b)
                                     : random_poly(rng, ctx.n, b, true);
        x += MultiVector::term(ctx, s, coeff);
    }
    return x;
}

Cochain random_cochain(Rng& rng, const CoisoContext& ctx, unsigned arity, const GenBounds& b) {
    Cochain phi(ctx, arity);
    unsigned terms = static_cast<unsigned>(rng.range(1, 2));
    for (unsigned t = 0; t < terms; ++t) {
        IndexTuple tuple;
        tuple.reserve(arity);
        for (unsigned s = 0; s < arity; ++s)
            tuple.push_back(random_monomial(rng, ctx.n, b.max_diff_order));
        phi.add_term(tuple, random_poly(rng, ctx.n, b, true));
    }
    return phi;
}

Cochain random_compatible_cochain(Rng& rng, const CoisoContext& ctx, unsigned arity,
                                  const GenBounds& b) {
    if (arity == 0) return Cochain::scalar(ctx, random_ideal_poly(rng, ctx, b));
    Cochain phi(ctx, arity);
    unsigned terms = static_cast<unsigned>(rng.range(1, 2));
    for (unsigned t = 0; t < terms; ++t) {
        IndexTuple tuple;
        tuple.reserve(arity);
        for (unsigned s = 0; s < arity; ++s)
            tuple.push_back(random_monomial(rng, ctx.n, b.max_diff_order));
        Poly coeff = tuple.back().touches_transverse(ctx) ? random_ideal_poly(rng, ctx, b)
                                                          : random_poly(rng, ctx.n, b, true);
        phi.add_term(tuple, coeff);
    }
    return phi;
}

MultiVector random_constant_compatible_poisson(Rng& rng, const CoisoContext& ctx,
                                               const GenBounds& b) {
    MultiVector p(ctx);
    for (unsigned i = 1; i <= ctx.n; ++i)
        for (unsigned j = i + 1; j <= ctx.n; ++j) {
            if (ctx.is_transverse(i) && ctx.is_transverse(j)) continue;
            if (rng.chance(1, 2)) continue;
            p += MultiVector::term(ctx, DirSet{i, j},
                                   Poly(ctx.n, random_rational(rng, b)));
        }
    return p;
}

MultiVector random_compatible_poisson(Rng& rng, const CoisoContext& ctx, const GenBounds& b) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        MultiVector p = random_constant_compatible_poisson(rng, ctx, b);
        if (rng.chance(1, 2) && ctx.n >= 2) {
            // linear perturbation f * e_{ij} with f in I keeps compatibility;
            // keep it only if the exact Jacobi test passes
            unsigned i = static_cast<unsigned>(1 + rng.index(ctx.n));
            unsigned j = static_cast<unsigned>(1 + rng.index(ctx.n));
            if (i != j)
                p += MultiVector::term(ctx, DirSet{std::min(i, j), std::max(i, j)},
                                       random_ideal_poly(rng, ctx, b));
        }
        if (!mv_compatible(p)) continue;
        if (schouten_bracket(p, p).is_zero()) return p;
    }
    return random_constant_compatible_poisson(rng, ctx, b);
}

} // namespace coiso
