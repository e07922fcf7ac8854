#include "coiso/star.hpp"

#include <stdexcept>

#include "coiso/generators.hpp"

namespace coiso {

FormalSeries::FormalSeries(const CoisoContext& ctx, unsigned order)
    : ctx_(ctx), coeffs_(order + 1, Poly(ctx.n)) {}

FormalSeries::FormalSeries(const CoisoContext& ctx, unsigned order, const Poly& f)
    : FormalSeries(ctx, order) {
    if (f.nvars() != ctx.n)
        throw std::invalid_argument("FormalSeries: polynomial in wrong variable space");
    coeffs_[0] = f;
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
    if (ctx_ != o.ctx_ || order() != o.order())
        throw std::invalid_argument("FormalSeries: order mismatch");
    FormalSeries r = *this;
    for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const {
    if (ctx_ != o.ctx_ || order() != o.order())
        throw std::invalid_argument("FormalSeries: order mismatch");
    FormalSeries r = *this;
    for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

bool FormalSeries::operator==(const FormalSeries& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

bool FormalSeries::is_zero() const {
    for (const Poly& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool FormalSeries::in_ideal() const {
    for (const Poly& c : coeffs_)
        if (!c.in_ideal(ctx_)) return false;
    return true;
}

StarProduct::StarProduct(const CoisoContext& ctx, unsigned order, const MultiVector& poisson,
                         std::vector<Cochain> cochains)
    : ctx_(ctx), order_(order), poisson_(poisson) {
    if (poisson.ctx() != ctx)
        throw std::invalid_argument("StarProduct: Poisson bivector from different context");
    if (cochains.size() != order)
        throw std::invalid_argument("StarProduct: expected one cochain per order 1..N");
    cochains_.reserve(order + 1);
    cochains_.push_back(Cochain::mu(ctx));
    for (Cochain& c : cochains) {
        if (c.ctx() != ctx || c.arity() != 2)
            throw std::invalid_argument("StarProduct: every C_r must be a bidifferential cochain");
        cochains_.push_back(std::move(c));
    }
}

const Cochain& StarProduct::cochain(unsigned r) const {
    if (r > order_) throw std::out_of_range("StarProduct::cochain: order exceeds truncation");
    return cochains_[r];
}

StarProduct build_standard_star(const MultiVector& p, unsigned order) {
    const CoisoContext& ctx = p.ctx();
    const std::size_t n = ctx.n;
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2))
        throw std::invalid_argument("build_standard_star: p must be a bivector");
    for (const auto& [s, f] : p.terms())
        if (!f.is_constant())
            throw std::invalid_argument("build_standard_star: p must have constant coefficients");
    if (!mv_compatible(p))
        throw std::invalid_argument(
            "build_standard_star: p is not compatible (transverse-transverse block nonzero)");

    // ordering matrix b with b - b^T = P, second column index never transverse
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [s, f] : p.terms()) {
        unsigned i = s[0], j = s[1]; // i < j
        Rational c = f.constant_term();
        if (ctx.is_tangential(i) && ctx.is_tangential(j)) {
            b[i - 1][j - 1] += c / 2;
            b[j - 1][i - 1] -= c / 2;
        } else {
            // i tangential, j transverse: full weight on the (j,i) entry so
            // the transverse derivative lands in the first slot
            b[j - 1][i - 1] -= c;
        }
    }

    std::vector<Cochain> cochains;
    cochains.reserve(order);
    Cochain power(ctx, 2);
    power.add_term(IndexTuple{MultiIndex(n), MultiIndex(n)}, Poly(n, Rational(1)));
    Rational factorial(1);
    for (unsigned r = 1; r <= order; ++r) {
        Cochain next(ctx, 2);
        for (const auto& [tuple, c] : power.terms())
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (is_zero(b[i][j])) continue;
                    IndexTuple t = tuple;
                    t[0].exp[i] += 1;
                    t[1].exp[j] += 1;
                    next.add_term(t, c * b[i][j]);
                }
        power = next;
        factorial *= Rational(static_cast<long>(r));
        cochains.push_back(power * (Rational(1) / factorial));
    }
    return StarProduct(ctx, order, p, std::move(cochains));
}

FormalSeries star_multiply(const StarProduct& s, const FormalSeries& f, const FormalSeries& g) {
    if (f.ctx() != s.ctx() || g.ctx() != s.ctx())
        throw std::invalid_argument("star_multiply: operands from different contexts");
    if (f.order() != s.order() || g.order() != s.order())
        throw std::invalid_argument("star_multiply: truncation order mismatch");
    const unsigned N = s.order();
    FormalSeries out(s.ctx(), N);
    for (unsigned m = 0; m <= N; ++m)
        for (unsigned r = 0; r <= m; ++r)
            for (unsigned i = 0; i + r <= m; ++i) {
                unsigned j = m - r - i;
                out.at(m) += op_apply(s.cochain(r), {f.at(i), g.at(j)});
            }
    return out;
}

AssociativityReport check_associativity(const StarProduct& s, unsigned order) {
    AssociativityReport rep;
    rep.checked_order = order;
    for (unsigned r = 0; r <= order; ++r) {
        Cochain defect(s.ctx(), 3);
        for (unsigned i = 0; i <= r && i <= s.order(); ++i) {
            unsigned j = r - i;
            if (j > s.order()) continue;
            defect += op_circ(s.cochain(i), s.cochain(j));
        }
        if (!defect.is_zero()) {
            rep.first_failing_order = r;
            break;
        }
    }
    return rep;
}

LeftIdealReport check_left_ideal(const StarProduct& s, unsigned order, std::uint64_t seed) {
    LeftIdealReport rep;
    const CoisoContext& ctx = s.ctx();
    const unsigned N = std::min(order, s.order());

    rep.structural = true;
    for (unsigned r = 0; r <= N; ++r)
        if (!op_compatible(s.cochain(r))) {
            rep.structural = false;
            rep.first_incompatible_order = r;
            break;
        }

    Rng rng(seed);
    GenBounds bounds;
    std::vector<Poly> fs, gs;
    for (std::size_t i = 1; i <= ctx.n; ++i) fs.push_back(Poly::variable(ctx.n, i));
    for (std::size_t j = ctx.n - ctx.nu + 1; j <= ctx.n; ++j)
        gs.push_back(Poly::variable(ctx.n, j));
    for (int t = 0; t < 4; ++t) {
        fs.push_back(random_poly(rng, ctx.n, bounds));
        Poly g = random_ideal_poly(rng, ctx, bounds);
        if (!g.is_zero()) gs.push_back(g);
    }
    if (gs.empty()) gs.push_back(Poly(ctx.n)); // nu = 0: the ideal is {0}

    rep.extensional = true;
    rep.right_ideal_extensional = true;
    for (const Poly& f : fs)
        for (const Poly& g : gs) {
            FormalSeries fg =
                star_multiply(s, FormalSeries(ctx, s.order(), f), FormalSeries(ctx, s.order(), g));
            if (!fg.in_ideal()) rep.extensional = false;
            FormalSeries gf =
                star_multiply(s, FormalSeries(ctx, s.order(), g), FormalSeries(ctx, s.order(), f));
            if (!gf.in_ideal()) rep.right_ideal_extensional = false;
        }
    return rep;
}

namespace {

Cochain transpose2(const Cochain& c) {
    Cochain r(c.ctx(), 2);
    for (const auto& [tuple, coeff] : c.terms())
        r.add_term(IndexTuple{tuple[1], tuple[0]}, coeff);
    return r;
}

} // namespace

AxiomReport check_axioms(const StarProduct& s) {
    AxiomReport rep;
    const CoisoContext& ctx = s.ctx();
    const std::size_t n = ctx.n;

    rep.axiom_i = s.cochain(0) == Cochain::mu(ctx);

    // (ii): antisymmetric part of C_1 equals P(df, dg) as a cochain
    Cochain pc(ctx, 2);
    for (const auto& [dirs, f] : s.poisson().terms()) {
        unsigned i = dirs[0], j = dirs[1];
        pc.add_term(IndexTuple{MultiIndex::unit(n, i), MultiIndex::unit(n, j)}, f);
        pc.add_term(IndexTuple{MultiIndex::unit(n, j), MultiIndex::unit(n, i)}, -f);
    }
    Cochain c1 = s.order() >= 1 ? s.cochain(1) : Cochain::zero(ctx, 2);
    rep.axiom_ii = (c1 - transpose2(c1)) == pc;

    // (iv): no normal-form term of C_r (r >= 1) may skip a slot entirely
    rep.axiom_iv = true;
    for (unsigned r = 1; r <= s.order(); ++r)
        for (const auto& [tuple, coeff] : s.cochain(r).terms())
            if (tuple[0].is_zero() || tuple[1].is_zero()) {
                rep.axiom_iv = false;
                break;
            }
    return rep;
}

} // namespace coiso
