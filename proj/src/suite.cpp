#include "coiso/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "coiso/hkr.hpp"
#include "coiso/parse.hpp"
#include "coiso/resolution.hpp"
#include "coiso/star.hpp"

namespace coiso {

namespace {

int pow_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

std::vector<CoisoContext> default_contexts(const SuiteBounds& b) {
    std::vector<CoisoContext> ctxs;
    for (unsigned n = 1; n <= b.max_n; ++n)
        for (unsigned nu = 0; nu <= std::min(n, b.max_nu); ++nu) ctxs.emplace_back(n, nu);
    return ctxs;
}

std::vector<CoisoContext> star_contexts() {
    // the star families run up to n = 4 regardless of the core bound
    return {CoisoContext(2, 0), CoisoContext(2, 1), CoisoContext(2, 2), CoisoContext(3, 1),
            CoisoContext(3, 2), CoisoContext(4, 1), CoisoContext(4, 2)};
}

std::string ctx_tag(const CoisoContext& ctx) {
    return "n=" + std::to_string(ctx.n) + " nu=" + std::to_string(ctx.nu);
}

struct Runner {
    FamilyOutcome out;

    void record(bool ok, const std::function<std::string()>& cex) {
        ++out.instances;
        if (!ok) {
            if (out.failures == 0) out.first_counterexample = cex();
            ++out.failures;
        }
    }
};

std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
    std::vector<MultiIndex> out;
    MultiIndex m(nvars);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t coord, unsigned left) {
        if (coord == nvars) {
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m.exp[coord] = e;
            rec(coord + 1, left - e);
        }
        m.exp[coord] = 0;
    };
    rec(0, maxdeg);
    return out;
}

} // namespace

bool oracle_mv_compatible(const MultiVector& x, Rng& rng, const GenBounds& b) {
    const CoisoContext& ctx = x.ctx();
    if (x.is_zero()) return true;
    const unsigned k = x.degree();
    if (k == 0) return pair_exact_forms(x, {}).in_ideal(ctx);
    if (ctx.nu == 0) return true; // I = {0}: no nonzero conormal differentials

    // generating family of I: x''_j times monomials (1 included)
    std::vector<Poly> family;
    for (std::size_t j = ctx.n - ctx.nu + 1; j <= ctx.n; ++j) {
        Poly xj = Poly::variable(ctx.n, j);
        for (const MultiIndex& m : monomials_up_to(ctx.n, b.max_degree))
            family.push_back(xj * Poly(m, Rational(1)));
    }

    std::vector<std::size_t> pick(k, 0);
    std::size_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= family.size();
    const std::size_t cap = 20000;
    auto test_tuple = [&](const std::vector<std::size_t>& sel) {
        std::vector<Poly> gs;
        gs.reserve(k);
        for (std::size_t idx : sel) gs.push_back(family[idx]);
        return pair_exact_forms(x, gs).in_ideal(ctx);
    };
    if (total <= cap) {
        while (true) {
            if (!test_tuple(pick)) return false;
            unsigned pos = k;
            while (pos > 0) {
                if (++pick[pos - 1] < family.size()) break;
                pick[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    } else {
        for (std::size_t t = 0; t < cap; ++t) {
            for (unsigned i = 0; i < k; ++i) pick[i] = rng.index(family.size());
            if (!test_tuple(pick)) return false;
        }
    }
    return true;
}

bool oracle_op_compatible(const Cochain& phi, Rng& rng, const GenBounds& b) {
    const CoisoContext& ctx = phi.ctx();
    const unsigned k = phi.arity();
    if (k == 0) return phi.scalar_value().in_ideal(ctx);
    if (ctx.nu == 0) return true;
    (void)rng;

    // multilinearity makes monomial probes exact for bounded-order slots
    std::vector<MultiIndex> monos = monomials_up_to(ctx.n, b.max_diff_order);
    std::vector<Poly> fs(k, Poly(ctx.n));
    std::function<bool(unsigned)> rec = [&](unsigned slot) -> bool {
        if (slot + 1 == k) {
            for (std::size_t j = ctx.n - ctx.nu + 1; j <= ctx.n; ++j)
                for (const MultiIndex& m : monos) {
                    fs[k - 1] = Poly::variable(ctx.n, j) * Poly(m, Rational(1));
                    if (!op_apply(phi, fs).in_ideal(ctx)) return false;
                }
            return true;
        }
        for (const MultiIndex& m : monos) {
            fs[slot] = Poly(m, Rational(1));
            if (!rec(slot + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

namespace {

using FamilyFn = std::function<void(Runner&, Rng&, const SuiteBounds&)>;

struct Family {
    std::string name;
    FamilyFn run;
};

// ----------------------------------------------------------- polynomial ---

void fam_poly_ring_laws(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Poly a = random_poly(rng, ctx.n, bounds.gen), b = random_poly(rng, ctx.n, bounds.gen),
             c = random_poly(rng, ctx.n, bounds.gen);
        bool ok = a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a;
        r.record(ok, [&] {
            return ctx_tag(ctx) + " a=" + print_poly(a) + " b=" + print_poly(b) +
                   " c=" + print_poly(c);
        });
    }
}

void fam_poly_leibniz(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Poly a = random_poly(rng, ctx.n, bounds.gen), b = random_poly(rng, ctx.n, bounds.gen);
        std::size_t coord = 1 + rng.index(ctx.n);
        bool ok = (a * b).partial(coord) == a.partial(coord) * b + a * b.partial(coord);
        r.record(ok, [&] {
            return ctx_tag(ctx) + " i=" + std::to_string(coord) + " a=" + print_poly(a) +
                   " b=" + print_poly(b);
        });
    }
}

void fam_poly_restrict_hom(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Poly a = random_poly(rng, ctx.n, bounds.gen), b = random_poly(rng, ctx.n, bounds.gen);
        bool ok = (a * b).restrict_to_C(ctx) == a.restrict_to_C(ctx) * b.restrict_to_C(ctx) &&
                  (a + b).restrict_to_C(ctx) == a.restrict_to_C(ctx) + b.restrict_to_C(ctx);
        r.record(ok,
                 [&] { return ctx_tag(ctx) + " a=" + print_poly(a) + " b=" + print_poly(b); });
    }
}

void fam_poly_ideal(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Poly a = random_ideal_poly(rng, ctx, bounds.gen);
        Poly b = random_poly(rng, ctx.n, bounds.gen);
        bool ok = a.in_ideal(ctx) && (a * b).in_ideal(ctx);
        r.record(ok,
                 [&] { return ctx_tag(ctx) + " a=" + print_poly(a) + " b=" + print_poly(b); });
    }
}

void fam_poly_integration(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        // p(x, t), F(x, t) = int_0^t p: dF/dt = p, F(x, 0) = 0
        Poly p = random_poly(rng, 2, bounds.gen);
        Poly zero(2), t = Poly::variable(2, 2);
        Poly F = p.integrate(2, zero, t);
        bool ok = F.partial(2) == p && F.substitute(2, zero).is_zero();
        r.record(ok, [&] { return std::string("p(x1,x2)=") + print_poly(p); });
    }
}

// ----------------------------------------------------------- multivector ---

unsigned pick_degree(Rng& rng, const CoisoContext& ctx, unsigned cap = 2) {
    return static_cast<unsigned>(rng.index(std::min<std::size_t>(ctx.n, cap) + 1));
}

void fam_schouten_antisym(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx), l = pick_degree(rng, ctx);
        MultiVector x = random_multivector(rng, ctx, k, bounds.gen);
        MultiVector y = random_multivector(rng, ctx, l, bounds.gen);
        MultiVector lhs = schouten_bracket(x, y);
        MultiVector rhs = schouten_bracket(y, x);
        int s = pow_sign(static_cast<long>(k - 1) * (static_cast<long>(l) - 1));
        bool ok = (lhs + (s < 0 ? -rhs : rhs)).is_zero();
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_multivector(x) + " y=" + print_multivector(y);
        });
    }
}

void fam_schouten_jacobi(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx), l = pick_degree(rng, ctx), m = pick_degree(rng, ctx);
        MultiVector x = random_multivector(rng, ctx, k, bounds.gen);
        MultiVector y = random_multivector(rng, ctx, l, bounds.gen);
        MultiVector z = random_multivector(rng, ctx, m, bounds.gen);
        MultiVector lhs = schouten_bracket(x, schouten_bracket(y, z));
        MultiVector rhs = schouten_bracket(schouten_bracket(x, y), z);
        MultiVector rhs2 = schouten_bracket(y, schouten_bracket(x, z));
        int s = pow_sign(static_cast<long>(k - 1) * (static_cast<long>(l) - 1));
        bool ok = lhs == rhs + (s < 0 ? -rhs2 : rhs2);
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_multivector(x) + " y=" + print_multivector(y) +
                   " z=" + print_multivector(z);
        });
    }
}

void fam_schouten_leibniz(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx), l = pick_degree(rng, ctx), m = pick_degree(rng, ctx);
        MultiVector x = random_multivector(rng, ctx, k, bounds.gen);
        MultiVector y = random_multivector(rng, ctx, l, bounds.gen);
        MultiVector z = random_multivector(rng, ctx, m, bounds.gen);
        MultiVector lhs = schouten_bracket(x, mv_wedge(y, z));
        MultiVector rhs = mv_wedge(schouten_bracket(x, y), z);
        MultiVector rhs2 = mv_wedge(y, schouten_bracket(x, z));
        int s = pow_sign(static_cast<long>(k - 1) * static_cast<long>(l));
        bool ok = lhs == rhs + (s < 0 ? -rhs2 : rhs2);
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_multivector(x) + " y=" + print_multivector(y) +
                   " z=" + print_multivector(z);
        });
    }
}

void fam_gI_closure(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx), l = pick_degree(rng, ctx);
        MultiVector x = random_compatible_multivector(rng, ctx, k, bounds.gen);
        MultiVector y = random_compatible_multivector(rng, ctx, l, bounds.gen);
        MultiVector w = random_multivector(rng, ctx, l, bounds.gen);
        bool ok = mv_compatible(x) && mv_compatible(y) &&
                  mv_compatible(schouten_bracket(x, y)) && mv_compatible(mv_wedge(x, y)) &&
                  mv_compatible(mv_wedge(x, w)) && mv_compatible(mv_wedge(w, x));
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_multivector(x) + " y=" + print_multivector(y) +
                   " w=" + print_multivector(w);
        });
    }
}

void fam_psi_kernel(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx);
        MultiVector x = (i % 2 == 0) ? random_compatible_multivector(rng, ctx, k, bounds.gen)
                                     : random_multivector(rng, ctx, k, bounds.gen);
        bool ok = mv_project_psi(x).is_zero() == mv_compatible(x);
        r.record(ok, [&] { return ctx_tag(ctx) + " x=" + print_multivector(x); });
    }
}

void fam_mv_oracle(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx);
        MultiVector x = (i % 2 == 0) ? random_compatible_multivector(rng, ctx, k, bounds.gen)
                                     : random_multivector(rng, ctx, k, bounds.gen);
        bool ok = mv_compatible(x) == oracle_mv_compatible(x, rng, bounds.gen);
        r.record(ok, [&] { return ctx_tag(ctx) + " x=" + print_multivector(x); });
    }
}

void fam_brst(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        if (ctx.n < 2) {
            r.record(true, [] { return std::string(); });
            continue;
        }
        MultiVector p = random_compatible_poisson(rng, ctx, bounds.gen);
        // quotient element of mixed degree
        QuotientMultiVector a(ctx);
        Poly c0 = random_poly(rng, ctx.n, bounds.gen).restrict_to_C(ctx);
        a.add_term(DirSet{}, c0);
        if (ctx.nu >= 1) {
            DirSet one{static_cast<unsigned>(ctx.n - ctx.nu + 1 + rng.index(ctx.nu))};
            a.add_term(one, random_poly(rng, ctx.n, bounds.gen).restrict_to_C(ctx));
        }
        QuotientMultiVector dd = brst_differential(p, brst_differential(p, a));
        // lift independence: a compatible correction is killed by Psi
        unsigned zdeg = pick_degree(rng, ctx);
        MultiVector z = random_compatible_multivector(rng, ctx, zdeg, bounds.gen);
        bool ok = dd.is_zero() && mv_project_psi(schouten_bracket(p, z)).is_zero();
        r.record(ok, [&] {
            return ctx_tag(ctx) + " p=" + print_multivector(p) + " a=" + print_quotient(a) +
                   " z=" + print_multivector(z);
        });
    }
}

// ------------------------------------------------------------- cochains ---

unsigned pick_arity(Rng& rng, const SuiteBounds&, unsigned cap = 3) {
    return static_cast<unsigned>(rng.index(cap + 1));
}

void fam_b_squared(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Cochain phi = random_cochain(rng, ctx, pick_arity(rng, bounds), bounds.gen);
        bool ok = hochschild_b(hochschild_b(phi)).is_zero();
        r.record(ok, [&] { return ctx_tag(ctx) + " phi=" + print_cochain(phi); });
    }
}

void fam_b_two_routes(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Cochain phi = random_cochain(rng, ctx, pick_arity(rng, bounds), bounds.gen);
        bool ok = hochschild_b(phi) == hochschild_b_explicit(phi);
        r.record(ok, [&] { return ctx_tag(ctx) + " phi=" + print_cochain(phi); });
    }
}

void fam_gerst_antisym(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_arity(rng, bounds), l = pick_arity(rng, bounds);
        Cochain phi = random_cochain(rng, ctx, k, bounds.gen);
        Cochain psi = random_cochain(rng, ctx, l, bounds.gen);
        Cochain lhs = gerstenhaber_bracket(phi, psi);
        Cochain rhs = gerstenhaber_bracket(psi, phi);
        int s = pow_sign((static_cast<long>(k) - 1) * (static_cast<long>(l) - 1));
        bool ok;
        if (lhs.is_zero() && rhs.is_zero())
            ok = true;
        else
            ok = (lhs + (s < 0 ? -rhs : rhs)).is_zero();
        r.record(ok, [&] {
            return ctx_tag(ctx) + " phi=" + print_cochain(phi) + " psi=" + print_cochain(psi);
        });
    }
}

void fam_gerst_jacobi(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_arity(rng, bounds, 2), l = pick_arity(rng, bounds, 2),
                 m = pick_arity(rng, bounds, 2);
        Cochain x = random_cochain(rng, ctx, k, bounds.gen);
        Cochain y = random_cochain(rng, ctx, l, bounds.gen);
        Cochain z = random_cochain(rng, ctx, m, bounds.gen);
        Cochain lhs = gerstenhaber_bracket(x, gerstenhaber_bracket(y, z));
        Cochain rhs = gerstenhaber_bracket(gerstenhaber_bracket(x, y), z);
        Cochain rhs2 = gerstenhaber_bracket(y, gerstenhaber_bracket(x, z));
        int s = pow_sign((static_cast<long>(k) - 1) * (static_cast<long>(l) - 1));
        // combine guarding against arity bookkeeping of zero cochains
        Cochain acc = lhs;
        if (!rhs.is_zero()) acc = acc.is_zero() ? -rhs : acc - rhs;
        if (!rhs2.is_zero()) {
            Cochain signed2 = s < 0 ? rhs2 : -rhs2;
            acc = acc.is_zero() ? signed2 : acc + signed2;
        }
        bool ok = acc.is_zero();
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_cochain(x) + " y=" + print_cochain(y) +
                   " z=" + print_cochain(z);
        });
    }
}

void fam_GI_proposition(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_arity(rng, bounds, 2), l = pick_arity(rng, bounds, 2);
        Cochain phi = random_cochain(rng, ctx, k, bounds.gen);
        Cochain psic = random_compatible_cochain(rng, ctx, l, bounds.gen);
        Cochain phic = random_compatible_cochain(rng, ctx, k, bounds.gen);
        bool ok = op_compatible(Cochain::mu(ctx)) && op_compatible(cup_product(phi, psic)) &&
                  op_compatible(gerstenhaber_bracket(phic, psic)) &&
                  op_compatible(hochschild_b(phic));
        r.record(ok, [&] {
            return ctx_tag(ctx) + " phi=" + print_cochain(phi) + " psi_c=" + print_cochain(psic) +
                   " phi_c=" + print_cochain(phic);
        });
    }
}

void fam_brace_antisym(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = 1 + pick_arity(rng, bounds, 2), l = 1 + pick_arity(rng, bounds, 2);
        Cochain e = random_cochain(rng, ctx, k, bounds.gen);
        Cochain f = random_cochain(rng, ctx, l, bounds.gen);
        Cochain ef = brace(e, {f});
        Cochain fe = brace(f, {e});
        int s = pow_sign((static_cast<long>(k) - 1) * (static_cast<long>(l) - 1));
        Cochain anti = ef + (s < 0 ? fe : -fe);
        bool ok = anti == gerstenhaber_bracket(e, f);
        r.record(ok, [&] {
            return ctx_tag(ctx) + " e=" + print_cochain(e) + " f=" + print_cochain(f);
        });
    }
}

void fam_brace_closure(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned p = 1 + static_cast<unsigned>(rng.index(2));
        unsigned k = std::max(1u, pick_arity(rng, bounds, 3));
        Cochain e = random_compatible_cochain(rng, ctx, k, bounds.gen);
        std::vector<Cochain> fs;
        for (unsigned j = 0; j < p; ++j)
            fs.push_back(random_compatible_cochain(rng, ctx, 1 + pick_arity(rng, bounds, 1),
                                                   bounds.gen));
        Cochain br = brace(e, fs);
        bool ok = op_compatible(br);
        r.record(ok, [&] {
            std::string s = ctx_tag(ctx) + " e=" + print_cochain(e);
            for (std::size_t j = 0; j < fs.size(); ++j)
                s += " f" + std::to_string(j + 1) + "=" + print_cochain(fs[j]);
            return s;
        });
    }
}

void fam_insertion_coherence(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = 1 + pick_arity(rng, bounds, 2), l = pick_arity(rng, bounds, 2);
        Cochain phi = random_cochain(rng, ctx, k, bounds.gen);
        Cochain psi = random_cochain(rng, ctx, l, bounds.gen);
        std::size_t slot = 1 + rng.index(k);
        std::vector<Poly> fs;
        for (unsigned j = 0; j + 1 < k + l; ++j) fs.push_back(random_poly(rng, ctx.n, bounds.gen));
        Poly lhs = op_apply(op_circ_i(phi, psi, slot), fs);
        std::vector<Poly> outer;
        for (std::size_t j = 0; j + 1 < slot; ++j) outer.push_back(fs[j]);
        std::vector<Poly> inner(fs.begin() + (slot - 1), fs.begin() + (slot - 1 + l));
        outer.push_back(op_apply(psi, inner));
        for (std::size_t j = slot - 1 + l; j < fs.size(); ++j) outer.push_back(fs[j]);
        Poly rhs = op_apply(phi, outer);
        bool ok = lhs == rhs;
        r.record(ok, [&] {
            return ctx_tag(ctx) + " phi=" + print_cochain(phi) + " psi=" + print_cochain(psi) +
                   " slot=" + std::to_string(slot);
        });
    }
}

void fam_op_oracle(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_arity(rng, bounds, 2);
        Cochain phi = (i % 2 == 0) ? random_compatible_cochain(rng, ctx, k, bounds.gen)
                                   : random_cochain(rng, ctx, k, bounds.gen);
        bool ok = op_compatible(phi) == oracle_op_compatible(phi, rng, bounds.gen);
        r.record(ok, [&] { return ctx_tag(ctx) + " phi=" + print_cochain(phi); });
    }
}

void fam_xi_chain_map(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = 1 + pick_arity(rng, bounds, 1);
        Cochain phi = random_cochain(rng, ctx, k, bounds.gen);
        std::vector<Poly> fs;
        for (unsigned j = 0; j < k; ++j) fs.push_back(random_poly(rng, ctx.n, bounds.gen));
        Poly g = random_ideal_poly(rng, ctx, bounds.gen);
        // Xi(phi)(args)(g) = i^*(phi(args, g))
        auto xi = [&](const Cochain& c, std::vector<Poly> args, const Poly& last) {
            args.push_back(last);
            return op_apply(c, args).restrict_to_C(ctx);
        };
        std::vector<Poly> all = fs;
        all.push_back(g);
        Poly lhs = op_apply(hochschild_b(phi), all).restrict_to_C(ctx);
        // EqDefCobHP applied to Xi(phi)
        Poly rhs = fs[0].restrict_to_C(ctx) *
                   xi(phi, std::vector<Poly>(fs.begin() + 1, fs.end()), g);
        for (unsigned rr = 1; rr <= k - 1; ++rr) {
            std::vector<Poly> merged;
            for (unsigned j = 0; j < k; ++j) {
                if (j == rr - 1) {
                    merged.push_back(fs[j] * fs[j + 1]);
                    ++j;
                } else {
                    merged.push_back(fs[j]);
                }
            }
            Poly t = xi(phi, merged, g);
            rhs += pow_sign(rr) < 0 ? -t : t;
        }
        std::vector<Poly> head(fs.begin(), fs.end() - 1);
        Poly t = xi(phi, head, fs.back() * g);
        rhs += pow_sign(k) < 0 ? -t : t;
        bool ok = lhs == rhs;
        r.record(ok, [&] {
            std::string s = ctx_tag(ctx) + " phi=" + print_cochain(phi) + " g=" + print_poly(g);
            for (unsigned j = 0; j < k; ++j) s += " f" + std::to_string(j + 1) + "=" + print_poly(fs[j]);
            return s;
        });
    }
}

// ----------------------------------------------------------- resolutions ---

BarChain random_bar_chain(Rng& rng, std::size_t n, unsigned k, const GenBounds& b) {
    return BarChain(n, k, random_poly(rng, (k + 2) * n, b));
}

KoszulChain random_koszul_chain(Rng& rng, std::size_t n, unsigned k, const GenBounds& b) {
    KoszulChain c(n, k);
    DirSet all;
    for (unsigned d = 1; d <= n; ++d) all.push_back(d);
    // up to two random direction subsets
    for (int t = 0; t < 2; ++t) {
        DirSet s = all;
        for (std::size_t i = 0; i < s.size(); ++i) std::swap(s[i], s[rng.index(s.size())]);
        s.resize(k);
        std::sort(s.begin(), s.end());
        c.add_term(s, random_poly(rng, 2 * n, b, true));
    }
    if (c.terms.empty() && k <= n) {
        DirSet s(all.begin(), all.begin() + k);
        c.add_term(s, Poly(2 * n, Rational(1)));
    }
    return c;
}

void fam_bar_complex(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        unsigned k = 2 + static_cast<unsigned>(rng.index(2));
        BarChain c = random_bar_chain(rng, n, k, bounds.gen);
        BarChain dd = bar_boundary(bar_boundary(c));
        BarChain d1 = random_bar_chain(rng, n, 1, bounds.gen);
        bool ok = dd.is_zero() && augmentation(bar_boundary(d1)).is_zero();
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " F=" + print_bar_chain(c) + " F1=" + print_bar_chain(d1);
        });
    }
}

void fam_koszul_complex(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 2 + rng.index(bounds.max_n - 1);
        unsigned k = 2;
        KoszulChain c = random_koszul_chain(rng, n, k, bounds.gen);
        KoszulChain dd = koszul_boundary(koszul_boundary(c));
        KoszulChain d1 = random_koszul_chain(rng, n, 1, bounds.gen);
        bool ok = dd.is_zero() && augmentation(koszul_boundary(d1)).is_zero();
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " w=" + print_koszul_chain(c) +
                   " w1=" + print_koszul_chain(d1);
        });
    }
}

void fam_bar_homotopy(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        Poly f = random_poly(rng, n, bounds.gen);
        bool ok = augmentation(bar_homotopy_minus1(f)) == f;
        BarChain c0 = random_bar_chain(rng, n, 0, bounds.gen);
        ok = ok && bar_homotopy_minus1(augmentation(c0)) + bar_boundary(bar_homotopy(c0)) == c0;
        unsigned k = 1 + static_cast<unsigned>(rng.index(2));
        BarChain ck = random_bar_chain(rng, n, k, bounds.gen);
        ok = ok &&
             bar_homotopy(bar_boundary(ck)) + bar_boundary(bar_homotopy(ck)) == ck;
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " F=" + print_bar_chain(ck);
        });
    }
}

void fam_koszul_homotopy(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        Poly f = random_poly(rng, n, bounds.gen);
        bool ok = augmentation(koszul_homotopy_minus1(f)) == f;
        KoszulChain c0 = random_koszul_chain(rng, n, 0, bounds.gen);
        ok = ok && koszul_homotopy_minus1(augmentation(c0)) +
                           koszul_boundary(koszul_homotopy(c0)) ==
                       c0;
        unsigned k = 1 + static_cast<unsigned>(rng.index(std::min<std::size_t>(n, 2)));
        KoszulChain ck = random_koszul_chain(rng, n, k, bounds.gen);
        ok = ok && koszul_homotopy(koszul_boundary(ck)) + koszul_boundary(koszul_homotopy(ck)) ==
                       ck;
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " w=" + print_koszul_chain(ck);
        });
    }
}

void fam_chain_maps(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        unsigned k = 1 + static_cast<unsigned>(rng.index(std::min<std::size_t>(n, 2)));
        KoszulChain w = random_koszul_chain(rng, n, k, bounds.gen);
        bool ok = map_F(koszul_boundary(w)) == bar_boundary(map_F(w));
        BarChain F = random_bar_chain(rng, n, k, bounds.gen);
        ok = ok && map_G(bar_boundary(F)) == koszul_boundary(map_G(F));
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " w=" + print_koszul_chain(w) + " F=" + print_bar_chain(F);
        });
    }
}

void fam_gf_theta(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        unsigned k = static_cast<unsigned>(rng.index(std::min<std::size_t>(n, 2) + 1));
        KoszulChain w = random_koszul_chain(rng, n, k, bounds.gen);
        bool ok = map_G(map_F(w)) == w;
        BarChain F = random_bar_chain(rng, n, k, bounds.gen);
        BarChain th = theta(F);
        ok = ok && theta(th) == th;
        r.record(ok, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " w=" + print_koszul_chain(w) + " F=" + print_bar_chain(F);
        });
    }
}

void fam_ae_linearity(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    for (unsigned i = 0; i < bounds.instances; ++i) {
        std::size_t n = 1 + rng.index(bounds.max_n);
        unsigned k = 1 + static_cast<unsigned>(rng.index(std::min<std::size_t>(n, 2)));
        Poly f = random_poly(rng, 2 * n, bounds.gen);
        BarChain F = random_bar_chain(rng, n, k, bounds.gen);
        KoszulChain w = random_koszul_chain(rng, n, k, bounds.gen);
        bool ok = bar_boundary(bar_module_action(f, F)) ==
                      bar_module_action(f, bar_boundary(F)) &&
                  koszul_boundary(koszul_module_action(f, w)) ==
                      koszul_module_action(f, koszul_boundary(w)) &&
                  map_F(koszul_module_action(f, w)) == bar_module_action(f, map_F(w)) &&
                  map_G(bar_module_action(f, F)) == koszul_module_action(f, map_G(F));
        r.record(ok, [&] {
            KoszulChain fc(n, 0);
            fc.add_term(DirSet{}, f);
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " f=" + print_koszul_chain(fc) + " F=" + print_bar_chain(F) +
                   " w=" + print_koszul_chain(w);
        });
    }
}

// ------------------------------------------------------------------ hkr ---

void fam_hkr_classical(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx, 3);
        MultiVector x = random_multivector(rng, ctx, k, bounds.gen);
        Cochain psi = hkr_psi(x);
        bool ok = hkr_pi(psi) == x && hochschild_b(psi).is_zero();
        r.record(ok, [&] { return ctx_tag(ctx) + " x=" + print_multivector(x); });
    }
}

void fam_hkr_modified(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = pick_degree(rng, ctx, 3);
        MultiVector x = random_compatible_multivector(rng, ctx, k, bounds.gen);
        Cochain psi1 = hkr_psi_modified(x, true);
        bool slot_sound = true;
        for (const auto& [tuple, c] : psi1.terms())
            if (!tuple.empty() && tuple.back().touches_transverse(ctx) && !c.in_ideal(ctx))
                slot_sound = false;
        bool ok = hkr_pi(psi1) == x && hochschild_b(psi1).is_zero() && op_compatible(psi1) &&
                  slot_sound;
        r.record(ok, [&] { return ctx_tag(ctx) + " x=" + print_multivector(x); });
    }
}

void fam_hkr_negative_control(Runner& r, Rng&, const SuiteBounds&) {
    // the documented failure of the unmodified map on g_I
    {
        CoisoContext ctx(2, 1);
        MultiVector x = MultiVector::term(ctx, DirSet{1, 2}, Poly(ctx.n, Rational(1)));
        bool ok = mv_compatible(x) && !op_compatible(hkr_psi(x)) &&
                  op_compatible(hkr_psi_modified(x, true));
        r.record(ok, [&] { return std::string("n=2 nu=1 x=e[1,2]"); });
    }
    {
        CoisoContext ctx(3, 1);
        MultiVector x = MultiVector::term(ctx, DirSet{1, 3}, Poly(ctx.n, Rational(1)));
        bool ok = mv_compatible(x) && !op_compatible(hkr_psi(x)) &&
                  op_compatible(hkr_psi_modified(x, true));
        r.record(ok, [&] { return std::string("n=3 nu=1 x=e[1,3]"); });
    }
    {
        CoisoContext ctx(3, 2);
        MultiVector x = MultiVector::term(ctx, DirSet{1, 2, 3}, Poly(ctx.n, Rational(1)));
        bool ok = mv_compatible(x) && !op_compatible(hkr_psi(x)) &&
                  op_compatible(hkr_psi_modified(x, true));
        r.record(ok, [&] { return std::string("n=3 nu=2 x=e[1,2,3]"); });
    }
}

void fam_hkr_defect(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.defect_pairs; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        unsigned k = std::max(1u, pick_degree(rng, ctx, 2));
        unsigned l = std::max(1u, pick_degree(rng, ctx, 2));
        MultiVector x = random_multivector(rng, ctx, k, bounds.gen);
        MultiVector y = random_multivector(rng, ctx, l, bounds.gen);
        BracketDefect classical = bracket_defect(x, y, HkrKind::classical);
        MultiVector xc = random_compatible_multivector(rng, ctx, k, bounds.gen);
        MultiVector yc = random_compatible_multivector(rng, ctx, l, bounds.gen);
        BracketDefect modified = bracket_defect(xc, yc, HkrKind::modified);
        bool ok = classical.is_cocycle && classical.pi_vanishes && modified.is_cocycle &&
                  modified.pi_vanishes && op_compatible(modified.defect);
        r.record(ok, [&] {
            return ctx_tag(ctx) + " x=" + print_multivector(x) + " y=" + print_multivector(y) +
                   " xc=" + print_multivector(xc) + " yc=" + print_multivector(yc);
        });
    }
}

// ----------------------------------------------------------------- star ---

void fam_star_standard(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = star_contexts();
    for (unsigned i = 0; i < bounds.star_tensors; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        MultiVector p = random_constant_compatible_poisson(rng, ctx, bounds.gen);
        StarProduct s = build_standard_star(p, bounds.star_order);
        AssociativityReport assoc = check_associativity(s, bounds.star_order);
        AxiomReport ax = check_axioms(s);
        LeftIdealReport li = check_left_ideal(s, bounds.star_order, rng.raw());
        // extensional associativity cross-check on a random triple
        FormalSeries f(ctx, bounds.star_order, random_poly(rng, ctx.n, bounds.gen));
        FormalSeries g(ctx, bounds.star_order, random_poly(rng, ctx.n, bounds.gen));
        FormalSeries h(ctx, bounds.star_order, random_poly(rng, ctx.n, bounds.gen));
        bool ext_assoc = star_multiply(s, star_multiply(s, f, g), h) ==
                         star_multiply(s, f, star_multiply(s, g, h));
        bool ok = assoc.ok() && ax.all() && li.ok() && ext_assoc;
        r.record(ok, [&] { return ctx_tag(ctx) + " P=" + print_multivector(p); });
    }
}

void fam_star_codim1(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    std::vector<CoisoContext> ctxs = {CoisoContext(2, 1), CoisoContext(3, 1), CoisoContext(4, 1)};
    for (unsigned i = 0; i < bounds.star_tensors; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        MultiVector p = random_constant_compatible_poisson(rng, ctx, bounds.gen);
        StarProduct s = build_standard_star(p, bounds.star_order);
        bool ok = check_associativity(s, bounds.star_order).ok() && check_axioms(s).all() &&
                  check_left_ideal(s, bounds.star_order, rng.raw()).ok();
        r.record(ok, [&] { return ctx_tag(ctx) + " P=" + print_multivector(p); });
    }
}

void fam_star_equivalence(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    std::vector<CoisoContext> ctxs = {CoisoContext(2, 1), CoisoContext(3, 1), CoisoContext(3, 2)};
    for (unsigned i = 0; i < std::max(6u, bounds.star_tensors / 2); ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        MultiVector p = random_constant_compatible_poisson(rng, ctx, bounds.gen);
        StarProduct good = build_standard_star(p, 3);
        LeftIdealReport li_good = check_left_ideal(good, 3, rng.raw());
        // corrupt C_1 with an incompatible term d_1 (x) d_n
        std::vector<Cochain> cs;
        for (unsigned rr = 1; rr <= 3; ++rr) cs.push_back(good.cochain(rr));
        Cochain bad_term(ctx, 2);
        bad_term.add_term(IndexTuple{MultiIndex::unit(ctx.n, 1), MultiIndex::unit(ctx.n, ctx.n)},
                          Poly(ctx.n, Rational(1)));
        cs[0] += bad_term;
        StarProduct bad(ctx, 3, p, cs);
        LeftIdealReport li_bad = check_left_ideal(bad, 3, rng.raw());
        bool ok = li_good.structural && li_good.extensional && !li_bad.structural &&
                  !li_bad.extensional;
        r.record(ok, [&] { return ctx_tag(ctx) + " P=" + print_multivector(p); });
    }
}

void fam_star_order1(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = star_contexts();
    for (unsigned i = 0; i < bounds.instances; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        MultiVector p = random_constant_compatible_poisson(rng, ctx, bounds.gen);
        StarProduct s = build_standard_star(p, 2);
        Poly f = random_poly(rng, ctx.n, bounds.gen), g = random_poly(rng, ctx.n, bounds.gen);
        FormalSeries fg = star_multiply(s, FormalSeries(ctx, 2, f), FormalSeries(ctx, 2, g));
        FormalSeries gf = star_multiply(s, FormalSeries(ctx, 2, g), FormalSeries(ctx, 2, f));
        Poly commutator_h1 = fg.at(1) - gf.at(1);
        Poly pairing = p.is_zero() ? Poly(ctx.n) : pair_exact_forms(p, {f, g});
        bool ok = commutator_h1 == pairing;
        r.record(ok, [&] {
            return ctx_tag(ctx) + " P=" + print_multivector(p) + " f=" + print_poly(f) +
                   " g=" + print_poly(g);
        });
    }
}

void fam_star_weyl_control(Runner& r, Rng&, const SuiteBounds&) {
    // Weyl-symmetric Moyal for P = e[1,2], nu = 1: C_1 = (1/2)(d1 (x) d2 - d2 (x) d1)
    CoisoContext ctx(2, 1);
    MultiVector p = MultiVector::term(ctx, DirSet{1, 2}, Poly(ctx.n, Rational(1)));
    Cochain c1(ctx, 2);
    c1.add_term(IndexTuple{MultiIndex::unit(2, 1), MultiIndex::unit(2, 2)},
                Poly(2, rat(1, 2)));
    c1.add_term(IndexTuple{MultiIndex::unit(2, 2), MultiIndex::unit(2, 1)},
                Poly(2, rat(-1, 2)));
    StarProduct weyl(ctx, 1, p, {c1});
    LeftIdealReport li = check_left_ideal(weyl, 1);
    AxiomReport ax = check_axioms(weyl);
    bool ok = !li.structural && li.first_incompatible_order.has_value() &&
              *li.first_incompatible_order == 1 && !li.extensional && ax.axiom_ii;
    r.record(ok, [] { return std::string("n=2 nu=1 weyl C1=1/2*D[(1,0)|(0,1)] - 1/2*D[(0,1)|(1,0)]"); });
}

void fam_star_assoc_corruption(Runner& r, Rng&, const SuiteBounds&) {
    // corrupting C_2 with a cocycle keeps order 2 clean and breaks order 3
    CoisoContext ctx(2, 1);
    MultiVector p = MultiVector::term(ctx, DirSet{1, 2}, Poly(ctx.n, Rational(1)));
    StarProduct s = build_standard_star(p, 4);
    std::vector<Cochain> cs;
    for (unsigned rr = 1; rr <= 4; ++rr) cs.push_back(s.cochain(rr));
    Cochain corrupt(ctx, 2);
    corrupt.add_term(IndexTuple{MultiIndex::unit(2, 1), MultiIndex::unit(2, 1)},
                     Poly(2, Rational(1)));
    cs[1] += corrupt;
    StarProduct bad(ctx, 4, p, cs);
    AssociativityReport rep = check_associativity(bad, 4);
    bool ok = rep.first_failing_order.has_value() && *rep.first_failing_order == 3 &&
              check_associativity(s, 4).ok();
    r.record(ok, [] { return std::string("n=2 nu=1 corrupted C2 += D[(1,0)|(1,0)]"); });
}

// --------------------------------------------------------------- parser ---

void fam_parser_roundtrip(Runner& r, Rng& rng, const SuiteBounds& bounds) {
    auto ctxs = default_contexts(bounds);
    for (unsigned i = 0; i < bounds.parser_roundtrips; ++i) {
        const CoisoContext& ctx = ctxs[i % ctxs.size()];
        Expr e{ctx, Poly(ctx.n)};
        switch (i % 3) {
            case 0: e = Expr{ctx, random_poly(rng, ctx.n, bounds.gen)}; break;
            case 1: {
                MultiVector x(ctx);
                unsigned deg = pick_degree(rng, ctx);
                x += random_multivector(rng, ctx, deg, bounds.gen);
                if (rng.chance(1, 2))
                    x += MultiVector(ctx, random_poly(rng, ctx.n, bounds.gen, true));
                e = Expr{ctx, x};
                break;
            }
            case 2: {
                Cochain phi = random_cochain(rng, ctx, pick_arity(rng, bounds, 2), bounds.gen);
                while (phi.is_zero())
                    phi = random_cochain(rng, ctx, pick_arity(rng, bounds, 2), bounds.gen);
                e = Expr{ctx, phi};
                break;
            }
        }
        std::string text = print_expr(e);
        bool ok = false;
        std::string err;
        try {
            Expr back = parse_expr(text, e.kind(), ctx);
            ok = back == e;
        } catch (const ParseError& pe) {
            err = pe.what();
        }
        r.record(ok, [&] {
            return ctx_tag(ctx) + " text=" + text + (err.empty() ? "" : " error=" + err);
        });
    }
}

struct MalformedCase {
    const char* src;
    ExprKind kind;
    std::size_t offset;
};

void fam_parser_malformed(Runner& r, Rng&, const SuiteBounds&) {
    CoisoContext ctx(2, 1);
    const MalformedCase cases[] = {
        {"", ExprKind::poly, 0},
        {"x1 +", ExprKind::poly, 4},
        {"x0", ExprKind::poly, 0},
        {"x9", ExprKind::poly, 0},
        {"1*", ExprKind::poly, 2},
        {"x1^", ExprKind::poly, 3},
        {"3/0", ExprKind::poly, 2},
        {"x1*x2)", ExprKind::poly, 5},
        {"x1 - - x2", ExprKind::poly, 5},
        {"e[1", ExprKind::multivector, 3},
        {"e[1]*x1", ExprKind::multivector, 4},
        {"e[5]", ExprKind::multivector, 2},
        {"D[(1)|(1,0)]", ExprKind::cochain, 2},
        {"D[(1,0)|", ExprKind::cochain, 8},
        {"x1*e[1]", ExprKind::poly, 3},
    };
    for (const MalformedCase& c : cases) {
        bool ok = false;
        std::size_t got = static_cast<std::size_t>(-1);
        try {
            parse_expr(c.src, c.kind, ctx);
        } catch (const ParseError& pe) {
            got = pe.offset();
            ok = pe.offset() == c.offset;
        }
        r.record(ok, [&] {
            return std::string("src=\"") + c.src + "\" expected offset " +
                   std::to_string(c.offset) + " got " +
                   (got == static_cast<std::size_t>(-1) ? std::string("no error")
                                                        : std::to_string(got));
        });
    }
}

const std::vector<Family>& registry() {
    static const std::vector<Family> families = [] {
        std::vector<Family> f = {
            {"bar-complex-laws", fam_bar_complex},
            {"bar-homotopy-identities", fam_bar_homotopy},
            {"brace-antisymmetrization", fam_brace_antisym},
            {"brace-closure-GI", fam_brace_closure},
            {"brst-differential", fam_brst},
            {"chain-maps-FG", fam_chain_maps},
            {"cochain-GI-proposition", fam_GI_proposition},
            {"cochain-b-squared", fam_b_squared},
            {"cochain-b-two-routes", fam_b_two_routes},
            {"cochain-compatibility-oracle", fam_op_oracle},
            {"cochain-insertion-coherence", fam_insertion_coherence},
            {"cochain-xi-chain-map", fam_xi_chain_map},
            {"gerstenhaber-antisymmetry", fam_gerst_antisym},
            {"gerstenhaber-jacobi", fam_gerst_jacobi},
            {"gf-identity-theta-projection", fam_gf_theta},
            {"hkr-classical", fam_hkr_classical},
            {"hkr-defect-certificates", fam_hkr_defect},
            {"hkr-modified", fam_hkr_modified},
            {"hkr-negative-control", fam_hkr_negative_control},
            {"koszul-complex-laws", fam_koszul_complex},
            {"koszul-homotopy-identities", fam_koszul_homotopy},
            {"multivector-compatibility-oracle", fam_mv_oracle},
            {"multivector-gI-closure", fam_gI_closure},
            {"multivector-psi-kernel", fam_psi_kernel},
            {"parser-malformed-corpus", fam_parser_malformed},
            {"parser-roundtrip", fam_parser_roundtrip},
            {"poly-ideal-absorption", fam_poly_ideal},
            {"poly-integration-fundamental", fam_poly_integration},
            {"poly-leibniz", fam_poly_leibniz},
            {"poly-restrict-homomorphism", fam_poly_restrict_hom},
            {"poly-ring-laws", fam_poly_ring_laws},
            {"resolution-ae-linearity", fam_ae_linearity},
            {"schouten-antisymmetry", fam_schouten_antisym},
            {"schouten-jacobi", fam_schouten_jacobi},
            {"schouten-leibniz", fam_schouten_leibniz},
            {"star-assoc-corruption-detected", fam_star_assoc_corruption},
            {"star-codim1-always-succeeds", fam_star_codim1},
            {"star-left-ideal-equivalence", fam_star_equivalence},
            {"star-order1-bracket", fam_star_order1},
            {"star-standard-construction", fam_star_standard},
            {"star-weyl-negative-control", fam_star_weyl_control},
        };
        std::sort(f.begin(), f.end(),
                  [](const Family& a, const Family& b) { return a.name < b.name; });
        return f;
    }();
    return families;
}

} // namespace

std::vector<std::string> suite_family_names() {
    std::vector<std::string> names;
    for (const Family& f : registry()) names.push_back(f.name);
    return names;
}

SuiteReport run_suite(std::uint64_t seed, const SuiteBounds& bounds,
                      const std::vector<std::string>& names) {
    SuiteReport report;
    report.seed = seed;
    Rng master(seed);
    for (const Family& f : registry()) {
        if (!names.empty() &&
            std::find(names.begin(), names.end(), f.name) == names.end())
            continue;
        Runner runner;
        runner.out.name = f.name;
        Rng rng = master.fork(f.name);
        f.run(runner, rng, bounds);
        report.outcomes.push_back(runner.out);
    }
    return report;
}

} // namespace coiso
