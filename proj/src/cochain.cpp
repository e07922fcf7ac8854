#include "coiso/cochain.hpp"

#include <functional>
#include <stdexcept>

namespace coiso {

namespace {

void check_ctx(const Cochain& a, const Cochain& b) {
    if (a.ctx() != b.ctx())
        throw std::invalid_argument("Cochain: operands from different contexts");
}

Rational factorial(unsigned m) {
    Rational r(1);
    for (unsigned i = 2; i <= m; ++i) r *= Rational(static_cast<long>(i));
    return r;
}

/// Enumerates all splits of J into `parts` multi-indices summing to J,
/// calling fn(parts_vector, multinomial_coefficient) for each.
void enumerate_splits(const MultiIndex& J, std::size_t parts,
                      const std::function<void(const std::vector<MultiIndex>&, const Rational&)>& fn) {
    const std::size_t nv = J.size();
    std::vector<MultiIndex> acc(parts, MultiIndex(nv));
    // recurse over coordinates; per coordinate, over compositions
    std::function<void(std::size_t, Rational)> rec_coord = [&](std::size_t coord, Rational mult) {
        if (coord == nv) {
            fn(acc, mult);
            return;
        }
        unsigned p = J.exp[coord];
        std::function<void(std::size_t, unsigned, Rational)> rec_part = [&](std::size_t part,
                                                                            unsigned remaining,
                                                                            Rational m) {
            if (part + 1 == parts) {
                acc[part].exp[coord] = remaining;
                rec_coord(coord + 1, mult * m / factorial(remaining));
                return;
            }
            for (unsigned take = 0; take <= remaining; ++take) {
                acc[part].exp[coord] = take;
                rec_part(part + 1, remaining - take, m / factorial(take));
            }
        };
        rec_part(0, p, factorial(p));
    };
    rec_coord(0, Rational(1));
}

int pow_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

} // namespace

Cochain Cochain::scalar(const CoisoContext& ctx, const Poly& f) {
    Cochain r(ctx, 0);
    r.add_term(IndexTuple{}, f);
    return r;
}

Cochain Cochain::mu(const CoisoContext& ctx) {
    Cochain r(ctx, 2);
    r.add_term(IndexTuple{MultiIndex(ctx.n), MultiIndex(ctx.n)}, Poly(ctx.n, Rational(1)));
    return r;
}

Cochain Cochain::partial_op(const CoisoContext& ctx, std::size_t coord) {
    Cochain r(ctx, 1);
    r.add_term(IndexTuple{MultiIndex::unit(ctx.n, coord)}, Poly(ctx.n, Rational(1)));
    return r;
}

Poly Cochain::scalar_value() const {
    if (arity_ != 0) throw std::invalid_argument("Cochain::scalar_value: arity is not 0");
    return terms_.empty() ? Poly(ctx_.n) : terms_.begin()->second;
}

void Cochain::add_term(const IndexTuple& tuple, const Poly& coeff) {
    if (tuple.size() != arity_)
        throw std::invalid_argument("Cochain::add_term: tuple length differs from arity");
    for (const MultiIndex& m : tuple)
        if (m.size() != ctx_.n)
            throw std::invalid_argument("Cochain::add_term: multi-index in wrong variable space");
    if (coeff.nvars() != ctx_.n)
        throw std::invalid_argument("Cochain::add_term: coefficient in wrong variable space");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(tuple, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cochain Cochain::operator+(const Cochain& o) const {
    check_ctx(*this, o);
    if (arity_ != o.arity_) throw std::invalid_argument("Cochain: arity mismatch in sum");
    Cochain r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    check_ctx(*this, o);
    if (arity_ != o.arity_) throw std::invalid_argument("Cochain: arity mismatch in difference");
    Cochain r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r(ctx_, arity_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

Cochain Cochain::operator*(const Rational& c) const {
    Cochain r(ctx_, arity_);
    if (is_zero(c)) return r;
    for (const auto& [t, a] : terms_) r.terms_.emplace(t, a * c);
    return r;
}

Poly op_apply(const Cochain& phi, const std::vector<Poly>& fs) {
    if (fs.size() != phi.arity())
        throw std::invalid_argument("op_apply: arity mismatch");
    const std::size_t n = phi.ctx().n;
    Poly r(n);
    for (const auto& [tuple, c] : phi.terms()) {
        Poly prod = c;
        for (std::size_t i = 0; i < fs.size() && !prod.is_zero(); ++i)
            prod *= fs[i].partial(tuple[i]);
        r += prod;
    }
    return r;
}

Cochain op_circ_i(const Cochain& phi, const Cochain& psi, std::size_t i) {
    check_ctx(phi, psi);
    const unsigned k = phi.arity(), l = psi.arity();
    if (i < 1 || i > k) throw std::invalid_argument("op_circ_i: slot out of range");
    Cochain r(phi.ctx(), k + l - 1);
    for (const auto& [jt, c] : phi.terms())
        for (const auto& [mt, d] : psi.terms()) {
            // distribute the outer slot's derivative over psi's coefficient
            // (part 0) and psi's slots (parts 1..l)
            enumerate_splits(jt[i - 1], l + 1,
                             [&](const std::vector<MultiIndex>& parts, const Rational& mult) {
                                 Poly coeff = c * d.partial(parts[0]) * mult;
                                 if (coeff.is_zero()) return;
                                 IndexTuple out;
                                 out.reserve(k + l - 1);
                                 for (std::size_t s = 0; s + 1 < i; ++s) out.push_back(jt[s]);
                                 for (std::size_t s = 0; s < l; ++s)
                                     out.push_back(mt[s] + parts[s + 1]);
                                 for (std::size_t s = i; s < k; ++s) out.push_back(jt[s]);
                                 r.add_term(out, coeff);
                             });
        }
    return r;
}

Cochain op_circ(const Cochain& phi, const Cochain& psi) {
    const unsigned k = phi.arity(), l = psi.arity();
    if (k == 0) return Cochain::zero(phi.ctx(), l == 0 ? 0 : l - 1);
    Cochain r(phi.ctx(), k + l - 1);
    for (std::size_t i = 1; i <= k; ++i) {
        Cochain part = op_circ_i(phi, psi, i);
        int sign = pow_sign(static_cast<long>(i - 1) * (static_cast<long>(l) - 1));
        r += sign < 0 ? -part : part;
    }
    return r;
}

Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi) {
    check_ctx(phi, psi);
    const int k = static_cast<int>(phi.arity()), l = static_cast<int>(psi.arity());
    const unsigned out_arity = k + l >= 1 ? static_cast<unsigned>(k + l - 1) : 0u;
    Cochain r = Cochain::zero(phi.ctx(), out_arity);
    Cochain a = op_circ(phi, psi);
    Cochain b = op_circ(psi, phi);
    if (!a.is_zero()) r += a;
    int sign = pow_sign(static_cast<long>(k - 1) * (l - 1));
    if (!b.is_zero()) r += sign < 0 ? b : -b;
    return r;
}

Cochain hochschild_b(const Cochain& phi) {
    return -gerstenhaber_bracket(phi, Cochain::mu(phi.ctx()));
}

Cochain hochschild_b_explicit(const Cochain& phi) {
    const unsigned k = phi.arity();
    const std::size_t n = phi.ctx().n;
    Cochain r(phi.ctx(), k + 1);
    const MultiIndex zero(n);
    for (const auto& [tuple, c] : phi.terms()) {
        // f_1 phi(f_2,...,f_{k+1})
        IndexTuple front;
        front.reserve(k + 1);
        front.push_back(zero);
        front.insert(front.end(), tuple.begin(), tuple.end());
        r.add_term(front, c);
        // (-1)^{k+1} phi(f_1,...,f_k) f_{k+1}
        IndexTuple back = tuple;
        back.push_back(zero);
        r.add_term(back, pow_sign(k + 1) < 0 ? -c : c);
        // (-1)^r phi(f_1,...,f_r f_{r+1},...,f_{k+1}): Leibniz split of slot r
        for (unsigned rr = 1; rr <= k; ++rr) {
            enumerate_splits(tuple[rr - 1], 2,
                             [&](const std::vector<MultiIndex>& parts, const Rational& mult) {
                                 IndexTuple out;
                                 out.reserve(k + 1);
                                 for (unsigned s = 0; s + 1 < rr; ++s) out.push_back(tuple[s]);
                                 out.push_back(parts[0]);
                                 out.push_back(parts[1]);
                                 for (unsigned s = rr; s < k; ++s) out.push_back(tuple[s]);
                                 Poly coeff = c * mult;
                                 r.add_term(out, pow_sign(rr) < 0 ? -coeff : coeff);
                             });
        }
    }
    return r;
}

Cochain cup_product(const Cochain& phi, const Cochain& psi) {
    check_ctx(phi, psi);
    Cochain r(phi.ctx(), phi.arity() + psi.arity());
    for (const auto& [ta, ca] : phi.terms())
        for (const auto& [tb, cb] : psi.terms()) {
            IndexTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(t, ca * cb);
        }
    return r;
}

Cochain brace(const Cochain& e, const std::vector<Cochain>& fs) {
    const std::size_t p = fs.size();
    if (p == 0) throw std::invalid_argument("brace: at least one argument cochain required");
    for (const Cochain& f : fs) check_ctx(e, f);
    const unsigned k = e.arity();
    long out_arity = k;
    for (const Cochain& f : fs) out_arity += static_cast<long>(f.arity()) - 1;
    Cochain r = Cochain::zero(e.ctx(), out_arity >= 0 ? static_cast<unsigned>(out_arity) : 0u);
    if (p > k) return r; // not enough slots for non-overlapping insertions

    // iterate over increasing slot choices q_1 < ... < q_p in {1..k}
    std::vector<std::size_t> q(p);
    for (std::size_t m = 0; m < p; ++m) q[m] = m + 1;
    while (true) {
        // sign tau = sum_m i_m * |f_m|, i_m = args preceding the m-th insertion
        long tau = 0;
        long shift = 0;
        for (std::size_t m = 0; m < p; ++m) {
            long i_m = static_cast<long>(q[m]) - 1 + shift;
            long deg = static_cast<long>(fs[m].arity()) - 1;
            tau += i_m * deg;
            shift += deg;
        }
        // nested unsigned insertions, rightmost first so slot indices stay valid
        Cochain acc = e;
        bool dead = false;
        for (std::size_t m = p; m-- > 0;) {
            acc = op_circ_i(acc, fs[m], q[m]);
            if (acc.is_zero()) {
                dead = true;
                break;
            }
        }
        if (!dead) r += pow_sign(tau) < 0 ? -acc : acc;

        // next combination
        std::size_t m = p;
        while (m-- > 0) {
            if (q[m] < k - (p - 1 - m)) {
                ++q[m];
                for (std::size_t j = m + 1; j < p; ++j) q[j] = q[j - 1] + 1;
                break;
            }
            if (m == 0) return r;
        }
    }
}

bool op_compatible(const Cochain& phi) {
    const CoisoContext& ctx = phi.ctx();
    if (phi.arity() == 0) return phi.scalar_value().in_ideal(ctx);
    for (const auto& [tuple, c] : phi.terms())
        if (tuple.back().touches_transverse(ctx) && !c.in_ideal(ctx)) return false;
    return true;
}

} // namespace coiso
