#include "coiso/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace coiso {

int wedge_merge(const DirSet& a, const DirSet& b, DirSet& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-elements
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

namespace {

// Sorts dirs ascending, returns the permutation sign; 0 on repeats.
int sort_dirs(DirSet& dirs) {
    int sign = 1;
    for (std::size_t i = 1; i < dirs.size(); ++i)
        for (std::size_t j = i; j > 0 && dirs[j - 1] >= dirs[j]; --j) {
            if (dirs[j - 1] == dirs[j]) return 0;
            std::swap(dirs[j - 1], dirs[j]);
            sign = -sign;
        }
    return sign;
}

void check_ctx(const MultiVector& x, const MultiVector& y) {
    if (x.ctx() != y.ctx())
        throw std::invalid_argument("MultiVector: operands from different contexts");
}

} // namespace

MultiVector::MultiVector(const CoisoContext& ctx, const Poly& scalar) : ctx_(ctx) {
    add_term(DirSet{}, scalar);
}

MultiVector MultiVector::term(const CoisoContext& ctx, const DirSet& dirs, const Poly& coeff) {
    MultiVector r(ctx);
    DirSet sorted = dirs;
    int sign = sort_dirs(sorted);
    if (sign == 0) return r;
    r.add_term(sorted, sign < 0 ? -coeff : coeff);
    return r;
}

bool MultiVector::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t k = terms_.begin()->first.size();
    for (const auto& [s, f] : terms_)
        if (s.size() != k) return false;
    return true;
}

unsigned MultiVector::degree() const {
    if (!is_homogeneous())
        throw std::invalid_argument("MultiVector::degree: element is not homogeneous");
    return terms_.empty() ? 0u : static_cast<unsigned>(terms_.begin()->first.size());
}

MultiVector MultiVector::component(unsigned k) const {
    MultiVector r(ctx_);
    for (const auto& [s, f] : terms_)
        if (s.size() == k) r.terms_.emplace(s, f);
    return r;
}

Poly MultiVector::coeff(const DirSet& dirs) const {
    auto it = terms_.find(dirs);
    return it == terms_.end() ? Poly(ctx_.n) : it->second;
}

void MultiVector::add_term(const DirSet& sorted_dirs, const Poly& coeff) {
    if (coeff.nvars() != ctx_.n)
        throw std::invalid_argument("MultiVector::add_term: coefficient in wrong variable space");
    for (unsigned d : sorted_dirs)
        if (d < 1 || d > ctx_.n)
            throw std::invalid_argument("MultiVector::add_term: direction out of range");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(sorted_dirs, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
    check_ctx(*this, o);
    MultiVector r = *this;
    for (const auto& [s, f] : o.terms_) r.add_term(s, f);
    return r;
}

MultiVector MultiVector::operator-(const MultiVector& o) const {
    check_ctx(*this, o);
    MultiVector r = *this;
    for (const auto& [s, f] : o.terms_) r.add_term(s, -f);
    return r;
}

MultiVector MultiVector::operator-() const {
    MultiVector r(ctx_);
    for (const auto& [s, f] : terms_) r.terms_.emplace(s, -f);
    return r;
}

MultiVector MultiVector::operator*(const Rational& c) const {
    MultiVector r(ctx_);
    if (is_zero(c)) return r;
    for (const auto& [s, f] : terms_) r.terms_.emplace(s, f * c);
    return r;
}

MultiVector MultiVector::operator*(const Poly& f) const {
    MultiVector r(ctx_);
    for (const auto& [s, g] : terms_) r.add_term(s, g * f);
    return r;
}

MultiVector mv_wedge(const MultiVector& x, const MultiVector& y) {
    check_ctx(x, y);
    MultiVector r(x.ctx());
    DirSet merged;
    for (const auto& [s, f] : x.terms())
        for (const auto& [t, g] : y.terms()) {
            int sign = wedge_merge(s, t, merged);
            if (sign == 0) continue;
            Poly c = f * g;
            r.add_term(merged, sign < 0 ? -c : c);
        }
    return r;
}

MultiVector schouten_bracket(const MultiVector& x, const MultiVector& y) {
    check_ctx(x, y);
    MultiVector r(x.ctx());
    DirSet merged;
    for (const auto& [s, f] : x.terms())
        for (const auto& [t, g] : y.terms()) {
            const int k = static_cast<int>(s.size());
            const int l = static_cast<int>(t.size());
            // sum over the odd directions of x: (d^L/d theta_i x) (d/dx_i y)
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                unsigned i = s[pos];
                Poly dg = g.partial(i);
                if (dg.is_zero()) continue;
                DirSet s_rem = s;
                s_rem.erase(s_rem.begin() + static_cast<long>(pos));
                int sign = wedge_merge(s_rem, t, merged);
                if (sign == 0) continue;
                if (pos % 2 == 1) sign = -sign;
                Poly c = f * dg;
                r.add_term(merged, sign < 0 ? -c : c);
            }
            // minus (-1)^{(k-1)(l-1)} times the same with x and y swapped
            const bool swap_minus = (((k - 1) * (l - 1)) % 2 + 2) % 2 == 0;
            for (std::size_t pos = 0; pos < t.size(); ++pos) {
                unsigned i = t[pos];
                Poly df = f.partial(i);
                if (df.is_zero()) continue;
                DirSet t_rem = t;
                t_rem.erase(t_rem.begin() + static_cast<long>(pos));
                int sign = wedge_merge(t_rem, s, merged);
                if (sign == 0) continue;
                if (pos % 2 == 1) sign = -sign;
                if (swap_minus) sign = -sign;
                Poly c = g * df;
                r.add_term(merged, sign < 0 ? -c : c);
            }
        }
    return r;
}

bool mv_compatible(const MultiVector& x) {
    const CoisoContext& ctx = x.ctx();
    for (const auto& [s, f] : x.terms()) {
        bool pure_transverse = true;
        for (unsigned d : s)
            if (ctx.is_tangential(d)) {
                pure_transverse = false;
                break;
            }
        if (pure_transverse && !f.in_ideal(ctx)) return false;
    }
    return true;
}

Poly pair_exact_forms(const MultiVector& x, const std::vector<Poly>& gs) {
    const std::size_t k = gs.size();
    const std::size_t n = x.ctx().n;
    for (const auto& [s, f] : x.terms())
        if (s.size() != k)
            throw std::invalid_argument("pair_exact_forms: arity mismatch");
    for (const Poly& g : gs)
        if (g.nvars() != n)
            throw std::invalid_argument("pair_exact_forms: argument in wrong variable space");

    Poly result(n);
    // det over permutations; k <= n stays tiny at desk scale
    std::vector<std::size_t> perm(k);
    for (const auto& [s, f] : x.terms()) {
        // gradient rows: d g_i / d x^{s_j}
        std::vector<std::vector<Poly>> grad(k, std::vector<Poly>());
        for (std::size_t i = 0; i < k; ++i) {
            grad[i].reserve(k);
            for (std::size_t j = 0; j < k; ++j) grad[i].push_back(gs[i].partial(s[j]));
        }
        for (std::size_t i = 0; i < k; ++i) perm[i] = i;
        Poly det(n);
        do {
            int sign = 1;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            Poly prod(n, Rational(1));
            for (std::size_t i = 0; i < k; ++i) prod *= grad[i][perm[i]];
            det += sign < 0 ? -prod : prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (k == 0) det = Poly(n, Rational(1));
        result += f * det;
    }
    return result;
}

void QuotientMultiVector::add_term(const DirSet& sorted_dirs, const Poly& coeff) {
    if (coeff.nvars() != ctx_.n)
        throw std::invalid_argument("QuotientMultiVector: coefficient in wrong variable space");
    for (unsigned d : sorted_dirs)
        if (!ctx_.is_transverse(d))
            throw std::invalid_argument("QuotientMultiVector: direction not in the transverse block");
    Poly restricted = coeff.restrict_to_C(ctx_);
    if (restricted.is_zero()) return;
    auto [it, inserted] = terms_.emplace(sorted_dirs, restricted);
    if (!inserted) {
        it->second += restricted;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuotientMultiVector QuotientMultiVector::operator+(const QuotientMultiVector& o) const {
    if (ctx_ != o.ctx_)
        throw std::invalid_argument("QuotientMultiVector: operands from different contexts");
    QuotientMultiVector r = *this;
    for (const auto& [s, f] : o.terms_) r.add_term(s, f);
    return r;
}

QuotientMultiVector QuotientMultiVector::operator-(const QuotientMultiVector& o) const {
    if (ctx_ != o.ctx_)
        throw std::invalid_argument("QuotientMultiVector: operands from different contexts");
    QuotientMultiVector r = *this;
    for (const auto& [s, f] : o.terms_) r.add_term(s, -f);
    return r;
}

MultiVector QuotientMultiVector::lift() const {
    MultiVector r(ctx_);
    for (const auto& [s, f] : terms_) r.add_term(s, f);
    return r;
}

QuotientMultiVector mv_project_psi(const MultiVector& x) {
    const CoisoContext& ctx = x.ctx();
    QuotientMultiVector r(ctx);
    for (const auto& [s, f] : x.terms()) {
        bool pure_transverse = true;
        for (unsigned d : s)
            if (ctx.is_tangential(d)) {
                pure_transverse = false;
                break;
            }
        if (pure_transverse) r.add_term(s, f.restrict_to_C(ctx));
    }
    return r;
}

QuotientMultiVector brst_differential(const MultiVector& p, const QuotientMultiVector& a) {
    if (p.ctx() != a.ctx())
        throw std::invalid_argument("brst_differential: operands from different contexts");
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2))
        throw std::invalid_argument("brst_differential: p must be a bivector");
    if (!mv_compatible(p))
        throw std::invalid_argument("brst_differential: p is not compatible with C");
    return mv_project_psi(schouten_bracket(p, a.lift()));
}

} // namespace coiso
