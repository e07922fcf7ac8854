#include "coiso/poly.hpp"

#include <stdexcept>

namespace coiso {

Poly::Poly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    add_term(MultiIndex(nvars), c);
}

Poly::Poly(MultiIndex m, const Rational& c) : nvars_(m.size()) {
    add_term(m, c);
}

Poly Poly::variable(std::size_t nvars, std::size_t coord) {
    return Poly(MultiIndex::unit(nvars, coord), Rational(1));
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Poly::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.order();
}

void Poly::add_term(const MultiIndex& m, const Rational& c) {
    if (m.size() != nvars_) throw std::invalid_argument("Poly::add_term: wrong multi-index size");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

void Poly::check_same_space(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Poly: operands live in different variable spaces");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_space(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_space(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_space(o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto la = terms_.begin(), lb = o.terms_.begin();
    for (; la != terms_.end() && lb != o.terms_.end(); ++la, ++lb) {
        if (graded_lex_less(la->first, lb->first)) return true;
        if (graded_lex_less(lb->first, la->first)) return false;
        int c = cmp(la->second, lb->second);
        if (c != 0) return c < 0;
    }
    return la == terms_.end() && lb != o.terms_.end();
}

Poly Poly::partial(std::size_t coord) const {
    if (coord < 1 || coord > nvars_)
        throw std::invalid_argument("Poly::partial: coordinate index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        unsigned p = m.exp[coord - 1];
        if (p == 0) continue;
        MultiIndex d = m;
        d.exp[coord - 1] = p - 1;
        r.add_term(d, c * Rational(static_cast<long>(p)));
    }
    return r;
}

Poly Poly::partial(const MultiIndex& idx) const {
    if (idx.size() != nvars_) throw std::invalid_argument("Poly::partial: wrong multi-index size");
    Poly r = *this;
    for (std::size_t i = 1; i <= nvars_; ++i)
        for (unsigned k = 0; k < idx.exp[i - 1]; ++k) r = r.partial(i);
    return r;
}

Poly Poly::substitute(std::size_t coord, const Poly& value) const {
    if (coord < 1 || coord > nvars_)
        throw std::invalid_argument("Poly::substitute: coordinate index out of range");
    check_same_space(value);
    // Group by the exponent of x_coord, then Horner over powers of `value`.
    Poly r(nvars_);
    unsigned max_pow = 0;
    for (const auto& [m, c] : terms_) max_pow = std::max(max_pow, m.exp[coord - 1]);
    std::vector<Poly> pow;
    pow.reserve(max_pow + 1);
    pow.push_back(Poly(nvars_, Rational(1)));
    for (unsigned k = 1; k <= max_pow; ++k) pow.push_back(pow.back() * value);
    for (const auto& [m, c] : terms_) {
        MultiIndex base = m;
        unsigned p = base.exp[coord - 1];
        base.exp[coord - 1] = 0;
        r += Poly(base, c) * pow[p];
    }
    return r;
}

Poly Poly::integrate(std::size_t coord, const Poly& lower, const Poly& upper) const {
    if (coord < 1 || coord > nvars_)
        throw std::invalid_argument("Poly::integrate: coordinate index out of range");
    Poly anti(nvars_);
    for (const auto& [m, c] : terms_) {
        MultiIndex up = m;
        unsigned p = up.exp[coord - 1] + 1;
        up.exp[coord - 1] = p;
        anti.add_term(up, c / Rational(static_cast<long>(p)));
    }
    return anti.substitute(coord, upper) - anti.substitute(coord, lower);
}

Poly Poly::rename_vars(const std::vector<std::size_t>& image, std::size_t new_nvars) const {
    if (image.size() != nvars_)
        throw std::invalid_argument("Poly::rename_vars: image size mismatch");
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        MultiIndex nm(new_nvars);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exp[i] == 0) continue;
            if (image[i] == 0 || image[i] > new_nvars)
                throw std::invalid_argument("Poly::rename_vars: variable has no image");
            nm.exp[image[i] - 1] += m.exp[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

Poly Poly::extended(std::size_t new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("Poly::extended: cannot shrink");
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        MultiIndex nm(new_nvars);
        std::copy(m.exp.begin(), m.exp.end(), nm.exp.begin());
        r.terms_.emplace(nm, c);
    }
    return r;
}

Poly Poly::restrict_to_C(const CoisoContext& ctx) const {
    if (nvars_ != ctx.n)
        throw std::invalid_argument("Poly::restrict_to_C: polynomial not in context variables");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (!m.touches_transverse(ctx)) r.terms_.emplace(m, c);
    return r;
}

bool Poly::in_ideal(const CoisoContext& ctx) const {
    return restrict_to_C(ctx).is_zero();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw std::logic_error("poly_arith: bad op");
}

} // namespace coiso
