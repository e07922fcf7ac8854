#pragma once

#include <cstddef>
#include <vector>

#include "coiso/context.hpp"

namespace coiso {

/// Derivative multi-index (p_1, ..., p_m): exponent vector of a monomial or
/// the order profile of an iterated partial derivative.
struct MultiIndex {
    std::vector<unsigned> exp;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : exp(nvars, 0u) {}
    explicit MultiIndex(std::vector<unsigned> e) : exp(std::move(e)) {}

    /// Unit multi-index e_coord (coord 1-based).
    static MultiIndex unit(std::size_t nvars, std::size_t coord) {
        MultiIndex m(nvars);
        m.exp.at(coord - 1) = 1;
        return m;
    }

    std::size_t size() const { return exp.size(); }

    unsigned order() const {
        unsigned s = 0;
        for (unsigned p : exp) s += p;
        return s;
    }

    bool is_zero() const {
        for (unsigned p : exp)
            if (p) return false;
        return true;
    }

    /// Some positive exponent sits in the transverse block of ctx.
    bool touches_transverse(const CoisoContext& ctx) const {
        for (std::size_t i = ctx.n - ctx.nu; i < exp.size(); ++i)
            if (exp[i]) return true;
        return false;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    bool operator==(const MultiIndex& o) const { return exp == o.exp; }
    bool operator!=(const MultiIndex& o) const { return exp != o.exp; }
};

/// Graded-lexicographic order: total order first, ties broken
/// lexicographically on the exponent vector. Canonical term order of the
/// whole library.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        unsigned oa = a.order(), ob = b.order();
        if (oa != ob) return oa < ob;
        return a.exp < b.exp;
    }
};

inline bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    return GradedLexLess{}(a, b);
}

} // namespace coiso
