#pragma once

#include <map>

#include "coiso/multivector.hpp"
#include "coiso/poly.hpp"

namespace coiso {

/// Degree-k element of the bar resolution: a polynomial function of the
/// (k+2) coordinate blocks (a, x_1, ..., x_k, b), each of size n.
///
/// Block t (0 = a, 1..k = middle, k+1 = b) and 1-based coordinate c map to
/// the flat variable index t*n + c, so the diagonal substitutions of the bar
/// boundary are mechanical renamings.
struct BarChain {
    std::size_t n = 0;
    unsigned k = 0;
    Poly value;

    BarChain() = default;
    BarChain(std::size_t n_, unsigned k_) : n(n_), k(k_), value((k_ + 2) * n_) {}
    BarChain(std::size_t n_, unsigned k_, Poly v);

    std::size_t nvars() const { return (k + 2) * n; }
    /// Flat 1-based variable index of coordinate c in block t.
    std::size_t var(unsigned block, std::size_t c) const { return block * n + c; }

    bool is_zero() const { return value.is_zero(); }
    bool operator==(const BarChain& o) const { return n == o.n && k == o.k && value == o.value; }
    bool operator!=(const BarChain& o) const { return !(*this == o); }

    BarChain operator+(const BarChain& o) const;
    BarChain operator-(const BarChain& o) const;
};

/// Degree-k element of the Koszul resolution A^e (x) Lambda^k E*: direction
/// subsets S of {1..n} with |S| = k and polynomial coefficients in the two
/// blocks (a, b) (flat indices: a_c = c, b_c = n + c).
struct KoszulChain {
    std::size_t n = 0;
    unsigned k = 0;
    std::map<DirSet, Poly> terms;

    KoszulChain() = default;
    KoszulChain(std::size_t n_, unsigned k_) : n(n_), k(k_) {}

    void add_term(const DirSet& sorted_dirs, const Poly& coeff);

    bool is_zero() const { return terms.empty(); }
    bool operator==(const KoszulChain& o) const {
        return n == o.n && k == o.k && terms == o.terms;
    }
    bool operator!=(const KoszulChain& o) const { return !(*this == o); }

    KoszulChain operator+(const KoszulChain& o) const;
    KoszulChain operator-(const KoszulChain& o) const;
};

/// Bar boundary: alternating sum of the k+1 diagonal substitutions
/// F(a,a,x_1,..), (-1)^r F(..,x_r,x_r,..), (-1)^k F(..,b,b). Requires k >= 1.
BarChain bar_boundary(const BarChain& c);

/// Augmentation of a degree-0 chain: diagonal substitution b := a, result in
/// the n plain variables.
Poly augmentation(const BarChain& c);
Poly augmentation(const KoszulChain& c);

/// h_H^k: shifts b into a new last middle block with sign (-1)^{k+1}.
BarChain bar_homotopy(const BarChain& c);
/// h_H^{-1}: extends f in A to the degree-0 chain (a,b) |-> f(a).
BarChain bar_homotopy_minus1(const Poly& f);

/// Koszul boundary: interior product with xi(a,b) = a - b in the first slot.
KoszulChain koszul_boundary(const KoszulChain& c);

/// h_K^k: -sum_j e^j ^ int_0^1 dt t^k (dw/db^j)(a, t b + (1-t) a). Exact; all
/// integrals of polynomial chains are rational.
KoszulChain koszul_homotopy(const KoszulChain& c);
/// h_K^{-1}: same extension as the bar case.
KoszulChain koszul_homotopy_minus1(const Poly& f);

/// Comparison map F^k: (F w)(a,x_1..x_k,b) = w(a,b)(x_1 - a, ..., x_k - a).
BarChain map_F(const KoszulChain& c);

/// Comparison map G^k: iterated simplex integral of the mixed derivative of
/// F evaluated at x_r = t_r a + (1 - t_r) b; exact rational output.
KoszulChain map_G(const BarChain& c);

/// Projection Theta^k = F^k G^k.
BarChain theta(const BarChain& c);

/// A^e-module action (f . c) for f a polynomial in the (a,b) variables; used
/// to exercise A^e-linearity of the structure maps.
BarChain bar_module_action(const Poly& f_ab, const BarChain& c);
KoszulChain koszul_module_action(const Poly& f_ab, const KoszulChain& c);

} // namespace coiso
