#include "coiso/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace coiso {

namespace {

int pow_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Lifts a 2n-variable (a,b) polynomial into the (k+2)n bar variable space.
Poly lift_ab(const Poly& f, std::size_t n, unsigned k) {
    std::vector<std::size_t> image(2 * n);
    for (std::size_t c = 1; c <= n; ++c) {
        image[c - 1] = c;                         // a block
        image[n + c - 1] = (k + 1) * n + c;       // b block
    }
    return f.rename_vars(image, (k + 2) * n);
}

} // namespace

BarChain::BarChain(std::size_t n_, unsigned k_, Poly v) : n(n_), k(k_), value(std::move(v)) {
    if (value.nvars() != nvars())
        throw std::invalid_argument("BarChain: value must have (k+2)*n variables");
}

BarChain BarChain::operator+(const BarChain& o) const {
    if (n != o.n || k != o.k) throw std::invalid_argument("BarChain: degree mismatch");
    return BarChain(n, k, value + o.value);
}

BarChain BarChain::operator-(const BarChain& o) const {
    if (n != o.n || k != o.k) throw std::invalid_argument("BarChain: degree mismatch");
    return BarChain(n, k, value - o.value);
}

void KoszulChain::add_term(const DirSet& sorted_dirs, const Poly& coeff) {
    if (sorted_dirs.size() != k)
        throw std::invalid_argument("KoszulChain::add_term: wrong exterior degree");
    for (unsigned d : sorted_dirs)
        if (d < 1 || d > n) throw std::invalid_argument("KoszulChain::add_term: direction out of range");
    if (coeff.nvars() != 2 * n)
        throw std::invalid_argument("KoszulChain::add_term: coefficient must have 2n variables");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.emplace(sorted_dirs, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

KoszulChain KoszulChain::operator+(const KoszulChain& o) const {
    if (n != o.n || k != o.k) throw std::invalid_argument("KoszulChain: degree mismatch");
    KoszulChain r = *this;
    for (const auto& [s, f] : o.terms) r.add_term(s, f);
    return r;
}

KoszulChain KoszulChain::operator-(const KoszulChain& o) const {
    if (n != o.n || k != o.k) throw std::invalid_argument("KoszulChain: degree mismatch");
    KoszulChain r = *this;
    for (const auto& [s, f] : o.terms) r.add_term(s, -f);
    return r;
}

BarChain bar_boundary(const BarChain& c) {
    if (c.k < 1) throw std::invalid_argument("bar_boundary: degree must be >= 1 (use augmentation)");
    const std::size_t n = c.n;
    const unsigned k = c.k;
    BarChain out(n, k - 1);
    for (unsigned r = 0; r <= k; ++r) {
        // image of the (k+2) old blocks in the (k+1) new blocks
        std::vector<std::size_t> block_img(k + 2);
        block_img[0] = 0;
        block_img[k + 1] = k; // new b block
        for (unsigned j = 1; j <= k; ++j) {
            if (r == 0) {
                block_img[j] = j - 1; // x_1 := a, rest shift down
            } else if (r == k) {
                block_img[j] = (j == k) ? k : j; // x_k := b
            } else {
                block_img[j] = (j <= r) ? j : j - 1; // x_{r+1} := x_r
            }
        }
        std::vector<std::size_t> image((k + 2) * n);
        for (unsigned j = 0; j <= k + 1; ++j)
            for (std::size_t cc = 1; cc <= n; ++cc)
                image[j * n + cc - 1] = block_img[j] * n + cc;
        Poly term = c.value.rename_vars(image, (k + 1) * n);
        out.value += pow_sign(r) < 0 ? -term : term;
    }
    return out;
}

Poly augmentation(const BarChain& c) {
    if (c.k != 0) throw std::invalid_argument("augmentation: chain degree must be 0");
    std::vector<std::size_t> image(2 * c.n);
    for (std::size_t cc = 1; cc <= c.n; ++cc) {
        image[cc - 1] = cc;
        image[c.n + cc - 1] = cc;
    }
    return c.value.rename_vars(image, c.n);
}

Poly augmentation(const KoszulChain& c) {
    if (c.k != 0) throw std::invalid_argument("augmentation: chain degree must be 0");
    BarChain as_bar(c.n, 0);
    auto it = c.terms.find(DirSet{});
    if (it != c.terms.end()) as_bar.value = it->second;
    return augmentation(as_bar);
}

BarChain bar_homotopy(const BarChain& c) {
    const std::size_t n = c.n;
    const unsigned k = c.k;
    BarChain out(n, k + 1);
    std::vector<std::size_t> image((k + 2) * n);
    for (unsigned j = 0; j <= k; ++j)
        for (std::size_t cc = 1; cc <= n; ++cc) image[j * n + cc - 1] = j * n + cc;
    for (std::size_t cc = 1; cc <= n; ++cc)
        image[(k + 1) * n + cc - 1] = (k + 1) * n + cc; // b becomes x_{k+1}
    Poly shifted = c.value.rename_vars(image, (k + 3) * n);
    out.value = pow_sign(k + 1) < 0 ? -shifted : shifted;
    return out;
}

BarChain bar_homotopy_minus1(const Poly& f) {
    const std::size_t n = f.nvars();
    std::vector<std::size_t> image(n);
    for (std::size_t cc = 1; cc <= n; ++cc) image[cc - 1] = cc; // into the a block
    return BarChain(n, 0, f.rename_vars(image, 2 * n));
}

KoszulChain koszul_boundary(const KoszulChain& c) {
    if (c.k < 1) throw std::invalid_argument("koszul_boundary: degree must be >= 1");
    const std::size_t n = c.n;
    KoszulChain out(n, c.k - 1);
    for (const auto& [s, f] : c.terms)
        for (std::size_t m = 0; m < s.size(); ++m) {
            Poly xi = Poly::variable(2 * n, s[m]) - Poly::variable(2 * n, n + s[m]);
            DirSet rem = s;
            rem.erase(rem.begin() + static_cast<long>(m));
            Poly coeff = f * xi;
            out.add_term(rem, m % 2 == 0 ? coeff : -coeff);
        }
    return out;
}

KoszulChain koszul_homotopy(const KoszulChain& c) {
    const std::size_t n = c.n;
    const unsigned k = c.k;
    KoszulChain out(n, k + 1);
    const std::size_t tvar = 2 * n + 1;
    for (const auto& [s, f] : c.terms)
        for (std::size_t j = 1; j <= n; ++j) {
            if (std::binary_search(s.begin(), s.end(), static_cast<unsigned>(j))) continue;
            Poly g = f.partial(n + j);
            if (g.is_zero()) continue;
            // substitute b := t b + (1-t) a, multiply by t^k, integrate t in [0,1]
            Poly ext = g.extended(tvar);
            Poly t = Poly::variable(tvar, tvar);
            Poly one_minus_t = Poly(tvar, Rational(1)) - t;
            for (std::size_t cc = 1; cc <= n; ++cc) {
                Poly repl = t * Poly::variable(tvar, n + cc) + one_minus_t * Poly::variable(tvar, cc);
                ext = ext.substitute(n + cc, repl);
            }
            for (unsigned e = 0; e < k; ++e) ext *= t;
            Poly integ = ext.integrate(tvar, Poly(tvar), Poly(tvar, Rational(1)));
            std::vector<std::size_t> image(tvar, 0);
            for (std::size_t v = 1; v <= 2 * n; ++v) image[v - 1] = v;
            Poly back = integ.rename_vars(image, 2 * n);
            // -e^j wedged in from the left
            DirSet sj = s;
            std::size_t before = 0;
            while (before < sj.size() && sj[before] < j) ++before;
            sj.insert(sj.begin() + static_cast<long>(before), static_cast<unsigned>(j));
            int sign = -pow_sign(static_cast<long>(before));
            out.add_term(sj, sign < 0 ? -back : back);
        }
    return out;
}

KoszulChain koszul_homotopy_minus1(const Poly& f) {
    const std::size_t n = f.nvars();
    KoszulChain out(n, 0);
    std::vector<std::size_t> image(n);
    for (std::size_t cc = 1; cc <= n; ++cc) image[cc - 1] = cc;
    out.add_term(DirSet{}, f.rename_vars(image, 2 * n));
    return out;
}

BarChain map_F(const KoszulChain& c) {
    const std::size_t n = c.n;
    const unsigned k = c.k;
    BarChain out(n, k);
    const std::size_t nv = (k + 2) * n;
    for (const auto& [s, f] : c.terms) {
        Poly lifted = lift_ab(f, n, k);
        // det over permutations of (x_j - a) evaluated on the covectors e^{s_i}
        std::vector<std::size_t> perm(k);
        for (unsigned i = 0; i < k; ++i) perm[i] = i;
        Poly det(nv);
        do {
            int sign = 1;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            Poly prod(nv, Rational(1));
            for (unsigned i = 0; i < k; ++i) {
                std::size_t xi = (perm[i] + 1) * n + s[i]; // x_{perm(i)+1}^{s_i}
                prod *= Poly::variable(nv, xi) - Poly::variable(nv, s[i]);
            }
            det += sign < 0 ? -prod : prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (k == 0) det = Poly(nv, Rational(1));
        out.value += lifted * det;
    }
    return out;
}

KoszulChain map_G(const BarChain& c) {
    const std::size_t n = c.n;
    const unsigned k = c.k;
    KoszulChain out(n, k);
    const std::size_t base = (k + 2) * n;
    const std::size_t ext_nv = base + k; // t_1..t_k appended

    std::vector<unsigned> tuple(k, 1);
    while (true) {
        bool repeat = false;
        for (unsigned i = 0; i < k && !repeat; ++i)
            for (unsigned j = i + 1; j < k; ++j)
                if (tuple[i] == tuple[j]) {
                    repeat = true;
                    break;
                }
        if (!repeat) {
            Poly d = c.value;
            for (unsigned r = 1; r <= k; ++r) d = d.partial(r * n + tuple[r - 1]);
            if (!d.is_zero()) {
                Poly ext = d.extended(ext_nv);
                for (unsigned r = 1; r <= k; ++r) {
                    Poly t_r = Poly::variable(ext_nv, base + r);
                    Poly one_minus = Poly(ext_nv, Rational(1)) - t_r;
                    for (std::size_t cc = 1; cc <= n; ++cc) {
                        Poly repl = t_r * Poly::variable(ext_nv, cc) +
                                    one_minus * Poly::variable(ext_nv, (k + 1) * n + cc);
                        ext = ext.substitute(r * n + cc, repl);
                    }
                }
                // innermost integral first: t_k in [0, t_{k-1}], ..., t_1 in [0, 1]
                for (unsigned r = k; r >= 1; --r) {
                    Poly lower(ext_nv);
                    Poly upper = r == 1 ? Poly(ext_nv, Rational(1))
                                        : Poly::variable(ext_nv, base + r - 1);
                    ext = ext.integrate(base + r, lower, upper);
                }
                std::vector<std::size_t> image(ext_nv, 0);
                for (std::size_t cc = 1; cc <= n; ++cc) {
                    image[cc - 1] = cc;                     // a
                    image[(k + 1) * n + cc - 1] = n + cc;   // b
                }
                Poly coeff = ext.rename_vars(image, 2 * n);
                if (!coeff.is_zero()) {
                    DirSet sorted(tuple.begin(), tuple.end());
                    int sign = 1;
                    for (std::size_t i = 1; i < sorted.size(); ++i)
                        for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
                            std::swap(sorted[j - 1], sorted[j]);
                            sign = -sign;
                        }
                    out.add_term(sorted, sign < 0 ? -coeff : coeff);
                }
            }
        }
        // next tuple in {1..n}^k
        unsigned pos = k;
        while (pos > 0) {
            if (tuple[pos - 1] < n) {
                ++tuple[pos - 1];
                for (unsigned j = pos; j < k; ++j) tuple[j] = 1;
                break;
            }
            --pos;
        }
        if (pos == 0) break;
        if (k == 0) break;
    }
    return out;
}

BarChain theta(const BarChain& c) { return map_F(map_G(c)); }

BarChain bar_module_action(const Poly& f_ab, const BarChain& c) {
    return BarChain(c.n, c.k, c.value * lift_ab(f_ab, c.n, c.k));
}

KoszulChain koszul_module_action(const Poly& f_ab, const KoszulChain& c) {
    KoszulChain out(c.n, c.k);
    for (const auto& [s, g] : c.terms) out.add_term(s, g * f_ab);
    return out;
}

} // namespace coiso
