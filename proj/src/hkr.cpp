#include "coiso/hkr.hpp"

#include <algorithm>
#include <stdexcept>

namespace coiso {

namespace {

Rational factorial(unsigned m) {
    Rational r(1);
    for (unsigned i = 2; i <= m; ++i) r *= Rational(static_cast<long>(i));
    return r;
}

// Adds coeff/(k_2! k_1!) * sum over separate permutations of the two blocks,
// transverse slots first, to `out`.
void add_split_antisymmetrization(Cochain& out, const DirSet& part2, const DirSet& part1,
                                  const Poly& coeff) {
    const std::size_t n = out.ctx().n;
    Rational weight = coeff.is_zero() ? Rational(0)
                                      : Rational(1) / (factorial(static_cast<unsigned>(part2.size())) *
                                                       factorial(static_cast<unsigned>(part1.size())));
    std::vector<unsigned> p2 = part2, p1 = part1;
    std::sort(p2.begin(), p2.end());
    std::sort(p1.begin(), p1.end());
    do {
        int s2 = 1;
        for (std::size_t i = 0; i < p2.size(); ++i)
            for (std::size_t j = i + 1; j < p2.size(); ++j)
                if (p2[i] > p2[j]) s2 = -s2;
        std::vector<unsigned> q1 = p1;
        do {
            int s1 = 1;
            for (std::size_t i = 0; i < q1.size(); ++i)
                for (std::size_t j = i + 1; j < q1.size(); ++j)
                    if (q1[i] > q1[j]) s1 = -s1;
            IndexTuple tuple;
            tuple.reserve(p2.size() + q1.size());
            for (unsigned d : p2) tuple.push_back(MultiIndex::unit(n, d));
            for (unsigned d : q1) tuple.push_back(MultiIndex::unit(n, d));
            Poly c = coeff * (weight * Rational(s2 * s1));
            out.add_term(tuple, c);
        } while (std::next_permutation(q1.begin(), q1.end()));
    } while (std::next_permutation(p2.begin(), p2.end()));
}

unsigned homogeneous_degree(const MultiVector& x, const char* who) {
    if (!x.is_homogeneous())
        throw std::invalid_argument(std::string(who) + ": multivector must be homogeneous");
    return x.degree();
}

} // namespace

Cochain hkr_psi(const MultiVector& x) {
    const unsigned k = homogeneous_degree(x, "hkr_psi");
    Cochain out(x.ctx(), k);
    for (const auto& [s, f] : x.terms())
        add_split_antisymmetrization(out, DirSet{}, s, f);
    return out;
}

MultiVector hkr_pi(const Cochain& phi) {
    MultiVector out(phi.ctx());
    for (const auto& [tuple, c] : phi.terms()) {
        DirSet dirs;
        dirs.reserve(tuple.size());
        bool order_one = true;
        for (const MultiIndex& m : tuple) {
            if (m.order() != 1) {
                order_one = false;
                break;
            }
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m.exp[i]) dirs.push_back(static_cast<unsigned>(i + 1));
        }
        if (!order_one) continue;
        out += MultiVector::term(phi.ctx(), dirs, c);
    }
    return out;
}

Cochain hkr_psi_modified(const MultiVector& x, bool require_compatible) {
    const unsigned k = homogeneous_degree(x, "hkr_psi_modified");
    if (require_compatible && !mv_compatible(x))
        throw std::invalid_argument("hkr_psi_modified: multivector is not compatible with C");
    const CoisoContext& ctx = x.ctx();
    Cochain out(ctx, k);
    for (const auto& [s, f] : x.terms()) {
        DirSet part1, part2;
        for (unsigned d : s)
            (ctx.is_transverse(d) ? part2 : part1).push_back(d);
        // Koszul sign of reordering e_S (ascending) into e_{S2} ^ e_{S1}:
        // inversions of the concatenated list against ascending order
        DirSet concat = part2;
        concat.insert(concat.end(), part1.begin(), part1.end());
        int sign = 1;
        for (std::size_t i = 0; i < concat.size(); ++i)
            for (std::size_t j = i + 1; j < concat.size(); ++j)
                if (concat[i] > concat[j]) sign = -sign;
        add_split_antisymmetrization(out, part2, part1, sign < 0 ? -f : f);
    }
    return out;
}

BracketDefect bracket_defect(const MultiVector& x, const MultiVector& y, HkrKind which) {
    if (x.ctx() != y.ctx())
        throw std::invalid_argument("bracket_defect: operands from different contexts");
    homogeneous_degree(x, "bracket_defect");
    homogeneous_degree(y, "bracket_defect");
    if (which == HkrKind::modified && (!mv_compatible(x) || !mv_compatible(y)))
        throw std::invalid_argument("bracket_defect: modified kind requires compatible multivectors");
    auto psi = [&](const MultiVector& v) {
        return which == HkrKind::classical ? hkr_psi(v) : hkr_psi_modified(v);
    };
    MultiVector xy = schouten_bracket(x, y);
    Cochain lhs = gerstenhaber_bracket(psi(x), psi(y));
    Cochain rhs = psi(xy);
    Cochain defect = lhs;
    if (!rhs.is_zero()) {
        if (lhs.is_zero())
            defect = -rhs;
        else
            defect = lhs - rhs;
    }
    bool cocycle = hochschild_b(defect).is_zero();
    bool pi_zero = hkr_pi(defect).is_zero();
    return BracketDefect{defect, cocycle, pi_zero};
}

} // namespace coiso
