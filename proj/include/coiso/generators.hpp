#pragma once

#include <cstdint>
#include <random>

#include "coiso/cochain.hpp"
#include "coiso/multivector.hpp"

namespace coiso {

/// Size bounds for randomly generated instances. The defaults match the
/// verification suite: small enough to keep exact arithmetic instant, large
/// enough to exercise every sign path.
struct GenBounds {
    unsigned max_degree = 2;   ///< coefficient polynomial degree
    unsigned max_terms = 3;    ///< terms per polynomial
    unsigned max_diff_order = 2; ///< per-slot derivative order for cochains
    long coef_range = 3;       ///< numerators drawn from [-range, range]
};

/// Deterministic source of randomness. Every suite family derives its own
/// stream from (seed, family name) so results do not depend on execution
/// order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Sub-stream keyed by a label; stable across platforms.
    Rng fork(const std::string& label) const;

    std::uint64_t raw() { return eng_(); }
    long range(long lo, long hi); // inclusive
    std::size_t index(std::size_t size);
    bool chance(unsigned num, unsigned den);

private:
    std::mt19937_64 eng_;
};

Rational random_rational(Rng& rng, const GenBounds& b);
/// Nonzero random rational.
Rational random_rational_nonzero(Rng& rng, const GenBounds& b);

/// Random polynomial; may be zero only if allow_zero.
Poly random_poly(Rng& rng, std::size_t nvars, const GenBounds& b, bool allow_zero = false);

/// Random element of the vanishing ideal I (a transverse-coordinate
/// combination); zero when nu = 0.
Poly random_ideal_poly(Rng& rng, const CoisoContext& ctx, const GenBounds& b);

/// Random homogeneous multivector of the given degree.
MultiVector random_multivector(Rng& rng, const CoisoContext& ctx, unsigned degree,
                               const GenBounds& b);

/// Random homogeneous compatible multivector: pure-transverse direction sets
/// receive coefficients from I.
MultiVector random_compatible_multivector(Rng& rng, const CoisoContext& ctx, unsigned degree,
                                          const GenBounds& b);

/// Random cochain of the given arity with slot orders <= max_diff_order.
Cochain random_cochain(Rng& rng, const CoisoContext& ctx, unsigned arity, const GenBounds& b);

/// Random compatible cochain: terms whose last slot touches the transverse
/// block receive coefficients from I.
Cochain random_compatible_cochain(Rng& rng, const CoisoContext& ctx, unsigned arity,
                                  const GenBounds& b);

/// Random constant compatible Poisson bivector (transverse-transverse block
/// identically zero; constant coefficients make the Jacobi identity
/// automatic).
MultiVector random_constant_compatible_poisson(Rng& rng, const CoisoContext& ctx,
                                               const GenBounds& b);

/// Random compatible Poisson structure with [P,P]_S = 0: constant ones plus
/// linear-coefficient candidates filtered through the exact Jacobi test.
MultiVector random_compatible_poisson(Rng& rng, const CoisoContext& ctx, const GenBounds& b);

} // namespace coiso
