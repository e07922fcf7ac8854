#pragma once

#include "coiso/cochain.hpp"
#include "coiso/multivector.hpp"

namespace coiso {

/// Classical HKR map: a homogeneous k-vector becomes the k-differential
/// operator obtained by full antisymmetrization with weight 1/k!. Its image
/// consists of Hochschild cocycles.
Cochain hkr_psi(const MultiVector& x);

/// HKR projection: keeps the terms in which every slot is a first-order
/// derivative and wedges the directions; pi o psi = id.
MultiVector hkr_pi(const Cochain& phi);

/// Modified (coisotropic) HKR map: each direction set is rewritten as
/// (transverse part) wedge (tangential part) with the Koszul reordering
/// sign, the two parts are antisymmetrized separately, and the transverse
/// slots are placed before the tangential ones. Compatible multivectors
/// land in G_I, which the classical map does not achieve. With
/// require_compatible set, throws if x is not compatible.
Cochain hkr_psi_modified(const MultiVector& x, bool require_compatible = false);

enum class HkrKind { classical, modified };

struct BracketDefect {
    Cochain defect;    ///< [psi x, psi y]_G - psi [x,y]_S
    bool is_cocycle;   ///< b(defect) == 0
    bool pi_vanishes;  ///< pi_HKR(defect) == 0
};

/// Compares the two routes around the HKR square for homogeneous x, y. Both
/// flags true certifies that the defect is a coboundary (exactness follows
/// from cocycle + vanishing projection) without constructing a primitive.
/// The modified kind requires both inputs compatible.
BracketDefect bracket_defect(const MultiVector& x, const MultiVector& y, HkrKind which);

} // namespace coiso
