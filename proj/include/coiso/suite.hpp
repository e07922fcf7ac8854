#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coiso/generators.hpp"

namespace coiso {

/// Size bounds for the verification suite; the defaults are the documented
/// desk-scale bounds (n <= 3, nu <= 2, degree <= 2, arity <= 3, 50 instances
/// per family).
struct SuiteBounds {
    unsigned max_n = 3;
    unsigned max_nu = 2;
    unsigned instances = 50;
    unsigned star_order = 6;
    unsigned star_tensors = 10;
    unsigned defect_pairs = 25;
    unsigned parser_roundtrips = 200;
    GenBounds gen;
};

struct FamilyOutcome {
    std::string name;
    unsigned instances = 0;
    unsigned failures = 0;
    std::string first_counterexample; // re-parseable expressions with context

    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<FamilyOutcome> outcomes; // sorted by family name

    bool all_passed() const {
        for (const auto& o : outcomes)
            if (!o.passed()) return false;
        return true;
    }
};

/// All registered invariant family names, sorted.
std::vector<std::string> suite_family_names();

/// Runs the selected families (all when `names` is empty) with randomness
/// derived from (seed, family name), so results are independent of order.
SuiteReport run_suite(std::uint64_t seed, const SuiteBounds& bounds,
                      const std::vector<std::string>& names = {});

/// Brute-force compatibility oracle for multivectors: contracts against
/// tuples of exact differentials of ideal generators times monomials.
bool oracle_mv_compatible(const MultiVector& x, Rng& rng, const GenBounds& b);

/// Brute-force compatibility oracle for cochains: substitutes g = x''_j * h
/// into the last slot for deterministic and random h.
bool oracle_op_compatible(const Cochain& phi, Rng& rng, const GenBounds& b);

} // namespace coiso
