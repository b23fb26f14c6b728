#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

/// A computed property. The witness is a violating assignment when the flag
/// is false, or a certifying element list when it is true (possibly empty).
struct Flag {
    bool value = false;
    std::vector<Elem> witness;
    std::string note;

    explicit operator bool() const { return value; }
};

struct ClassificationReport {
    Flag squareIncreasing;
    Flag idempotent;
    Flag distributive;
    Flag totallyOrdered;
    Flag semilinear;
    Flag bounded;
    Flag rigorouslyCompact;
    Flag antiIdempotent;
    Flag odd;
    Flag integral;
    Flag fsi;
    Flag si;
    Flag simple;
    Flag negativelyGenerated;
    Flag gsm;
    Flag dunnMonoid;
    Flag deMorganMonoid;
    Flag sugiharaMonoid;

    /// Flags in declaration order with their serialized names.
    std::vector<std::pair<std::string, const Flag*>> entries() const;
};

ClassificationReport classify(const FiniteAlgebra& a);

// Single predicates, shared with other modules.
bool isSquareIncreasing(const FiniteAlgebra& a);
bool isIdempotent(const FiniteAlgebra& a);
bool isDistributive(const FiniteAlgebra& a);
bool isTotallyOrdered(const FiniteAlgebra& a);
bool isSemilinear(const FiniteAlgebra& a);
bool isNegativelyGenerated(const FiniteAlgebra& a);
bool isDunnMonoid(const FiniteAlgebra& a);
bool isDeMorganMonoid(const FiniteAlgebra& a);
bool isSugiharaMonoid(const FiniteAlgebra& a);
bool isOddSugiharaChain(const FiniteAlgebra& a);
bool isSubdirectlyIrreducible(const FiniteAlgebra& a);
bool isSimple(const FiniteAlgebra& a);
/// Totally ordered idempotent RL (involution allowed).
bool isIdempotentChain(const FiniteAlgebra& a);

} // namespace dmm
