#pragma once

#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

/// Deductive filter as a sorted element list.
using Filter = std::vector<Elem>;

/// Congruence as class ids per element; ids are numbered by least member.
using Congruence = std::vector<int>;

/// Least deductive filter containing the given elements and e.
Filter filterGenerated(const FiniteAlgebra& a, const std::vector<Elem>& gens);

bool isDeductiveFilter(const FiniteAlgebra& a, const Filter& f);

/// All deductive filters, ordered by size and then lexicographically.
/// The first entry is [e), the last is the whole carrier.
std::vector<Filter> deductiveFilters(const FiniteAlgebra& a);

/// The congruence {(a,b) : a->b, b->a in G}. Throws InternalInvariantViolation
/// if the relation fails to be a congruence.
Congruence leibniz(const FiniteAlgebra& a, const Filter& g);

/// Inverse of leibniz: {a : (a/\e, e) in theta}.
Filter filterOfCongruence(const FiniteAlgebra& a, const Congruence& theta);

struct Quotient {
    FiniteAlgebra algebra;
    ElementMap map; // canonical surjection
};

/// A/G with classes ordered by least member. Labels follow the least member.
Quotient quotient(const FiniteAlgebra& a, const Filter& g);
Quotient quotientByCongruence(const FiniteAlgebra& a, const Congruence& theta);

/// Congruences in the order of deductiveFilters.
std::vector<Congruence> congruenceLattice(const FiniteAlgebra& a);

/// Proper deductive filters whose complement is closed under join.
std::vector<Filter> primeFilters(const FiniteAlgebra& a);

/// Longest chain of prime filters, counted in edges; 0 when there are none.
int depth(const FiniteAlgebra& a);

/// True when the identity congruence is not the meet of two strictly larger
/// congruences.
bool identityMeetIrreducible(const FiniteAlgebra& a);

bool isSubset(const std::vector<Elem>& small, const std::vector<Elem>& big);

} // namespace dmm
