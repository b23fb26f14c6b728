#pragma once

#include <optional>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

/// First isomorphism A -> B in lexicographic backtracking order, if any.
/// Algebras with different signatures are never isomorphic.
std::optional<ElementMap> isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Lexicographically least (le, fusion, e, neg) encoding over all relabelings
/// that keep elements sorted by their order and idempotency invariants.
/// Equal codes iff isomorphic.
std::vector<int> canonicalCode(const FiniteAlgebra& a);

/// A relabeled copy whose tables are the canonical code.
FiniteAlgebra canonicalForm(const FiniteAlgebra& a);

} // namespace dmm
