#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

/// S_n; even n inside Z* (carrier +-1..+-m, e = 1), odd n inside Z
/// (carrier -m..m, e = 0). Labels are the integers. n = 1 is trivial.
FiniteAlgebra sugihara(int n);

/// Base S (a totally ordered odd Sugihara monoid, with or without ~) and the
/// size of the chain X_c for each base element c, indexed like S.
struct ChainFamilySpec {
    FiniteAlgebra base;
    std::vector<int> sizes;
};

/// Position of an element of S (x) X: base element and depth, depth 0 being
/// the top of its block.
struct OtimesPoint {
    Elem base;
    int depth;
};

struct OtimesResult {
    FiniteAlgebra algebra;
    std::vector<OtimesPoint> points; // per element of the result
};

/// Lexicographic product S (x) X as an RL, elements ascending. Throws SpecInvalid.
OtimesResult otimesWithPoints(const ChainFamilySpec& spec);
FiniteAlgebra otimes(const ChainFamilySpec& spec);

/// S_3 (+) k-chain; labels -1, 0, then the new elements downward from c, 1.
FiniteAlgebra oplus(int k);

/// R(D) for a Dunn monoid D. Elements of D keep their indices, a' is n + a,
/// the new bottom is 2n and the new top is 2n + 1. Throws NotADunnMonoid.
FiniteAlgebra reflection(const FiniteAlgebra& d);

struct RigorousExtension {
    FiniteAlgebra algebra;
    ElementMap fromA;            // A -> S[A]
    std::vector<Elem> fromS;     // S -> S[A], -1 at e of S
};

/// S[A]; carrier order: S below e, then A, then S above e.
/// Throws NotOddSugihara, NotDeMorgan.
RigorousExtension rigorousExtensionWithMaps(const FiniteAlgebra& s, const FiniteAlgebra& a);
FiniteAlgebra rigorousExtension(const FiniteAlgebra& s, const FiniteAlgebra& a);

/// A_p: the chain 0 < 1 < 2 < ... < 2^(p+1) of powers of two with zero,
/// truncated multiplication, e = 1, f = 2^p. Index 0 is 0, index k+1 is 2^k.
FiniteAlgebra apFamily(int p);
/// Involution-free reduct of A_p.
FiniteAlgebra apPlus(int p);
/// Index of 2^k in A_p or A_p+.
inline Elem apIndexOfPower(int k) { return k + 1; }

/// "2", "2+", "C4", "D4", "RS3". Throws BadInput for other keys.
FiniteAlgebra namedAlgebra(const std::string& key);
std::vector<std::string> namedAlgebraKeys();

/// Golden corpus keyed as in the CLI: 2, 2+, C4, D4, S2..S7, S3o2, S3o3,
/// A2, A3, A5, A2+, A3+, A4+, R(2+), S3[C4], RS3.
const std::vector<std::pair<std::string, FiniteAlgebra>>& goldenCorpus();
/// Throws BadInput for unknown keys.
const FiniteAlgebra& corpusAlgebra(const std::string& key);

/// Trivial algebra, with or without involution.
FiniteAlgebra trivialAlgebra(bool involutive);

/// Checks the odd Sugihara irreducibility condition on a chain by table:
/// no non-constant basic operation returns e unless an argument is e.
bool oddIrreducibilityHolds(const FiniteAlgebra& s);

} // namespace dmm
