#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

bool sameSignature(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Preservation of *, ->, /\, \/, e, and ~ when both algebras have it.
bool isHomomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h);

struct Subalgebra {
    FiniteAlgebra algebra;
    ElementMap embedding; // into the ambient algebra
};

/// Sg(X) as an algebra with its inclusion.
Subalgebra subalgebraGenerated(const FiniteAlgebra& a, const std::vector<Elem>& gens);

/// Every homomorphism A -> B, sorted lexicographically by map.
/// Kernels are taken from the deductive filters of A, then quotients are
/// embedded into B. Throws SignatureMismatch.
std::vector<ElementMap> allHomomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Injective homomorphisms A -> B in lexicographic order.
std::vector<ElementMap> allEmbeddings(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct HomCharacterization {
    bool satisfied = false;
    int failedCondition = 0; // 1..4, 0 when satisfied
    std::string detail;
    std::vector<Elem> kernelOfE; // h^-1{e}
};

/// Conditions (1)-(4) of the homomorphism characterization for totally
/// ordered idempotent RLs, evaluated on RL reducts. Throws WrongClass.
HomCharacterization checkHomCharacterization(const ElementMap& h, const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Subalgebras of generators, then their quotients, up to isomorphism;
/// sorted by size and canonical code. Throws SignatureMismatch.
std::vector<FiniteAlgebra> hsUpToIso(const std::vector<FiniteAlgebra>& gens);
std::vector<FiniteAlgebra> siMembers(const std::vector<FiniteAlgebra>& gens);

/// All subuniverses of A, ascending by size then lexicographically.
std::vector<std::vector<Elem>> allSubuniverses(const FiniteAlgebra& a);

struct EpicWitness {
    FiniteAlgebra target;
    ElementMap g;
    ElementMap h;
    Elem disagreement;
};

struct EpicVerdict {
    bool epic = true;
    std::optional<EpicWitness> witness;
};

/// Decides whether B is epic in A relative to V(gens), by testing pairs of
/// homomorphisms into the SI members of HS(gens). Membership of A in V(gens)
/// is the caller's responsibility. Throws NotASubuniverse.
EpicVerdict isEpic(const FiniteAlgebra& a, const std::vector<Elem>& b, const std::vector<FiniteAlgebra>& gens);

struct SeparatingPair {
    FiniteAlgebra target;
    ElementMap g;
    ElementMap h;
    Elem requested;           // the element asked for
    Elem used;                // after the optional a -> a* replacement
    bool replacedByStar = false;
    std::string method;       // "quotient", "fresh-element", "gsm-quotient"
    std::vector<Elem> filter; // F, empty for fresh-element
};

/// Separating pair for a totally ordered idempotent RL, element a outside B.
/// Involutive inputs are handled through their RL reducts.
/// Throws ElementInB, WrongClass, NotASubuniverse.
SeparatingPair separatingPairIdem(const FiniteAlgebra& a, const std::vector<Elem>& b, Elem element);

/// Variant for totally ordered generalized Sugihara monoids.
SeparatingPair separatingPairGsm(const FiniteAlgebra& a, const std::vector<Elem>& b, Elem element);

struct ApsReport {
    Elem a = 0;
    int n = 0;
    Elem power = 0;      // a^n
    Elem nextPower = 0;  // a^(n+1)
    Elem residual = 0;   // a^n -> a^(n+1)
    bool hypothesis = false; // a = a^n -> a^(n+1)
    std::vector<Elem> universe; // Sg{a^(n+1)}
    bool proper = false;
    bool epic = false;
    bool passed = false;
};

ApsReport apsCheck(const FiniteAlgebra& a, Elem element, int n);

struct RigorousHom {
    FiniteAlgebra source; // S[A]
    FiniteAlgebra target; // S[B]
    ElementMap map;
};

/// Extends h: A -> B to S[A] -> S[B], fixing S \ {e}.
RigorousHom extendToRigorous(const FiniteAlgebra& s, const FiniteAlgebra& a, const FiniteAlgebra& b,
                             const ElementMap& h);

} // namespace dmm
