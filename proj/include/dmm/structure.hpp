#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"
#include "dmm/classify.hpp"
#include "dmm/morphism.hpp"
#include "dmm/term.hpp"

namespace dmm {

/// A** = {a** : a in A} of a totally ordered idempotent RL (RL reduct).
/// Checked to be an odd Sugihara chain under ~x := x*. Throws WrongClass.
Subalgebra doubleStarSubalgebra(const FiniteAlgebra& a);

struct OtimesDecomposition {
    FiniteAlgebra base;                    // A** as an RL
    ElementMap baseEmbedding;              // base -> A
    std::vector<std::vector<Elem>> blocks; // per base element, ascending
    std::vector<int> sizes;
    FiniteAlgebra reassembled;             // base (x) blocks
    ElementMap iso;                        // reassembled -> A
};

/// A = A** (x) {A_c}; the round-trip isomorphism is verified. Throws WrongClass.
OtimesDecomposition decomposeOtimes(const FiniteAlgebra& a);

struct GsmVerdict {
    bool value = false;
    bool equational = false;
    std::optional<bool> blockTest; // chains only
    std::vector<Elem> witness;     // x violating (x\/e)** = x\/e
};

/// Semilinear idempotent RLs only; equational and block tests must agree.
/// Throws WrongClass.
GsmVerdict isGsm(const FiniteAlgebra& a);

struct DmmDecomposition {
    FiniteAlgebra core;        // [~f^2, f^2]
    ElementMap coreEmbedding;  // core -> A
    FiniteAlgebra oddFactor;   // A/[~f^2)
    ElementMap quotientMap;    // A -> oddFactor
    std::vector<Elem> eClass;
    FiniteAlgebra reassembled; // oddFactor[core]
    ElementMap iso;            // A -> reassembled
};

/// For totally ordered non-idempotent De Morgan monoids.
/// Throws IsIdempotent, WrongClass.
DmmDecomposition decomposeDmm(const FiniteAlgebra& a);

struct ReflectionRecognition {
    bool recognized = false;
    std::vector<Elem> carrier; // {a : a != ~f^2, a^2 != f^2}
    std::optional<FiniteAlgebra> d;
    std::optional<ElementMap> iso; // R(D) -> A
    std::string reason;
};

ReflectionRecognition reflectionRecognize(const FiniteAlgebra& a);

struct NegGenReport {
    std::string kind; // "dunn" or "demorgan"
    bool negativelyGenerated = false;
    std::vector<Elem> missing; // outside Sg(A-)
    bool equational = false;
    std::string equationKey;
    std::optional<Assignment> counterexample;
    bool structural = false;
    std::string structuralNote;
    bool agree = false;
};

/// Semilinear Dunn or De Morgan monoids. Every side is computed before
/// comparison. Throws WrongClass.
NegGenReport negGenEquivalenceSuite(const FiniteAlgebra& a);

struct BoundReport {
    std::string rule; // "sugihara-odd", "sugihara", "idempotent", "demorgan-neg-gen", "none"
    int generators = 0;
    std::optional<int> bound;
    int size = 0;
    std::optional<int> slack;
    bool holds = true;
};

/// Smallest generating set, searched by size and then lexicographically.
std::vector<Elem> minimalGeneratingSet(const FiniteAlgebra& a);

/// Throws WrongClass (not a chain), NotGenerating.
BoundReport boundCheck(const FiniteAlgebra& a, const std::vector<Elem>& generators);

struct CompactnessReport {
    bool topAbsorbs = false;    // top*a = top for a != bot
    bool residToBottom = false; // a->bot = bot for a != bot
    bool topResid = false;      // top->b = bot for b != top
    bool agree = false;
    bool boundedFsiDmm = false;
    bool consistent = false;    // bounded FSI De Morgan monoids are compact
};

/// Throws NoInvolution.
CompactnessReport rigorousCompactnessSuite(const FiniteAlgebra& a);

struct FormulaMismatch {
    std::string op; // "fusion" or "residual"
    Elem x;
    Elem y;
    Elem table;
    Elem formula;
};

/// Compares fusion and residual of a totally ordered idempotent RL with the
/// |x| / x* display. Throws WrongClass.
std::vector<FormulaMismatch> structureFormulaMismatches(const FiniteAlgebra& a);

} // namespace dmm
