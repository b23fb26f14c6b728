#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmm/algebra.hpp"

namespace dmm {

struct Term {
    enum class Kind { Var, E, Fuse, Resid, Meet, Join, Neg };

    Kind kind = Kind::E;
    std::string name;       // Var only
    std::vector<Term> args; // 0, 1 or 2 children

    bool operator==(const Term& other) const = default;

    static Term var(std::string name);
    static Term e();
    static Term f();
    static Term fuse(Term x, Term y);
    static Term resid(Term x, Term y);
    static Term meet(Term x, Term y);
    static Term join(Term x, Term y);
    static Term neg(Term x);
    static Term star(Term x);
    static Term abs(Term x);
    static Term biimp(Term x, Term y);
    /// x^n by left-nested fusion, x^0 = e.
    static Term power(Term x, int n);
};

using Assignment = std::map<std::string, Elem>;

struct ParseOptions {
    /// Largest exponent accepted in x^n; unlimited when absent.
    std::optional<int> maxExponent;
};

/// Grammar (loosest first): ->, \/, /\, *, postfix ^* and ^n, prefix ~.
/// Fusion, meet and join associate left, -> associates right. Atoms are
/// variables [a-z][a-z0-9]*, e, f, (t) and |t|. Throws SyntaxError.
Term parseTerm(const std::string& text, const ParseOptions& opts = {});

/// Fully parenthesized; parseTerm(printTerm(t)) == t.
std::string printTerm(const Term& t);

/// Sorted, duplicate-free variable names.
std::vector<std::string> variables(const Term& t);
bool usesNegation(const Term& t);

/// Throws UnboundVariable, NoInvolution.
Elem eval(const FiniteAlgebra& a, const Term& t, const Assignment& asg);

struct Equation {
    Term lhs;
    Term rhs;
};

/// "lhs = rhs"; exactly one '='.
Equation parseEquation(const std::string& text, const ParseOptions& opts = {});

struct EquationVerdict {
    bool holds = true;
    std::vector<std::string> vars;
    Assignment counterexample; // empty when the equation holds
    Elem lhsValue = -1;
    Elem rhsValue = -1;
};

/// Exhaustive check; variables are enumerated in name order with the first
/// one most significant, so the reported counterexample is the
/// lexicographically first. Throws NoInvolution up front when either side
/// uses ~ and the algebra has none.
EquationVerdict checkEquation(const FiniteAlgebra& a, const Term& lhs, const Term& rhs);
EquationVerdict checkEquation(const FiniteAlgebra& a, const Equation& eq);

namespace terms {
Term dPrime(const Term& x);
Term sigma(const Term& x);
Term d(const Term& x);
Term sigmaPrime(const Term& x);
} // namespace terms

/// sigma, sigma-sm, negcone, gsm, semilinear. Throws BadInput for other keys.
Equation namedEquation(const std::string& key);
std::vector<std::string> namedEquationKeys();

} // namespace dmm
