#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/error.hpp"

namespace dmm {

/// Element of a finite carrier, an index in 0..size-1.
using Elem = int;

/// A total map between carriers, indexed by source element.
using ElementMap = std::vector<Elem>;

/// Input tables of a finite commutative [involutive] residuated lattice.
/// The residual, meet and join are never part of the input; they are derived
/// (and thereby checked) by FiniteAlgebra::validate.
struct RawTables {
    std::optional<std::string> name;
    int size = 0;
    std::vector<std::vector<int>> le;
    std::vector<std::vector<Elem>> fusion;
    Elem e = 0;
    std::optional<std::vector<Elem>> neg;

    bool operator==(const RawTables& other) const = default;
};

/// A validated finite commutative residuated lattice, optionally with an
/// involution. Immutable after construction.
class FiniteAlgebra {
public:
    /// Checks every axiom and derives meet, join and residual.
    /// Throws Error (NotALattice, NotAMonoid, NotResiduated, BadInvolution,
    /// BadInput) with the first violating tuple in the message.
    static FiniteAlgebra validate(RawTables raw, std::vector<std::string> labels = {});

    int size() const { return n_; }
    Elem e() const { return raw_.e; }
    bool hasInvolution() const { return raw_.neg.has_value(); }

    bool le(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
    bool lt(Elem a, Elem b) const { return a != b && le(a, b); }
    Elem fuse(Elem a, Elem b) const { return fusion_[idx(a, b)]; }
    Elem resid(Elem a, Elem b) const { return residual_[idx(a, b)]; }
    Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
    Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
    Elem neg(Elem a) const;

    /// x* = x -> e
    Elem star(Elem a) const { return resid(a, e()); }
    /// |x| = x -> x
    Elem abs(Elem a) const { return resid(a, a); }
    /// a^k with a^0 = e
    Elem power(Elem a, int k) const;

    /// f = ~e; requires an involution.
    Elem f() const { return neg(e()); }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }

    const std::optional<std::string>& name() const { return raw_.name; }
    const RawTables& raw() const { return raw_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool hasLabels() const { return !labels_.empty(); }
    /// Display label of an element; the decimal index when unlabeled.
    std::string label(Elem a) const;
    std::optional<Elem> findLabel(const std::string& text) const;

    FiniteAlgebra withName(std::string name) const;
    FiniteAlgebra withLabels(std::vector<std::string> labels) const;

    /// Table equality; names and labels are ignored.
    bool sameTables(const FiniteAlgebra& other) const;

private:
    FiniteAlgebra() = default;
    std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }

    RawTables raw_;
    std::vector<std::string> labels_;
    int n_ = 0;
    std::vector<char> leq_;
    std::vector<Elem> fusion_;
    std::vector<Elem> residual_;
    std::vector<Elem> meet_;
    std::vector<Elem> join_;
    Elem bottom_ = 0;
    Elem top_ = 0;
};

/// Involution-free reduct; the carrier and RL operations are unchanged.
FiniteAlgebra rlReduct(const FiniteAlgebra& a);

/// The set {a : a <= e}, ascending by index.
std::vector<Elem> negativeCone(const FiniteAlgebra& a);

/// Restricts the algebra to a subset closed under every basic operation.
/// The subset is taken in ascending index order; labels are carried over.
FiniteAlgebra restrictTo(const FiniteAlgebra& a, const std::vector<Elem>& universe,
                         std::optional<std::string> name = std::nullopt);

/// True when the subset contains e and is closed under every basic operation.
bool isSubuniverse(const FiniteAlgebra& a, const std::vector<Elem>& subset);

/// Least subuniverse containing the given elements and e, ascending.
std::vector<Elem> generatedSubuniverse(const FiniteAlgebra& a, const std::vector<Elem>& gens);

struct LawViolation {
    std::string law;
    std::vector<Elem> assignment;
};

/// Exhaustively checks the standard residuated-lattice identities and
/// quasi-identities that hold in every algebra of the relevant class
/// (all RLs; square-increasing RLs; IRLs; idempotent RLs). Returns the first
/// violation of each law, empty when all hold.
std::vector<LawViolation> derivedLawViolations(const FiniteAlgebra& a);

} // namespace dmm
