#include "dmm/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace dmm {

std::string_view kindName(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAMonoid: return "NotAMonoid";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::BadInvolution: return "BadInvolution";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotASubuniverse: return "NotASubuniverse";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::ElementInB: return "ElementInB";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::NotADunnMonoid: return "NotADunnMonoid";
    case ErrorKind::NotOddSugihara: return "NotOddSugihara";
    case ErrorKind::NotDeMorgan: return "NotDeMorgan";
    case ErrorKind::IsIdempotent: return "IsIdempotent";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

namespace {

std::string tuple(std::initializer_list<Elem> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (Elem x : xs) {
        if (!first) os << ", ";
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

void checkShape(const RawTables& raw) {
    const int n = raw.size;
    if (n < 1) throw Error(ErrorKind::BadInput, "size must be at least 1");
    auto inRange = [n](Elem x) { return x >= 0 && x < n; };
    if (static_cast<int>(raw.le.size()) != n || static_cast<int>(raw.fusion.size()) != n)
        throw Error(ErrorKind::BadInput, "tables must have size rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw.le[i].size()) != n || static_cast<int>(raw.fusion[i].size()) != n)
            throw Error(ErrorKind::BadInput, "row " + std::to_string(i) + " has the wrong length");
        for (int j = 0; j < n; ++j) {
            if (raw.le[i][j] != 0 && raw.le[i][j] != 1)
                throw Error(ErrorKind::BadInput, "le entries must be 0 or 1");
            if (!inRange(raw.fusion[i][j]))
                throw Error(ErrorKind::BadInput, "fusion entry out of range at " + tuple({i, j}));
        }
    }
    if (!inRange(raw.e)) throw Error(ErrorKind::BadInput, "e out of range");
    if (raw.neg) {
        if (static_cast<int>(raw.neg->size()) != n)
            throw Error(ErrorKind::BadInput, "neg must have size entries");
        for (Elem x : *raw.neg)
            if (!inRange(x)) throw Error(ErrorKind::BadInput, "neg entry out of range");
    }
}

} // namespace

FiniteAlgebra FiniteAlgebra::validate(RawTables raw, std::vector<std::string> labels) {
    checkShape(raw);
    const int n = raw.size;
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::BadInput, "label count does not match size");

    FiniteAlgebra a;
    a.n_ = n;
    const auto nn = static_cast<std::size_t>(n) * n;
    a.leq_.assign(nn, 0);
    a.fusion_.assign(nn, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a.leq_[a.idx(i, j)] = static_cast<char>(raw.le[i][j]);
            a.fusion_[a.idx(i, j)] = raw.fusion[i][j];
        }

    // Partial order.
    for (int x = 0; x < n; ++x)
        if (!a.le(x, x)) throw Error(ErrorKind::NotALattice, "le is not reflexive at " + tuple({x}));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && a.le(x, y) && a.le(y, x))
                throw Error(ErrorKind::NotALattice, "le is not antisymmetric at " + tuple({x, y}));
            for (int z = 0; z < n; ++z)
                if (a.le(x, y) && a.le(y, z) && !a.le(x, z))
                    throw Error(ErrorKind::NotALattice, "le is not transitive at " + tuple({x, y, z}));
        }

    // Lattice operations.
    a.meet_.assign(nn, -1);
    a.join_.assign(nn, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int m = 0; m < n && a.meet_[a.idx(x, y)] < 0; ++m) {
                if (!a.le(m, x) || !a.le(m, y)) continue;
                bool greatest = true;
                for (int z = 0; z < n && greatest; ++z)
                    if (a.le(z, x) && a.le(z, y) && !a.le(z, m)) greatest = false;
                if (greatest) a.meet_[a.idx(x, y)] = m;
            }
            for (int j = 0; j < n && a.join_[a.idx(x, y)] < 0; ++j) {
                if (!a.le(x, j) || !a.le(y, j)) continue;
                bool least = true;
                for (int z = 0; z < n && least; ++z)
                    if (a.le(x, z) && a.le(y, z) && !a.le(j, z)) least = false;
                if (least) a.join_[a.idx(x, y)] = j;
            }
            if (a.meet_[a.idx(x, y)] < 0)
                throw Error(ErrorKind::NotALattice, "no meet for " + tuple({x, y}));
            if (a.join_[a.idx(x, y)] < 0)
                throw Error(ErrorKind::NotALattice, "no join for " + tuple({x, y}));
        }
    a.bottom_ = 0;
    a.top_ = 0;
    for (int x = 1; x < n; ++x) {
        a.bottom_ = a.meet_[a.idx(a.bottom_, x)];
        a.top_ = a.join_[a.idx(a.top_, x)];
    }

    // Commutative monoid.
    for (int x = 0; x < n; ++x) {
        if (a.fuse(x, raw.e) != x || a.fuse(raw.e, x) != x)
            throw Error(ErrorKind::NotAMonoid, "e is not neutral for " + tuple({x}));
        for (int y = 0; y < n; ++y) {
            if (a.fuse(x, y) != a.fuse(y, x))
                throw Error(ErrorKind::NotAMonoid, "fusion is not commutative at " + tuple({x, y}));
            for (int z = 0; z < n; ++z)
                if (a.fuse(a.fuse(x, y), z) != a.fuse(x, a.fuse(y, z)))
                    throw Error(ErrorKind::NotAMonoid,
                                "fusion is not associative at " + tuple({x, y, z}));
        }
    }

    // Residual as max{z : x*z <= y}, then the full adjunction.
    a.residual_.assign(nn, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int m = 0; m < n; ++m) {
                if (!a.le(a.fuse(x, m), y)) continue;
                bool greatest = true;
                for (int z = 0; z < n && greatest; ++z)
                    if (a.le(a.fuse(x, z), y) && !a.le(z, m)) greatest = false;
                if (greatest) {
                    a.residual_[a.idx(x, y)] = m;
                    break;
                }
            }
            if (a.residual_[a.idx(x, y)] < 0)
                throw Error(ErrorKind::NotResiduated,
                            "{z : x*z <= y} has no maximum for " + tuple({x, y}));
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (a.le(a.fuse(x, y), z) != a.le(y, a.resid(x, z)))
                    throw Error(ErrorKind::NotResiduated,
                                "residuation fails at " + tuple({x, y, z}));

    if (raw.neg) {
        const auto& ng = *raw.neg;
        for (int x = 0; x < n; ++x)
            if (ng[ng[x]] != x)
                throw Error(ErrorKind::BadInvolution, "~~x != x at " + tuple({x}));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a.le(a.fuse(x, y), z) != a.le(a.fuse(ng[z], y), ng[x]))
                        throw Error(ErrorKind::BadInvolution,
                                    "x*y <= z iff ~z*y <= ~x fails at " + tuple({x, y, z}));
    }

    a.raw_ = std::move(raw);
    a.labels_ = std::move(labels);
    return a;
}

Elem FiniteAlgebra::neg(Elem a) const {
    if (!raw_.neg) throw Error(ErrorKind::NoInvolution, "algebra has no involution");
    return (*raw_.neg)[a];
}

Elem FiniteAlgebra::power(Elem a, int k) const {
    Elem r = e();
    for (int i = 0; i < k; ++i) r = fuse(r, a);
    return r;
}

std::string FiniteAlgebra::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

std::optional<Elem> FiniteAlgebra::findLabel(const std::string& text) const {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        if (labels_[i] == text) return i;
    return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::withName(std::string name) const {
    FiniteAlgebra copy = *this;
    copy.raw_.name = std::move(name);
    return copy;
}

FiniteAlgebra FiniteAlgebra::withLabels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw Error(ErrorKind::BadInput, "label count does not match size");
    FiniteAlgebra copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

bool FiniteAlgebra::sameTables(const FiniteAlgebra& other) const {
    return n_ == other.n_ && raw_.le == other.raw_.le && raw_.fusion == other.raw_.fusion &&
           raw_.e == other.raw_.e && raw_.neg == other.raw_.neg;
}

FiniteAlgebra rlReduct(const FiniteAlgebra& a) {
    if (!a.hasInvolution()) return a;
    RawTables raw = a.raw();
    raw.neg.reset();
    if (raw.name) raw.name = *raw.name + "+";
    return FiniteAlgebra::validate(std::move(raw), a.labels());
}

std::vector<Elem> negativeCone(const FiniteAlgebra& a) {
    std::vector<Elem> out;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.le(x, a.e())) out.push_back(x);
    return out;
}

bool isSubuniverse(const FiniteAlgebra& a, const std::vector<Elem>& subset) {
    std::vector<char> in(a.size(), 0);
    for (Elem x : subset) {
        if (x < 0 || x >= a.size()) return false;
        in[x] = 1;
    }
    if (!in[a.e()]) return false;
    for (Elem x : subset) {
        if (a.hasInvolution() && !in[a.neg(x)]) return false;
        for (Elem y : subset)
            if (!in[a.fuse(x, y)] || !in[a.resid(x, y)] || !in[a.meet(x, y)] || !in[a.join(x, y)])
                return false;
    }
    return true;
}

std::vector<Elem> generatedSubuniverse(const FiniteAlgebra& a, const std::vector<Elem>& gens) {
    std::vector<char> in(a.size(), 0);
    std::vector<Elem> members;
    auto add = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    add(a.e());
    for (Elem g : gens) {
        if (g < 0 || g >= a.size()) throw Error(ErrorKind::BadInput, "generator out of range");
        add(g);
    }
    // Each new element is combined with every earlier one exactly once.
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Elem x = members[i];
        if (a.hasInvolution()) add(a.neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            const Elem y = members[j];
            add(a.fuse(x, y));
            add(a.resid(x, y));
            add(a.resid(y, x));
            add(a.meet(x, y));
            add(a.join(x, y));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteAlgebra restrictTo(const FiniteAlgebra& a, const std::vector<Elem>& universe,
                         std::optional<std::string> name) {
    std::vector<Elem> sorted = universe;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!isSubuniverse(a, sorted))
        throw Error(ErrorKind::NotASubuniverse, "subset is not closed under the basic operations");
    std::vector<int> pos(a.size(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) pos[sorted[i]] = i;
    const int m = static_cast<int>(sorted.size());
    RawTables raw;
    raw.name = std::move(name);
    raw.size = m;
    raw.le.assign(m, std::vector<int>(m, 0));
    raw.fusion.assign(m, std::vector<Elem>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            raw.le[i][j] = a.le(sorted[i], sorted[j]) ? 1 : 0;
            raw.fusion[i][j] = pos[a.fuse(sorted[i], sorted[j])];
        }
    raw.e = pos[a.e()];
    if (a.hasInvolution()) {
        std::vector<Elem> ng(m);
        for (int i = 0; i < m; ++i) ng[i] = pos[a.neg(sorted[i])];
        raw.neg = std::move(ng);
    }
    std::vector<std::string> labels;
    if (a.hasLabels())
        for (Elem x : sorted) labels.push_back(a.label(x));
    return FiniteAlgebra::validate(std::move(raw), std::move(labels));
}

namespace {

class LawRecorder {
public:
    explicit LawRecorder(std::vector<LawViolation>& out) : out_(out) {}

    void require(bool holds, const char* law, std::initializer_list<Elem> assignment) {
        if (holds) return;
        for (const auto& v : out_)
            if (v.law == law) return;
        out_.push_back({law, std::vector<Elem>(assignment)});
    }

private:
    std::vector<LawViolation>& out_;
};

} // namespace

std::vector<LawViolation> derivedLawViolations(const FiniteAlgebra& a) {
    std::vector<LawViolation> out;
    LawRecorder rec(out);
    const int n = a.size();
    const Elem e = a.e();
    bool squareIncreasing = true;
    bool idempotent = true;
    for (Elem x = 0; x < n; ++x) {
        squareIncreasing = squareIncreasing && a.le(x, a.fuse(x, x));
        idempotent = idempotent && a.fuse(x, x) == x;
    }
    auto biimp = [&](Elem x, Elem y) { return a.meet(a.resid(x, y), a.resid(y, x)); };

    for (Elem x = 0; x < n; ++x) {
        rec.require(a.le(e, a.resid(x, x)), "e <= x->x", {x});
        rec.require(a.resid(e, x) == x, "e->x = x", {x});
        rec.require(a.le(x, a.star(a.star(x))), "x <= x**", {x});
        rec.require(a.star(a.star(a.star(x))) == a.star(x), "x*** = x*", {x});
        rec.require(a.le(e, a.abs(x)), "e <= |x|", {x});
        if (idempotent) {
            rec.require(a.le(x, a.abs(x)), "x <= |x|", {x});
            rec.require((x == a.abs(x)) == a.le(e, x), "x = |x| iff e <= x", {x});
            rec.require((a.star(x) == a.abs(x)) == a.le(x, e), "x* = |x| iff x <= e", {x});
            rec.require((x == a.star(x)) == (x == e), "x = x* iff x = e", {x});
        }
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = a.resid(x, y);
            rec.require(a.le(a.fuse(x, xy), y), "x*(x->y) <= y", {x, y});
            rec.require(a.le(x, a.resid(xy, y)), "x <= (x->y)->y", {x, y});
            rec.require(a.resid(a.resid(xy, y), y) == xy, "((x->y)->y)->y = x->y", {x, y});
            rec.require(a.le(x, y) == a.le(e, xy), "x <= y iff e <= x->y", {x, y});
            rec.require((x == y) == a.le(e, biimp(x, y)), "x = y iff e <= x<->y", {x, y});
            if (squareIncreasing) {
                rec.require(a.le(a.meet(x, y), a.fuse(x, y)), "x/\\y <= x*y", {x, y});
                if (a.le(x, e) && a.le(y, e))
                    rec.require(a.fuse(x, y) == a.meet(x, y), "x,y <= e implies x*y = x/\\y", {x, y});
            }
            if (a.hasInvolution()) {
                rec.require(a.neg(a.meet(x, y)) == a.join(a.neg(x), a.neg(y)), "~(x/\\y) = ~x\\/~y", {x, y});
                rec.require(a.neg(a.join(x, y)) == a.meet(a.neg(x), a.neg(y)), "~(x\\/y) = ~x/\\~y", {x, y});
                rec.require(xy == a.neg(a.fuse(x, a.neg(y))), "x->y = ~(x*~y)", {x, y});
                rec.require(xy == a.resid(a.neg(y), a.neg(x)), "x->y = ~y->~x", {x, y});
                rec.require(a.fuse(x, y) == a.neg(a.resid(x, a.neg(y))), "x*y = ~(x->~y)", {x, y});
            }
            for (Elem z = 0; z < n; ++z) {
                rec.require(a.le(a.fuse(x, y), z) == a.le(y, a.resid(x, z)), "residuation", {x, y, z});
                const Elem curried = a.resid(a.fuse(x, y), z);
                rec.require(curried == a.resid(y, a.resid(x, z)) && curried == a.resid(x, a.resid(y, z)),
                            "(x*y)->z = y->(x->z) = x->(y->z)", {x, y, z});
                if (a.le(x, y)) {
                    rec.require(a.le(a.fuse(x, z), a.fuse(y, z)), "x <= y implies x*z <= y*z", {x, y, z});
                    rec.require(a.le(a.resid(z, x), a.resid(z, y)), "x <= y implies z->x <= z->y", {x, y, z});
                    rec.require(a.le(a.resid(y, z), a.resid(x, z)), "x <= y implies y->z <= x->z", {x, y, z});
                }
            }
        }
        if (a.hasInvolution()) rec.require(a.neg(x) == a.resid(x, a.f()), "~x = x->f", {x});
    }
    if (a.hasInvolution() && squareIncreasing) {
        const Elem f = a.f();
        const Elem f2 = a.fuse(f, f);
        rec.require(a.fuse(f2, f) == f2, "f^3 = f^2", {});
        const bool c1 = f2 == f;
        const bool c2 = a.le(f, e);
        rec.require(c1 == c2 && c2 == idempotent, "f^2 = f iff f <= e iff idempotent", {});
    }
    return out;
}

} // namespace dmm
