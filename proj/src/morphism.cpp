#include "dmm/morphism.hpp"

#include <algorithm>
#include <map>

#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/filters.hpp"
#include "dmm/isomorphism.hpp"

namespace dmm {

bool sameSignature(const FiniteAlgebra& a, const FiniteAlgebra& b) { return a.hasInvolution() == b.hasInvolution(); }

bool isHomomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h) {
    if (static_cast<int>(h.size()) != a.size()) return false;
    for (Elem y : h)
        if (y < 0 || y >= b.size()) return false;
    if (h[a.e()] != b.e()) return false;
    const bool withNeg = a.hasInvolution() && b.hasInvolution();
    for (Elem x = 0; x < a.size(); ++x) {
        if (withNeg && h[a.neg(x)] != b.neg(h[x])) return false;
        for (Elem y = 0; y < a.size(); ++y) {
            if (h[a.fuse(x, y)] != b.fuse(h[x], h[y])) return false;
            if (h[a.resid(x, y)] != b.resid(h[x], h[y])) return false;
            if (h[a.meet(x, y)] != b.meet(h[x], h[y])) return false;
            if (h[a.join(x, y)] != b.join(h[x], h[y])) return false;
        }
    }
    return true;
}

Subalgebra subalgebraGenerated(const FiniteAlgebra& a, const std::vector<Elem>& gens) {
    const std::vector<Elem> universe = generatedSubuniverse(a, gens);
    std::optional<std::string> name;
    if (a.name()) name = "Sg(" + *a.name() + ")";
    return {restrictTo(a, universe, name), ElementMap(universe.begin(), universe.end())};
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
        : a_(a), b_(b), map_(a.size(), -1), used_(b.size(), 0) {}

    std::vector<ElementMap> run() {
        if (a_.size() <= b_.size()) extend(0);
        return found_;
    }

private:
    bool consistent(Elem x) const {
        const Elem hx = map_[x];
        auto check = [&](Elem src, Elem img) { return map_[src] < 0 || map_[src] == img; };
        if (a_.hasInvolution() && b_.hasInvolution()) {
            if (!check(a_.neg(x), b_.neg(hx))) return false;
            // Also the converse: some assigned y with ~y = x.
            const Elem nx = a_.neg(x);
            if (map_[nx] >= 0 && b_.neg(map_[nx]) != hx) return false;
        }
        for (Elem y = 0; y < a_.size(); ++y) {
            const Elem hy = map_[y];
            if (hy < 0) continue;
            if (!check(a_.fuse(x, y), b_.fuse(hx, hy))) return false;
            if (!check(a_.resid(x, y), b_.resid(hx, hy))) return false;
            if (!check(a_.resid(y, x), b_.resid(hy, hx))) return false;
            if (!check(a_.meet(x, y), b_.meet(hx, hy))) return false;
            if (!check(a_.join(x, y), b_.join(hx, hy))) return false;
        }
        // Values already fixed that are produced by x with an assigned y.
        for (Elem y = 0; y < a_.size(); ++y) {
            if (map_[y] < 0) continue;
            for (Elem z = 0; z < a_.size(); ++z) {
                if (map_[z] < 0) continue;
                if (a_.fuse(y, z) == x && b_.fuse(map_[y], map_[z]) != hx) return false;
                if (a_.resid(y, z) == x && b_.resid(map_[y], map_[z]) != hx) return false;
            }
        }
        return true;
    }

    void extend(Elem x) {
        if (x == a_.size()) {
            if (isHomomorphism(a_, b_, map_)) found_.push_back(map_);
            return;
        }
        for (Elem y = 0; y < b_.size(); ++y) {
            if (used_[y]) continue;
            if (x == a_.e() && y != b_.e()) continue;
            map_[x] = y;
            used_[y] = 1;
            if (consistent(x)) extend(x + 1);
            used_[y] = 0;
            map_[x] = -1;
        }
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    ElementMap map_;
    std::vector<char> used_;
    std::vector<ElementMap> found_;
};

} // namespace

std::vector<ElementMap> allEmbeddings(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!sameSignature(a, b)) throw Error(ErrorKind::SignatureMismatch, "both algebras need the same signature");
    return EmbeddingSearch(a, b).run();
}

std::vector<ElementMap> allHomomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!sameSignature(a, b)) throw Error(ErrorKind::SignatureMismatch, "both algebras need the same signature");
    std::vector<ElementMap> out;
    for (const Filter& g : deductiveFilters(a)) {
        const Quotient q = quotient(a, g);
        for (const ElementMap& emb : allEmbeddings(q.algebra, b)) {
            ElementMap h(a.size());
            for (Elem x = 0; x < a.size(); ++x) h[x] = emb[q.map[x]];
            out.push_back(std::move(h));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<Elem> doubleStars(const FiniteAlgebra& a) {
    std::vector<Elem> out;
    for (Elem x = 0; x < a.size(); ++x) out.push_back(a.star(a.star(x)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains(const std::vector<Elem>& xs, Elem x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

// Strictly increasing on the given elements (chains only).
bool orderEmbeds(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h, const std::vector<Elem>& xs,
                 std::string& detail) {
    for (Elem x : xs)
        for (Elem y : xs)
            if (a.lt(x, y) && !b.lt(h[x], h[y])) {
                detail = "not an order embedding at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
                return false;
            }
    return true;
}

} // namespace

HomCharacterization checkHomCharacterization(const ElementMap& h, const FiniteAlgebra& a0, const FiniteAlgebra& b0) {
    const FiniteAlgebra a = rlReduct(a0);
    const FiniteAlgebra b = rlReduct(b0);
    if (!isIdempotentChain(a) || !isIdempotentChain(b))
        throw Error(ErrorKind::WrongClass, "both algebras must be totally ordered and idempotent");
    if (static_cast<int>(h.size()) != a.size())
        throw Error(ErrorKind::BadInput, "map must have one entry per source element");
    for (Elem y : h)
        if (y < 0 || y >= b.size()) throw Error(ErrorKind::BadInput, "map value out of range");

    HomCharacterization r;
    auto fail = [&](int cond, std::string detail) {
        r.satisfied = false;
        r.failedCondition = cond;
        r.detail = std::move(detail);
        return r;
    };
    std::vector<Elem>& I = r.kernelOfE;
    for (Elem x = 0; x < a.size(); ++x)
        if (h[x] == b.e()) I.push_back(x);

    // (1)
    if (!contains(I, a.e())) return fail(1, "e is not sent to e");
    for (Elem x : I)
        for (Elem z : I)
            for (Elem y = 0; y < a.size(); ++y)
                if (a.le(x, y) && a.le(y, z) && !contains(I, y))
                    return fail(1, "h^-1{e} is not an interval");
    for (Elem x : I)
        if (!contains(I, a.star(x))) return fail(1, "h^-1{e} is not closed under *");

    // (2)
    std::vector<Elem> iStar;
    for (Elem x = 0; x < a.size(); ++x)
        if (!contains(I, x) && contains(I, a.star(x))) iStar.push_back(x);
    for (Elem x : iStar)
        if (h[x] == b.e() || b.star(b.star(h[x])) != b.e()) return fail(2, "I_* not sent into B_e minus e");
    if (!orderEmbeds(a, b, h, iStar, r.detail)) return fail(2, r.detail);

    // (3)
    std::vector<Elem> outer;
    for (Elem x : doubleStars(a))
        if (!contains(I, x)) outer.push_back(x);
    for (Elem x : outer) {
        if (h[x] == b.e() || b.star(b.star(h[x])) != h[x]) return fail(3, "A** minus I not sent into B** minus e");
        if (h[a.star(x)] != b.star(h[x])) return fail(3, "* not preserved on A** minus I");
    }
    if (!orderEmbeds(a, b, h, outer, r.detail)) return fail(3, r.detail);

    // (4)
    for (Elem c : outer) {
        std::vector<Elem> block;
        for (Elem x = 0; x < a.size(); ++x)
            if (a.star(a.star(x)) == c) block.push_back(x);
        for (Elem x : block)
            if (b.star(b.star(h[x])) != h[c]) return fail(4, "A_a not sent into B_h(a)");
        if (!orderEmbeds(a, b, h, block, r.detail)) return fail(4, r.detail);
    }
    r.satisfied = true;
    r.detail.clear();
    return r;
}

std::vector<std::vector<Elem>> allSubuniverses(const FiniteAlgebra& a) {
    std::vector<std::vector<Elem>> found{generatedSubuniverse(a, {})};
    for (std::size_t i = 0; i < found.size(); ++i) {
        const std::vector<Elem> base = found[i];
        for (Elem x = 0; x < a.size(); ++x) {
            if (contains(base, x)) continue;
            std::vector<Elem> gens = base;
            gens.push_back(x);
            std::vector<Elem> s = generatedSubuniverse(a, gens);
            if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(std::move(s));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return found;
}

std::vector<FiniteAlgebra> hsUpToIso(const std::vector<FiniteAlgebra>& gens) {
    if (gens.empty()) throw Error(ErrorKind::BadInput, "at least one generator is required");
    for (const FiniteAlgebra& g : gens)
        if (!sameSignature(g, gens.front()))
            throw Error(ErrorKind::SignatureMismatch, "generators must share a signature");
    std::map<std::vector<int>, FiniteAlgebra> seen;
    for (const FiniteAlgebra& g : gens)
        for (const std::vector<Elem>& u : allSubuniverses(g)) {
            const FiniteAlgebra sub = restrictTo(g, u);
            for (const Filter& f : deductiveFilters(sub)) {
                FiniteAlgebra q = quotient(sub, f).algebra;
                std::vector<int> code = canonicalCode(q);
                if (!seen.count(code)) seen.emplace(std::move(code), std::move(q));
            }
        }
    std::vector<std::pair<std::vector<int>, FiniteAlgebra>> items(seen.begin(), seen.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
        return x.first < y.first;
    });
    std::vector<FiniteAlgebra> out;
    for (auto& [code, alg] : items) out.push_back(std::move(alg));
    return out;
}

std::vector<FiniteAlgebra> siMembers(const std::vector<FiniteAlgebra>& gens) {
    std::vector<FiniteAlgebra> out;
    for (FiniteAlgebra& m : hsUpToIso(gens))
        if (isSubdirectlyIrreducible(m)) out.push_back(std::move(m));
    return out;
}

EpicVerdict isEpic(const FiniteAlgebra& a, const std::vector<Elem>& b, const std::vector<FiniteAlgebra>& gens) {
    std::vector<Elem> sub = b;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (!isSubuniverse(a, sub)) throw Error(ErrorKind::NotASubuniverse, "B is not a subuniverse of A");
    EpicVerdict verdict;
    for (const FiniteAlgebra& c : siMembers(gens)) {
        const std::vector<ElementMap> homs = allHomomorphisms(a, c);
        for (std::size_t i = 0; i < homs.size(); ++i)
            for (std::size_t j = i + 1; j < homs.size(); ++j) {
                bool agree = true;
                for (Elem x : sub) agree = agree && homs[i][x] == homs[j][x];
                if (!agree) continue;
                Elem diff = 0;
                while (homs[i][diff] == homs[j][diff]) ++diff;
                verdict.epic = false;
                verdict.witness = EpicWitness{c, homs[i], homs[j], diff};
                return verdict;
            }
    }
    return verdict;
}

namespace {

std::vector<Elem> normalizedSubset(const FiniteAlgebra& full, const std::vector<Elem>& b) {
    std::vector<Elem> sub = b;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (!isSubuniverse(full, sub)) throw Error(ErrorKind::NotASubuniverse, "B is not a subuniverse of A");
    return sub;
}

// Case a in A**: collapse [a, a*] together with [a, a*]_* to e over A/F.
SeparatingPair quotientCase(const FiniteAlgebra& a, Elem requested) {
    SeparatingPair out{a, {}, {}, requested, requested, false, {}, {}};
    Elem u = requested;
    if (a.le(a.e(), u)) {
        u = a.star(u);
        out.replacedByStar = true;
    }
    out.used = u;
    out.method = "quotient";
    Filter f;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.lt(u, x)) f.push_back(x);
    if (!isDeductiveFilter(a, f)) throw Error(ErrorKind::InternalInvariantViolation, "{b : b > a} is not a filter");
    Quotient q = quotient(a, f);
    std::vector<Elem> interval;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.le(u, x) && a.le(x, a.star(u))) interval.push_back(x);
    std::vector<char> inI(a.size(), 0);
    for (Elem x = 0; x < a.size(); ++x)
        if (contains(interval, x) || contains(interval, a.star(x))) inI[x] = 1;
    out.g = q.map;
    out.h = q.map;
    for (Elem x = 0; x < a.size(); ++x)
        if (inI[x]) out.h[x] = q.algebra.e();
    out.filter = f;
    out.target = std::move(q.algebra);
    return out;
}

// Case a outside A**: insert a fresh immediate predecessor of a in its block.
SeparatingPair freshElementCase(const FiniteAlgebra& a, Elem requested) {
    const std::vector<Elem> base = doubleStars(a);
    const FiniteAlgebra s = restrictTo(a, base);
    auto baseIndex = [&](Elem x) {
        return static_cast<Elem>(std::find(base.begin(), base.end(), a.star(a.star(x))) - base.begin());
    };
    auto depthOf = [&](Elem x) {
        int d = 0;
        for (Elem y = 0; y < a.size(); ++y)
            if (a.star(a.star(y)) == a.star(a.star(x)) && a.lt(x, y)) ++d;
        return d;
    };
    std::vector<int> sizes(s.size(), 0);
    for (Elem x = 0; x < a.size(); ++x) ++sizes[baseIndex(x)];
    const Elem blockOfA = baseIndex(requested);
    const int depthOfA = depthOf(requested);
    ++sizes[blockOfA];
    OtimesResult c = otimesWithPoints({s, sizes});
    auto indexOf = [&](Elem blk, int depth) {
        for (int i = 0; i < c.algebra.size(); ++i)
            if (c.points[i].base == blk && c.points[i].depth == depth) return i;
        throw Error(ErrorKind::InternalInvariantViolation, "missing point");
    };

    SeparatingPair out{a, ElementMap(a.size()), {}, requested, requested, false, {}, {}};
    out.method = "fresh-element";
    for (Elem x = 0; x < a.size(); ++x) {
        const Elem blk = baseIndex(x);
        int d = depthOf(x);
        if (blk == blockOfA && d > depthOfA) ++d;
        out.g[x] = indexOf(blk, d);
    }
    out.h = out.g;
    const Elem fresh = indexOf(blockOfA, depthOfA + 1);
    out.h[requested] = fresh;

    std::vector<std::string> labels(c.algebra.size());
    for (Elem x = 0; x < a.size(); ++x) labels[out.g[x]] = a.label(x);
    labels[fresh] = "new";
    out.target = c.algebra.withLabels(std::move(labels));
    return out;
}

void verifyPair(const FiniteAlgebra& a, const std::vector<Elem>& b, const SeparatingPair& p) {
    if (!isHomomorphism(a, p.target, p.g) || !isHomomorphism(a, p.target, p.h))
        throw Error(ErrorKind::InternalInvariantViolation, "separating maps are not homomorphisms");
    for (Elem x : b)
        if (p.g[x] != p.h[x]) throw Error(ErrorKind::InternalInvariantViolation, "separating maps disagree on B");
    if (p.g[p.requested] == p.h[p.requested])
        throw Error(ErrorKind::InternalInvariantViolation, "separating maps agree at the element");
}

} // namespace

SeparatingPair separatingPairIdem(const FiniteAlgebra& full, const std::vector<Elem>& b, Elem element) {
    const FiniteAlgebra a = rlReduct(full);
    if (!isIdempotentChain(a)) throw Error(ErrorKind::WrongClass, "A must be a totally ordered idempotent RL");
    const std::vector<Elem> sub = normalizedSubset(full, b);
    if (element < 0 || element >= a.size()) throw Error(ErrorKind::BadInput, "element out of range");
    if (contains(sub, element)) throw Error(ErrorKind::ElementInB, "element " + a.label(element) + " lies in B");
    SeparatingPair p = a.star(a.star(element)) == element ? quotientCase(a, element) : freshElementCase(a, element);
    verifyPair(a, sub, p);
    return p;
}

SeparatingPair separatingPairGsm(const FiniteAlgebra& full, const std::vector<Elem>& b, Elem element) {
    const FiniteAlgebra a = rlReduct(full);
    if (!isIdempotentChain(a) || !classify(a).gsm)
        throw Error(ErrorKind::WrongClass, "A must be a totally ordered generalized Sugihara monoid");
    const std::vector<Elem> sub = normalizedSubset(full, b);
    if (element < 0 || element >= a.size()) throw Error(ErrorKind::BadInput, "element out of range");
    if (contains(sub, element)) throw Error(ErrorKind::ElementInB, "element " + a.label(element) + " lies in B");
    SeparatingPair p = a.star(a.star(element)) == element ? quotientCase(a, element) : [&] {
        // Here element < e, since elements above e are fixed by **.
        SeparatingPair out{a, {}, {}, element, element, false, {}, {}};
        out.method = "gsm-quotient";
        Filter f;
        for (Elem x = 0; x < a.size(); ++x)
            if (a.lt(element, x)) f.push_back(x);
        Quotient q = quotient(a, f);
        out.g = q.map;
        out.h = q.map;
        out.h[element] = q.algebra.e();
        out.filter = f;
        out.target = std::move(q.algebra);
        return out;
    }();
    verifyPair(a, sub, p);
    return p;
}

ApsReport apsCheck(const FiniteAlgebra& a, Elem element, int n) {
    if (element < 0 || element >= a.size()) throw Error(ErrorKind::BadInput, "element out of range");
    if (n < 0) throw Error(ErrorKind::BadInput, "n must be non-negative");
    ApsReport r;
    r.a = element;
    r.n = n;
    r.power = a.power(element, n);
    r.nextPower = a.power(element, n + 1);
    r.residual = a.resid(r.power, r.nextPower);
    r.hypothesis = r.residual == element;
    r.universe = generatedSubuniverse(a, {r.nextPower});
    r.proper = static_cast<int>(r.universe.size()) < a.size();
    r.epic = isEpic(a, r.universe, {a}).epic;
    r.passed = r.hypothesis && r.proper && r.epic;
    return r;
}

RigorousHom extendToRigorous(const FiniteAlgebra& s, const FiniteAlgebra& a, const FiniteAlgebra& b,
                             const ElementMap& h) {
    if (!isHomomorphism(a, b, h)) throw Error(ErrorKind::BadInput, "h is not a homomorphism");
    RigorousExtension sa = rigorousExtensionWithMaps(s, a);
    RigorousExtension sb = rigorousExtensionWithMaps(s, b);
    ElementMap map(sa.algebra.size(), -1);
    for (Elem x = 0; x < a.size(); ++x) map[sa.fromA[x]] = sb.fromA[h[x]];
    for (Elem t = 0; t < s.size(); ++t)
        if (sa.fromS[t] >= 0) map[sa.fromS[t]] = sb.fromS[t];
    if (!isHomomorphism(sa.algebra, sb.algebra, map))
        throw Error(ErrorKind::InternalInvariantViolation, "extended map is not a homomorphism");
    return {std::move(sa.algebra), std::move(sb.algebra), std::move(map)};
}

} // namespace dmm
