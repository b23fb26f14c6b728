#include "dmm/classify.hpp"

#include <algorithm>

#include "dmm/filters.hpp"

namespace dmm {

namespace {

Flag holds(std::vector<Elem> witness = {}, std::string note = {}) {
    return Flag{true, std::move(witness), std::move(note)};
}

Flag fails(std::vector<Elem> witness, std::string note = {}) {
    return Flag{false, std::move(witness), std::move(note)};
}

Flag both(const Flag& x, const Flag& y, const char* xName, const char* yName) {
    if (!x) return fails(x.witness, std::string("not ") + xName);
    if (!y) return fails(y.witness, std::string("not ") + yName);
    return holds();
}

Flag squareIncreasingFlag(const FiniteAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        if (!a.le(x, a.fuse(x, x))) return fails({x}, "x not <= x*x");
    return holds();
}

Flag idempotentFlag(const FiniteAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        if (a.fuse(x, x) != x) return fails({x}, "x*x != x");
    return holds();
}

Flag distributiveFlag(const FiniteAlgebra& a) {
    const int n = a.size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
                    return fails({x, y, z}, "x/\\(y\\/z) != (x/\\y)\\/(x/\\z)");
    return holds();
}

Flag totallyOrderedFlag(const FiniteAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = x + 1; y < a.size(); ++y)
            if (!a.le(x, y) && !a.le(y, x)) return fails({x, y}, "incomparable");
    return holds();
}

Flag prelinearFlag(const FiniteAlgebra& a) {
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (!a.le(a.e(), a.join(a.resid(x, y), a.resid(y, x))))
                return fails({x, y}, "e not <= (x->y)\\/(y->x)");
    return holds();
}

Flag fsiFlag(const FiniteAlgebra& a) {
    const Elem e = a.e();
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = x; y < a.size(); ++y)
            if (x != e && y != e && a.join(x, y) == e) return fails({x, y}, "e = x\\/y");
    return holds();
}

std::vector<Elem> strictLowerBoundsOfE(const FiniteAlgebra& a) {
    std::vector<Elem> out;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.lt(x, a.e())) out.push_back(x);
    return out;
}

Flag siFlag(const FiniteAlgebra& a, bool squareIncreasing) {
    if (a.size() == 1) return fails({}, "trivial");
    if (squareIncreasing) {
        const std::vector<Elem> below = strictLowerBoundsOfE(a);
        for (Elem c : below) {
            bool largest = true;
            for (Elem x : below) largest = largest && a.le(x, c);
            if (largest) return holds({c}, "largest element below e");
        }
        return fails(below, "no largest element below e");
    }
    const std::vector<Filter> fs = deductiveFilters(a);
    // The monolith exists iff the filters above [e) have a least member.
    Filter meetAll = fs.back();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        Filter next;
        for (Elem x : meetAll)
            if (std::binary_search(fs[i].begin(), fs[i].end(), x)) next.push_back(x);
        meetAll = next;
    }
    if (meetAll != fs.front()) return holds(meetAll, "least nontrivial filter");
    return fails({}, "no least nontrivial filter");
}

Flag simpleFlag(const FiniteAlgebra& a, bool squareIncreasing) {
    if (a.size() == 1) return fails({}, "trivial");
    if (squareIncreasing) {
        const std::vector<Elem> below = strictLowerBoundsOfE(a);
        if (below.size() == 1) return holds(below, "unique element below e");
        return fails(below, "strict lower bounds of e");
    }
    const std::size_t count = deductiveFilters(a).size();
    if (count == 2) return holds({}, "two congruences");
    return fails({}, std::to_string(count) + " congruences");
}

} // namespace

std::vector<std::pair<std::string, const Flag*>> ClassificationReport::entries() const {
    return {
        {"squareIncreasing", &squareIncreasing},
        {"idempotent", &idempotent},
        {"distributive", &distributive},
        {"totallyOrdered", &totallyOrdered},
        {"semilinear", &semilinear},
        {"bounded", &bounded},
        {"rigorouslyCompact", &rigorouslyCompact},
        {"antiIdempotent", &antiIdempotent},
        {"odd", &odd},
        {"integral", &integral},
        {"fsi", &fsi},
        {"si", &si},
        {"simple", &simple},
        {"negativelyGenerated", &negativelyGenerated},
        {"gsm", &gsm},
        {"dunnMonoid", &dunnMonoid},
        {"deMorganMonoid", &deMorganMonoid},
        {"sugiharaMonoid", &sugiharaMonoid},
    };
}

ClassificationReport classify(const FiniteAlgebra& a) {
    ClassificationReport r;
    const Elem e = a.e();
    r.squareIncreasing = squareIncreasingFlag(a);
    r.idempotent = idempotentFlag(a);
    r.distributive = distributiveFlag(a);
    r.totallyOrdered = totallyOrderedFlag(a);
    r.semilinear = both(r.distributive, prelinearFlag(a), "distributive", "prelinear");

    r.bounded = holds({a.bottom(), a.top()}, "finite");
    r.rigorouslyCompact = holds({a.bottom(), a.top()});
    for (Elem x = 0; x < a.size(); ++x)
        if (x != a.bottom() && a.fuse(a.top(), x) != a.top()) {
            r.rigorouslyCompact = fails({x}, "top*x != top");
            break;
        }

    if (!a.hasInvolution()) {
        r.antiIdempotent = fails({}, "no involution");
        r.odd = fails({}, "no involution");
    } else {
        const Elem f2 = a.fuse(a.f(), a.f());
        r.antiIdempotent = holds({f2});
        for (Elem x = 0; x < a.size(); ++x)
            if (!a.le(x, f2)) {
                r.antiIdempotent = fails({x}, "x not <= f^2");
                break;
            }
        r.odd = a.f() == e ? holds({e}) : fails({a.f()}, "f != e");
    }
    r.integral = a.top() == e ? holds({e}) : fails({a.top()}, "e is not the top");

    r.fsi = fsiFlag(a);
    r.si = siFlag(a, r.squareIncreasing.value);
    r.simple = simpleFlag(a, r.squareIncreasing.value);

    const std::vector<Elem> generated = generatedSubuniverse(a, negativeCone(a));
    if (static_cast<int>(generated.size()) == a.size()) {
        r.negativelyGenerated = holds(negativeCone(a));
    } else {
        std::vector<Elem> missing;
        for (Elem x = 0, i = 0; x < a.size(); ++x) {
            if (i < static_cast<Elem>(generated.size()) && generated[i] == x) ++i;
            else missing.push_back(x);
        }
        r.negativelyGenerated = fails(missing, "outside Sg of the negative cone");
    }

    Flag gsmLaw = holds();
    for (Elem x = 0; x < a.size(); ++x) {
        const Elem xe = a.join(x, e);
        if (a.star(a.star(xe)) != xe) {
            gsmLaw = fails({x}, "(x\\/e)** != x\\/e");
            break;
        }
    }
    r.gsm = both(both(r.semilinear, r.idempotent, "semilinear", "idempotent"), gsmLaw,
                 "semilinear idempotent", "(x\\/e)** = x\\/e");

    const Flag dunnBase = both(r.distributive, r.squareIncreasing, "distributive", "square-increasing");
    if (a.hasInvolution()) {
        r.dunnMonoid = fails({}, "has involution");
        r.deMorganMonoid = dunnBase;
    } else {
        r.dunnMonoid = dunnBase;
        r.deMorganMonoid = fails({}, "no involution");
    }
    r.sugiharaMonoid = both(r.deMorganMonoid, r.idempotent, "De Morgan", "idempotent");
    return r;
}

bool isSquareIncreasing(const FiniteAlgebra& a) { return squareIncreasingFlag(a).value; }
bool isIdempotent(const FiniteAlgebra& a) { return idempotentFlag(a).value; }
bool isDistributive(const FiniteAlgebra& a) { return distributiveFlag(a).value; }
bool isTotallyOrdered(const FiniteAlgebra& a) { return totallyOrderedFlag(a).value; }
bool isSemilinear(const FiniteAlgebra& a) { return isDistributive(a) && prelinearFlag(a).value; }

bool isNegativelyGenerated(const FiniteAlgebra& a) {
    return static_cast<int>(generatedSubuniverse(a, negativeCone(a)).size()) == a.size();
}

bool isDunnMonoid(const FiniteAlgebra& a) {
    return !a.hasInvolution() && isDistributive(a) && isSquareIncreasing(a);
}

bool isDeMorganMonoid(const FiniteAlgebra& a) {
    return a.hasInvolution() && isDistributive(a) && isSquareIncreasing(a);
}

bool isSugiharaMonoid(const FiniteAlgebra& a) { return isDeMorganMonoid(a) && isIdempotent(a); }

bool isIdempotentChain(const FiniteAlgebra& a) { return isTotallyOrdered(a) && isIdempotent(a); }

bool isOddSugiharaChain(const FiniteAlgebra& a) {
    if (!isIdempotentChain(a)) return false;
    if (a.hasInvolution()) return a.f() == a.e();
    for (Elem x = 0; x < a.size(); ++x)
        if (a.star(a.star(x)) != x) return false;
    return true;
}

bool isSubdirectlyIrreducible(const FiniteAlgebra& a) { return siFlag(a, isSquareIncreasing(a)).value; }
bool isSimple(const FiniteAlgebra& a) { return simpleFlag(a, isSquareIncreasing(a)).value; }

} // namespace dmm
