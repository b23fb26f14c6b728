#include "dmm/structure.hpp"

#include <algorithm>

#include "dmm/constructions.hpp"
#include "dmm/filters.hpp"
#include "dmm/isomorphism.hpp"

namespace dmm {

namespace {

bool isBijection(const ElementMap& h, int n) {
    if (static_cast<int>(h.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (Elem y : h) {
        if (y < 0 || y >= n || hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

Elem doubleStar(const FiniteAlgebra& a, Elem x) { return a.star(a.star(x)); }

} // namespace

Subalgebra doubleStarSubalgebra(const FiniteAlgebra& full) {
    const FiniteAlgebra a = rlReduct(full);
    if (!isIdempotentChain(a)) throw Error(ErrorKind::WrongClass, "A must be a totally ordered idempotent RL");
    std::vector<Elem> universe;
    for (Elem x = 0; x < a.size(); ++x) universe.push_back(doubleStar(a, x));
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    std::optional<std::string> name;
    if (full.name()) name = *full.name() + "**";
    Subalgebra sub{restrictTo(a, universe, name), ElementMap(universe.begin(), universe.end())};

    // With ~x := x* the base must be an odd Sugihara chain.
    RawTables raw = sub.algebra.raw();
    std::vector<Elem> ng(sub.algebra.size());
    for (Elem x = 0; x < sub.algebra.size(); ++x) ng[x] = sub.algebra.star(x);
    raw.neg = ng;
    const FiniteAlgebra involutive = FiniteAlgebra::validate(std::move(raw));
    if (!isOddSugiharaChain(involutive) || !isSugiharaMonoid(involutive))
        throw Error(ErrorKind::InternalInvariantViolation, "A** is not an odd Sugihara chain");
    return sub;
}

OtimesDecomposition decomposeOtimes(const FiniteAlgebra& full) {
    const FiniteAlgebra a = rlReduct(full);
    const Subalgebra base = doubleStarSubalgebra(full);
    const int m = base.algebra.size();
    OtimesDecomposition d{base.algebra, base.embedding, std::vector<std::vector<Elem>>(m), std::vector<int>(m, 0),
                          base.algebra, {}};
    std::vector<Elem> sorted(a.size());
    for (Elem x = 0; x < a.size(); ++x) sorted[x] = x;
    std::sort(sorted.begin(), sorted.end(), [&](Elem x, Elem y) { return a.lt(x, y); });
    for (Elem x : sorted) {
        const Elem c = doubleStar(a, x);
        const Elem ci = static_cast<Elem>(std::find(base.embedding.begin(), base.embedding.end(), c) -
                                          base.embedding.begin());
        d.blocks[ci].push_back(x);
    }
    for (int i = 0; i < m; ++i) {
        d.sizes[i] = static_cast<int>(d.blocks[i].size());
        if (d.blocks[i].back() != base.embedding[i])
            throw Error(ErrorKind::InternalInvariantViolation, "block top is not its base element");
    }
    OtimesResult r = otimesWithPoints({base.algebra, d.sizes});
    d.iso.assign(r.algebra.size(), -1);
    std::vector<std::string> labels(r.algebra.size());
    for (int i = 0; i < r.algebra.size(); ++i) {
        const auto& blk = d.blocks[r.points[i].base];
        d.iso[i] = blk[blk.size() - 1 - r.points[i].depth];
        labels[i] = a.label(d.iso[i]);
    }
    d.reassembled = r.algebra.withLabels(std::move(labels));
    if (!isBijection(d.iso, a.size()) || !isHomomorphism(d.reassembled, a, d.iso))
        throw Error(ErrorKind::InternalInvariantViolation, "otimes reassembly is not isomorphic to A");
    return d;
}

GsmVerdict isGsm(const FiniteAlgebra& full) {
    const FiniteAlgebra a = rlReduct(full);
    if (!isSemilinear(a) || !isIdempotent(a))
        throw Error(ErrorKind::WrongClass, "A must be a semilinear idempotent RL");
    GsmVerdict v;
    const EquationVerdict eq = checkEquation(a, namedEquation("gsm"));
    v.equational = eq.holds;
    if (!eq.holds) v.witness = {eq.counterexample.at("x")};
    if (isTotallyOrdered(a)) {
        bool blocksTrivial = true;
        for (Elem c = 0; c < a.size(); ++c) {
            if (!a.lt(a.e(), c)) continue;
            for (Elem x = 0; x < a.size(); ++x)
                if (x != c && doubleStar(a, x) == c) blocksTrivial = false;
            if (doubleStar(a, c) != c) blocksTrivial = false;
        }
        v.blockTest = blocksTrivial;
        if (blocksTrivial != v.equational)
            throw Error(ErrorKind::InternalInvariantViolation, "GSM block test disagrees with the equation");
    }
    v.value = v.equational;
    return v;
}

DmmDecomposition decomposeDmm(const FiniteAlgebra& a) {
    if (!isDeMorganMonoid(a) || !isTotallyOrdered(a))
        throw Error(ErrorKind::WrongClass, "A must be a totally ordered De Morgan monoid");
    if (isIdempotent(a)) throw Error(ErrorKind::IsIdempotent, "A is a Sugihara monoid");
    const Elem f2 = a.fuse(a.f(), a.f());
    const Elem nf2 = a.neg(f2);
    std::vector<Elem> interval;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.le(nf2, x) && a.le(x, f2)) interval.push_back(x);
    std::optional<std::string> coreName;
    if (a.name()) coreName = "core(" + *a.name() + ")";
    FiniteAlgebra core = restrictTo(a, interval, coreName);

    const Filter g = filterGenerated(a, {nf2});
    Quotient q = quotient(a, g);
    if (!isOddSugiharaChain(q.algebra) || !q.algebra.hasInvolution())
        throw Error(ErrorKind::InternalInvariantViolation, "A/[~f^2) is not an odd Sugihara chain");
    std::vector<Elem> eClass;
    for (Elem x = 0; x < a.size(); ++x)
        if (q.map[x] == q.map[a.e()]) eClass.push_back(x);
    if (eClass != interval) throw Error(ErrorKind::InternalInvariantViolation, "e-class differs from [~f^2, f^2]");
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < x; ++y)
            if (q.map[x] == q.map[y] && q.map[x] != q.map[a.e()])
                throw Error(ErrorKind::InternalInvariantViolation, "a non-e class is not a singleton");

    RigorousExtension ext = rigorousExtensionWithMaps(q.algebra, core);
    ElementMap iso(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
        const auto pos = std::find(interval.begin(), interval.end(), x);
        iso[x] = pos != interval.end() ? ext.fromA[pos - interval.begin()] : ext.fromS[q.map[x]];
    }
    if (!isBijection(iso, ext.algebra.size()) || !isHomomorphism(a, ext.algebra, iso))
        throw Error(ErrorKind::InternalInvariantViolation, "rigorous extension reassembly is not isomorphic to A");
    return {std::move(core), ElementMap(interval.begin(), interval.end()), std::move(q.algebra), std::move(q.map),
            std::move(eClass), std::move(ext.algebra), std::move(iso)};
}

ReflectionRecognition reflectionRecognize(const FiniteAlgebra& a) {
    ReflectionRecognition r;
    if (!a.hasInvolution()) {
        r.reason = "no involution";
        return r;
    }
    const Elem f2 = a.fuse(a.f(), a.f());
    const Elem zero = a.neg(f2);
    for (Elem x = 0; x < a.size(); ++x)
        if (x != zero && a.fuse(x, x) != f2) r.carrier.push_back(x);
    const FiniteAlgebra reduct = rlReduct(a);
    if (!isSubuniverse(reduct, r.carrier)) {
        r.reason = "carrier is not closed under the RL operations";
        return r;
    }
    FiniteAlgebra d = restrictTo(reduct, r.carrier, std::string("D"));
    if (!isDunnMonoid(d)) {
        r.reason = "carrier is not a Dunn monoid";
        return r;
    }
    const FiniteAlgebra refl = reflection(d);
    r.iso = isomorphism(refl, a);
    r.d = std::move(d);
    r.recognized = r.iso.has_value();
    if (!r.recognized) r.reason = "A is not isomorphic to R(D)";
    return r;
}

namespace {

// Structural side for a totally ordered De Morgan monoid.
bool structuralDeMorganChain(const FiniteAlgebra& a, std::string& note) {
    if (isIdempotent(a)) {
        note = "totally ordered Sugihara monoid";
        return true;
    }
    const DmmDecomposition dec = decomposeDmm(a);
    const ReflectionRecognition rec = reflectionRecognize(dec.core);
    if (!rec.recognized) {
        note = "core is not a reflection: " + rec.reason;
        return false;
    }
    if (!isTotallyOrdered(*rec.d) || !isIdempotent(*rec.d) || !isGsm(*rec.d).value) {
        note = "core is R(D) with D not a totally ordered GSM";
        return false;
    }
    note = "S[R(D)] with |S| = " + std::to_string(dec.oddFactor.size()) + ", |D| = " + std::to_string(rec.d->size());
    return true;
}

bool structuralDunnChain(const FiniteAlgebra& a, std::string& note) {
    if (!isIdempotent(a)) {
        note = "not idempotent";
        return false;
    }
    if (!isGsm(a).value) {
        note = "idempotent but not a GSM";
        return false;
    }
    note = "idempotent GSM";
    return true;
}

// Runs a chain test on every totally ordered quotient and checks that their
// kernels intersect to the identity.
bool structuralSemilinear(const FiniteAlgebra& a, bool deMorgan, std::string& note) {
    auto chainTest = [&](const FiniteAlgebra& c, std::string& n) {
        return deMorgan ? structuralDeMorganChain(c, n) : structuralDunnChain(c, n);
    };
    if (isTotallyOrdered(a)) return chainTest(a, note);
    std::vector<Congruence> kernels;
    bool all = true;
    int count = 0;
    for (const Filter& g : deductiveFilters(a)) {
        const Quotient q = quotient(a, g);
        if (!isTotallyOrdered(q.algebra)) continue;
        ++count;
        kernels.push_back(leibniz(a, g));
        std::string sub;
        if (!chainTest(q.algebra, sub)) {
            if (all) note = "chain quotient fails: " + sub;
            all = false;
        }
    }
    bool separating = true;
    for (Elem x = 0; x < a.size() && separating; ++x)
        for (Elem y = 0; y < x && separating; ++y) {
            bool together = true;
            for (const Congruence& k : kernels) together = together && k[x] == k[y];
            if (together) separating = false;
        }
    if (!separating) {
        note = "chain quotients do not separate points";
        return false;
    }
    if (all) note = std::to_string(count) + " chain quotients, all of the required form";
    return all;
}

} // namespace

NegGenReport negGenEquivalenceSuite(const FiniteAlgebra& a) {
    NegGenReport r;
    if (!isSemilinear(a)) throw Error(ErrorKind::WrongClass, "A must be semilinear");
    if (isDunnMonoid(a)) r.kind = "dunn";
    else if (isDeMorganMonoid(a)) r.kind = "demorgan";
    else throw Error(ErrorKind::WrongClass, "A must be a Dunn monoid or a De Morgan monoid");

    const std::vector<Elem> generated = generatedSubuniverse(a, negativeCone(a));
    r.negativelyGenerated = static_cast<int>(generated.size()) == a.size();
    for (Elem x = 0; x < a.size(); ++x)
        if (!std::binary_search(generated.begin(), generated.end(), x)) r.missing.push_back(x);

    r.equationKey = r.kind == "dunn" ? "sigma" : "negcone";
    const EquationVerdict eq = checkEquation(a, namedEquation(r.equationKey));
    r.equational = eq.holds;
    if (!eq.holds) r.counterexample = eq.counterexample;

    r.structural = structuralSemilinear(a, r.kind == "demorgan", r.structuralNote);
    r.agree = r.negativelyGenerated == r.equational && r.equational == r.structural;
    return r;
}

std::vector<Elem> minimalGeneratingSet(const FiniteAlgebra& a) {
    const int n = a.size();
    for (int k = 0; k <= n; ++k) {
        std::vector<Elem> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (static_cast<int>(generatedSubuniverse(a, pick).size()) == n) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error(ErrorKind::InternalInvariantViolation, "the full carrier does not generate A");
}

BoundReport boundCheck(const FiniteAlgebra& a, const std::vector<Elem>& generators) {
    if (!isTotallyOrdered(a)) throw Error(ErrorKind::WrongClass, "A must be totally ordered");
    std::vector<Elem> gens = generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (static_cast<int>(generatedSubuniverse(a, gens).size()) != a.size())
        throw Error(ErrorKind::NotGenerating, "the given elements do not generate A");
    BoundReport r;
    r.generators = static_cast<int>(gens.size());
    r.size = a.size();
    const int n = r.generators;
    if (isSugiharaMonoid(a)) {
        const bool odd = a.f() == a.e();
        r.rule = odd ? "sugihara-odd" : "sugihara";
        r.bound = odd ? 2 * n + 1 : 2 * n + 2;
    } else if (isIdempotent(a)) {
        r.rule = "idempotent";
        r.bound = 3 * n + 1;
    } else if (isDeMorganMonoid(a) && isNegativelyGenerated(a)) {
        r.rule = "demorgan-neg-gen";
        r.bound = 6 * n + 4;
    } else {
        r.rule = "none";
    }
    if (r.bound) {
        r.slack = *r.bound - r.size;
        r.holds = *r.slack >= 0;
    }
    return r;
}

CompactnessReport rigorousCompactnessSuite(const FiniteAlgebra& a) {
    if (!a.hasInvolution()) throw Error(ErrorKind::NoInvolution, "rigorous compactness is defined for IRLs");
    CompactnessReport r;
    const Elem bot = a.bottom(), top = a.top();
    r.topAbsorbs = r.residToBottom = r.topResid = true;
    for (Elem x = 0; x < a.size(); ++x) {
        if (x != bot && a.fuse(top, x) != top) r.topAbsorbs = false;
        if (x != bot && a.resid(x, bot) != bot) r.residToBottom = false;
        if (x != top && a.resid(top, x) != bot) r.topResid = false;
    }
    r.agree = r.topAbsorbs == r.residToBottom && r.residToBottom == r.topResid;
    r.boundedFsiDmm = isDeMorganMonoid(a) && classify(a).fsi.value;
    r.consistent = r.agree && (!r.boundedFsiDmm || r.topAbsorbs);
    return r;
}

std::vector<FormulaMismatch> structureFormulaMismatches(const FiniteAlgebra& full) {
    const FiniteAlgebra a = rlReduct(full);
    if (!isIdempotentChain(a)) throw Error(ErrorKind::WrongClass, "A must be a totally ordered idempotent RL");
    std::vector<FormulaMismatch> out;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y) {
            const Elem ax = a.abs(x), ay = a.abs(y);
            Elem prod;
            if (a.lt(ay, ax)) prod = x;
            else if (a.lt(ax, ay)) prod = y;
            else prod = a.meet(x, y);
            if (prod != a.fuse(x, y)) out.push_back({"fusion", x, y, a.fuse(x, y), prod});
            const Elem res = a.le(x, y) ? a.join(a.star(x), y) : a.meet(a.star(x), y);
            if (res != a.resid(x, y)) out.push_back({"residual", x, y, a.resid(x, y), res});
        }
    return out;
}

} // namespace dmm
