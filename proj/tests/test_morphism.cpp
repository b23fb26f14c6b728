#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/filters.hpp"
#include "dmm/isomorphism.hpp"
#include "dmm/morphism.hpp"

using namespace dmm;

namespace {

Elem at(const FiniteAlgebra& a, const std::string& label) {
    auto x = a.findLabel(label);
    REQUIRE(x.has_value());
    return *x;
}

template <class F>
ErrorKind kindOf(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInvariantViolation;
}

bool preserves(const FiniteAlgebra& a, const FiniteAlgebra& b, const ElementMap& h) {
    if (h[a.e()] != b.e()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (a.hasInvolution() && h[a.neg(x)] != b.neg(h[x])) return false;
        for (Elem y = 0; y < a.size(); ++y) {
            if (h[a.fuse(x, y)] != b.fuse(h[x], h[y])) return false;
            if (h[a.resid(x, y)] != b.resid(h[x], h[y])) return false;
            if (h[a.meet(x, y)] != b.meet(h[x], h[y])) return false;
            if (h[a.join(x, y)] != b.join(h[x], h[y])) return false;
        }
    }
    return true;
}

std::vector<ElementMap> bruteHoms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    std::vector<ElementMap> out;
    ElementMap h(a.size(), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == a.size()) {
            if (preserves(a, b, h)) out.push_back(h);
            return;
        }
        for (Elem y = 0; y < b.size(); ++y) {
            h[i] = y;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<Elem>> bruteSubuniverses(const FiniteAlgebra& a) {
    std::vector<std::vector<Elem>> out;
    const int n = a.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](Elem x) { return (mask >> x) & 1u; };
        if (!in(a.e())) continue;
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
            if (!in(x)) continue;
            if (a.hasInvolution() && !in(a.neg(x))) ok = false;
            for (Elem y = 0; y < n && ok; ++y)
                if (in(y) && (!in(a.fuse(x, y)) || !in(a.resid(x, y)) || !in(a.meet(x, y)) || !in(a.join(x, y))))
                    ok = false;
        }
        if (!ok) continue;
        std::vector<Elem> s;
        for (Elem x = 0; x < n; ++x)
            if (in(x)) s.push_back(x);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    return out;
}

void checkPair(const FiniteAlgebra& a, const std::vector<Elem>& b, const FiniteAlgebra& target, const ElementMap& g,
               const ElementMap& h, Elem differ) {
    CHECK(isHomomorphism(a, target, g));
    CHECK(isHomomorphism(a, target, h));
    for (Elem x : b) CHECK(g[x] == h[x]);
    CHECK(g[differ] != h[differ]);
}

} // namespace

TEST_CASE("homomorphisms match exhaustive search") {
    std::vector<std::pair<std::string, FiniteAlgebra>> small;
    for (const auto& [key, a] : goldenCorpus())
        if (a.size() <= 5) small.emplace_back(key, a);
    for (const auto& [ka, a] : small)
        for (const auto& [kb, b] : small) {
            if (!sameSignature(a, b)) {
                CHECK(kindOf([&] { allHomomorphisms(a, b); }) == ErrorKind::SignatureMismatch);
                continue;
            }
            CAPTURE(ka);
            CAPTURE(kb);
            const std::vector<ElementMap> homs = allHomomorphisms(a, b);
            CHECK(homs == bruteHoms(a, b));
            for (const ElementMap& h : homs) CHECK(isHomomorphism(a, b, h));
            std::vector<ElementMap> inj;
            for (const ElementMap& h : homs) {
                ElementMap s = h;
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) == s.end()) inj.push_back(h);
            }
            CHECK(allEmbeddings(a, b) == inj);
        }
}

TEST_CASE("homomorphism examples") {
    CHECK(allHomomorphisms(corpusAlgebra("A3"), corpusAlgebra("C4")).empty());
    CHECK(allHomomorphisms(corpusAlgebra("S4"), corpusAlgebra("S3")).size() == 2);
    CHECK(allHomomorphisms(corpusAlgebra("S3"), corpusAlgebra("S4")).empty());
    const FiniteAlgebra& c4 = corpusAlgebra("C4");
    ElementMap id(c4.size());
    for (Elem x = 0; x < c4.size(); ++x) id[x] = x;
    CHECK(allHomomorphisms(c4, c4) == std::vector<ElementMap>{id});
}

TEST_CASE("subuniverses match exhaustive search") {
    for (const auto& [key, a] : goldenCorpus()) {
        CAPTURE(key);
        const auto subs = allSubuniverses(a);
        CHECK(subs == bruteSubuniverses(a));
        for (const auto& s : subs) CHECK(generatedSubuniverse(a, s) == s);
    }
    CHECK(allSubuniverses(corpusAlgebra("S3o2")).size() == 3);
    const Subalgebra sg = subalgebraGenerated(corpusAlgebra("A3"), {at(corpusAlgebra("A3"), "2")});
    CHECK(sg.algebra.size() == 6);
}

TEST_CASE("homomorphism characterization on idempotent chains") {
    const std::vector<std::string> keys{"2+", "S3o2", "S3o3", "RS3"};
    for (const auto& ka : keys)
        for (const auto& kb : keys) {
            const FiniteAlgebra& a = corpusAlgebra(ka);
            const FiniteAlgebra& b = corpusAlgebra(kb);
            CAPTURE(ka);
            CAPTURE(kb);
            ElementMap h(a.size(), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == a.size()) {
                    const HomCharacterization c = checkHomCharacterization(h, a, b);
                    CHECK(c.satisfied == preserves(a, b, h));
                    if (c.satisfied) {
                        CHECK(c.failedCondition == 0);
                        std::vector<Elem> kernel;
                        for (Elem x = 0; x < a.size(); ++x)
                            if (h[x] == b.e()) kernel.push_back(x);
                        CHECK(c.kernelOfE == kernel);
                    } else {
                        CHECK(c.failedCondition >= 1);
                        CHECK(c.failedCondition <= 4);
                        CHECK_FALSE(c.detail.empty());
                    }
                    return;
                }
                for (Elem y = 0; y < b.size(); ++y) {
                    h[i] = y;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    const FiniteAlgebra& c4 = corpusAlgebra("C4");
    CHECK(kindOf([&] { checkHomCharacterization(ElementMap(4, 0), c4, c4); }) == ErrorKind::WrongClass);
}

TEST_CASE("epic subalgebras") {
    const FiniteAlgebra& s3o2 = corpusAlgebra("S3o2");
    const std::vector<Elem> b{at(s3o2, "-1"), at(s3o2, "0"), at(s3o2, "1")};
    CHECK(isEpic(s3o2, b, {s3o2}).epic);
    const EpicVerdict v = isEpic(s3o2, b, {s3o2, corpusAlgebra("S3o3")});
    REQUIRE_FALSE(v.epic);
    REQUIRE(v.witness.has_value());
    checkPair(s3o2, b, v.witness->target, v.witness->g, v.witness->h, v.witness->disagreement);

    for (const auto& [key, a] : goldenCorpus()) {
        if (a.size() > 7) continue;
        CAPTURE(key);
        const auto subs = allSubuniverses(a);
        CHECK(isEpic(a, subs.back(), {a}).epic);
    }
    CHECK(kindOf([&] { isEpic(s3o2, {at(s3o2, "c")}, {s3o2}); }) == ErrorKind::NotASubuniverse);
}

TEST_CASE("separating pairs in idempotent chains") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (!isIdempotentChain(a)) continue;
        CAPTURE(key);
        const FiniteAlgebra src = a.hasInvolution() ? rlReduct(a) : a;
        const bool gsm = classify(src).gsm.value;
        for (const auto& b : allSubuniverses(a)) {
            if (static_cast<int>(b.size()) == a.size()) continue;
            for (Elem x = 0; x < a.size(); ++x) {
                if (std::binary_search(b.begin(), b.end(), x)) continue;
                const SeparatingPair p = separatingPairIdem(a, b, x);
                CHECK(p.requested == x);
                CHECK((p.used == x || (p.replacedByStar && p.used == src.star(x))));
                checkPair(src, b, p.target, p.g, p.h, p.used);
                CHECK_FALSE(isEpic(src, b, {src, p.target}).epic);
                if (gsm) {
                    const SeparatingPair q = separatingPairGsm(a, b, x);
                    checkPair(src, b, q.target, q.g, q.h, q.used);
                }
            }
        }
    }
    const FiniteAlgebra& s3o2 = corpusAlgebra("S3o2");
    const std::vector<Elem> b{at(s3o2, "-1"), at(s3o2, "0"), at(s3o2, "1")};
    CHECK(kindOf([&] { separatingPairIdem(s3o2, b, at(s3o2, "0")); }) == ErrorKind::ElementInB);
    CHECK(kindOf([&] { separatingPairIdem(s3o2, {at(s3o2, "c")}, at(s3o2, "0")); }) ==
          ErrorKind::NotASubuniverse);
    CHECK(kindOf([] { separatingPairIdem(corpusAlgebra("C4"), {1}, 0); }) == ErrorKind::WrongClass);
    CHECK(kindOf([&] { separatingPairGsm(s3o2, b, at(s3o2, "c")); }) == ErrorKind::WrongClass);
}

TEST_CASE("proper epic subalgebras of A_p") {
    const FiniteAlgebra& a3 = corpusAlgebra("A3");
    const ApsReport r = apsCheck(a3, at(a3, "2"), 2);
    CHECK(r.hypothesis);
    CHECK(r.power == at(a3, "4"));
    CHECK(r.nextPower == at(a3, "8"));
    CHECK(r.universe == std::vector<Elem>{at(a3, "0"), at(a3, "1"), at(a3, "8"), at(a3, "16")});
    CHECK(r.proper);
    CHECK(r.epic);
    CHECK(r.passed);
}

TEST_CASE("HS of generators") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (a.size() > 6) continue;
        CAPTURE(key);
        std::vector<FiniteAlgebra> expect;
        for (const auto& s : bruteSubuniverses(a)) {
            const FiniteAlgebra sub = restrictTo(a, s);
            for (const Filter& f : deductiveFilters(sub)) {
                const FiniteAlgebra q = quotient(sub, f).algebra;
                const bool seen = std::any_of(expect.begin(), expect.end(),
                                              [&](const FiniteAlgebra& x) { return isomorphism(x, q).has_value(); });
                if (!seen) expect.push_back(q);
            }
        }
        const std::vector<FiniteAlgebra> hs = hsUpToIso({a});
        CHECK(hs.size() == expect.size());
        for (const FiniteAlgebra& q : expect)
            CHECK(std::any_of(hs.begin(), hs.end(), [&](const FiniteAlgebra& x) { return isomorphism(x, q).has_value(); }));
        for (const FiniteAlgebra& s : siMembers({a})) CHECK(isSubdirectlyIrreducible(s));
    }
    CHECK(kindOf([] { hsUpToIso({corpusAlgebra("C4"), corpusAlgebra("RS3")}); }) == ErrorKind::SignatureMismatch);
}

TEST_CASE("homomorphisms extend to rigorous extensions") {
    const std::vector<std::string> keys{"2", "C4", "D4", "R(2+)"};
    for (int n : {1, 3, 5})
        for (const auto& ka : keys)
            for (const auto& kb : keys) {
                const FiniteAlgebra s = sugihara(n);
                const FiniteAlgebra& a = corpusAlgebra(ka);
                const FiniteAlgebra& b = corpusAlgebra(kb);
                CAPTURE(n);
                CAPTURE(ka);
                CAPTURE(kb);
                const RigorousExtension sa = rigorousExtensionWithMaps(s, a);
                const RigorousExtension sb = rigorousExtensionWithMaps(s, b);
                for (const ElementMap& h : allHomomorphisms(a, b)) {
                    const RigorousHom ext = extendToRigorous(s, a, b, h);
                    CHECK(preserves(ext.source, ext.target, ext.map));
                    CHECK(ext.source.sameTables(sa.algebra));
                    for (Elem v = 0; v < a.size(); ++v) CHECK(ext.map[sa.fromA[v]] == sb.fromA[h[v]]);
                    for (Elem t = 0; t < s.size(); ++t)
                        if (t != s.e()) CHECK(ext.map[sa.fromS[t]] == sb.fromS[t]);
                }
            }
}
