#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/filters.hpp"
#include "dmm/isomorphism.hpp"

using namespace dmm;

namespace {

Elem at(const FiniteAlgebra& a, const std::string& label) {
    auto x = a.findLabel(label);
    REQUIRE(x.has_value());
    return *x;
}

// Subset enumeration straight from the definition.
std::set<Filter> bruteFilters(const FiniteAlgebra& a) {
    std::set<Filter> out;
    const int n = a.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](Elem x) { return (mask >> x) & 1u; };
        if (!in(a.e())) continue;
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = 0; y < n && ok; ++y) {
                if (in(x) && a.le(x, y) && !in(y)) ok = false;
                if (in(x) && in(y) && (!in(a.meet(x, y)) || !in(a.fuse(x, y)))) ok = false;
            }
        if (!ok) continue;
        Filter f;
        for (Elem x = 0; x < n; ++x)
            if (in(x)) f.push_back(x);
        out.insert(f);
    }
    return out;
}

// All partitions as restricted growth strings, kept when compatible.
std::set<Congruence> bruteCongruences(const FiniteAlgebra& a) {
    std::set<Congruence> out;
    const int n = a.size();
    Congruence p(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            auto same = [&](Elem x, Elem y) { return p[x] == p[y]; };
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y) {
                    if (!same(x, y)) continue;
                    if (a.hasInvolution() && !same(a.neg(x), a.neg(y))) return;
                    for (Elem z = 0; z < n; ++z) {
                        if (!same(a.fuse(x, z), a.fuse(y, z)) || !same(a.resid(x, z), a.resid(y, z)) ||
                            !same(a.resid(z, x), a.resid(z, y)) || !same(a.meet(x, z), a.meet(y, z)) ||
                            !same(a.join(x, z), a.join(y, z)))
                            return;
                    }
                }
            out.insert(p);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            p[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

TEST_CASE("filters match subset enumeration") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (a.size() > 12) continue;
        CAPTURE(key);
        const std::vector<Filter> fs = deductiveFilters(a);
        CHECK(std::set<Filter>(fs.begin(), fs.end()) == bruteFilters(a));
        CHECK(fs.front() == filterGenerated(a, {}));
        CHECK(fs.back().size() == static_cast<std::size_t>(a.size()));
        for (const Filter& f : fs) CHECK(isDeductiveFilter(a, f));
    }
}

TEST_CASE("filter examples") {
    const FiniteAlgebra& s3o2 = corpusAlgebra("S3o2");
    const std::vector<Filter> fs = deductiveFilters(s3o2);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == Filter{at(s3o2, "0"), at(s3o2, "c"), at(s3o2, "1")});
    CHECK(deductiveFilters(trivialAlgebra(true)).size() == 1);
    const FiniteAlgebra& a3 = corpusAlgebra("A3");
    REQUIRE(deductiveFilters(a3).size() == 2);
    CHECK(deductiveFilters(a3)[0] == Filter{at(a3, "1"), at(a3, "2"), at(a3, "4"), at(a3, "8"), at(a3, "16")});
}

TEST_CASE("Leibniz congruences") {
    for (const auto& [key, a] : goldenCorpus()) {
        CAPTURE(key);
        const Congruence id = leibniz(a, filterGenerated(a, {}));
        for (Elem x = 0; x < a.size(); ++x) CHECK(id[x] == x);
        Filter whole;
        for (Elem x = 0; x < a.size(); ++x) whole.push_back(x);
        CHECK(leibniz(a, whole) == Congruence(a.size(), 0));
    }
    const FiniteAlgebra& rs = corpusAlgebra("RS3");
    const Elem bot = rs.bottom();
    const Elem mid = at(rs, "a");
    const Congruence theta = leibniz(rs, {mid, rs.e()});
    CHECK(theta[mid] == theta[rs.e()]);
    CHECK(theta[bot] != theta[mid]);
}

TEST_CASE("filters and congruences correspond") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (a.size() > 8) continue;
        CAPTURE(key);
        const std::vector<Congruence> cons = congruenceLattice(a);
        CHECK(std::set<Congruence>(cons.begin(), cons.end()) == bruteCongruences(a));
        const std::vector<Filter> fs = deductiveFilters(a);
        REQUIRE(cons.size() == fs.size());
        for (const Filter& f : fs) {
            const Congruence theta = leibniz(a, f);
            CHECK(filterOfCongruence(a, theta) == f);
            for (const Filter& g : fs) {
                const Congruence phi = leibniz(a, g);
                bool refines = true;
                for (Elem x = 0; x < a.size(); ++x)
                    for (Elem y = 0; y < a.size(); ++y)
                        if (theta[x] == theta[y] && phi[x] != phi[y]) refines = false;
                CHECK(refines == isSubset(f, g));
            }
        }
    }
}

TEST_CASE("quotients") {
    for (const auto& [key, a] : goldenCorpus()) {
        CAPTURE(key);
        const Quotient q = quotient(a, filterGenerated(a, {}));
        CHECK(isomorphism(q.algebra, a).has_value());
        for (const Filter& g : deductiveFilters(a)) {
            const Quotient r = quotient(a, g);
            for (Elem x = 0; x < a.size(); ++x)
                for (Elem y = 0; y < a.size(); ++y) {
                    const bool inG = std::binary_search(g.begin(), g.end(), a.resid(x, y));
                    CHECK(r.algebra.le(r.map[x], r.map[y]) == inG);
                    CHECK(r.map[a.fuse(x, y)] == r.algebra.fuse(r.map[x], r.map[y]));
                }
            // e/G is an interval subuniverse of the RL reduct.
            std::vector<Elem> eClass;
            for (Elem x = 0; x < a.size(); ++x)
                if (r.map[x] == r.map[a.e()]) eClass.push_back(x);
            CHECK(isSubuniverse(rlReduct(a), eClass));
            for (Elem x : eClass)
                for (Elem y : eClass)
                    for (Elem z = 0; z < a.size(); ++z)
                        if (a.le(x, z) && a.le(z, y)) CHECK(std::binary_search(eClass.begin(), eClass.end(), z));
        }
    }
    const FiniteAlgebra& s3c4 = corpusAlgebra("S3[C4]");
    const Elem f2 = s3c4.fuse(s3c4.f(), s3c4.f());
    const Quotient q = quotient(s3c4, filterGenerated(s3c4, {s3c4.neg(f2)}));
    CHECK(isomorphism(q.algebra, sugihara(3)).has_value());

    const FiniteAlgebra& a3 = corpusAlgebra("A3");
    const Elem lo = a3.neg(a3.fuse(a3.f(), a3.f()));
    CHECK(lo == at(a3, "0"));
    CHECK(quotient(a3, filterGenerated(a3, {lo})).algebra.size() == 1);
}

TEST_CASE("idempotent chains collapse only onto e") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (!isIdempotentChain(a)) continue;
        CAPTURE(key);
        for (const Filter& f : deductiveFilters(a)) {
            const Congruence theta = leibniz(a, f);
            for (Elem x = 0; x < a.size(); ++x)
                for (Elem y = 0; y < a.size(); ++y)
                    if (x != y && theta[x] == theta[y]) CHECK(theta[y] == theta[a.e()]);
        }
    }
}

TEST_CASE("simplicity and filter count") {
    for (const auto& [key, a] : goldenCorpus()) {
        if (a.size() == 1) continue;
        CAPTURE(key);
        CHECK(isSimple(a) == (deductiveFilters(a).size() == 2));
    }
}

TEST_CASE("prime filters and depth") {
    const FiniteAlgebra s5 = sugihara(5);
    // In a chain every proper filter is prime.
    const std::vector<Filter> fs = deductiveFilters(s5);
    const std::vector<Filter> ps = primeFilters(s5);
    CHECK(ps.size() == fs.size() - 1);
    CHECK(depth(s5) == static_cast<int>(ps.size()) - 1);

    const FiniteAlgebra& d4 = corpusAlgebra("D4");
    for (const Filter& p : primeFilters(d4)) {
        CHECK(p.size() < static_cast<std::size_t>(d4.size()));
        for (Elem x = 0; x < d4.size(); ++x)
            for (Elem y = 0; y < d4.size(); ++y) {
                const bool outX = !std::binary_search(p.begin(), p.end(), x);
                const bool outY = !std::binary_search(p.begin(), p.end(), y);
                if (outX && outY) CHECK_FALSE(std::binary_search(p.begin(), p.end(), d4.join(x, y)));
            }
    }
}
