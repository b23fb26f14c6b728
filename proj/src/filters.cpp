#include "dmm/filters.hpp"

#include <algorithm>

namespace dmm {

namespace {

std::vector<char> toMask(const FiniteAlgebra& a, const std::vector<Elem>& xs) {
    std::vector<char> m(a.size(), 0);
    for (Elem x : xs) m[x] = 1;
    return m;
}

Filter fromMask(const std::vector<char>& m) {
    Filter out;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        if (m[i]) out.push_back(i);
    return out;
}

bool filterLess(const Filter& x, const Filter& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

Congruence canonicalClasses(const std::vector<int>& rep) {
    // rep[x] is any representative; renumber by least member.
    Congruence ids(rep.size(), -1);
    std::vector<int> idOfRep(rep.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < rep.size(); ++x) {
        int& id = idOfRep[rep[x]];
        if (id < 0) id = next++;
        ids[x] = id;
    }
    return ids;
}

} // namespace

bool isSubset(const std::vector<Elem>& small, const std::vector<Elem>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Filter filterGenerated(const FiniteAlgebra& a, const std::vector<Elem>& gens) {
    const int n = a.size();
    std::vector<char> in = toMask(a, gens);
    in[a.e()] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem x = 0; x < n; ++x) {
            if (!in[x]) continue;
            for (Elem y = 0; y < n; ++y) {
                if (!in[y] && a.le(x, y)) in[y] = 1, changed = true;
                if (!in[y]) continue;
                const Elem m = a.meet(x, y);
                const Elem p = a.fuse(x, y);
                if (!in[m]) in[m] = 1, changed = true;
                if (!in[p]) in[p] = 1, changed = true;
            }
        }
    }
    return fromMask(in);
}

bool isDeductiveFilter(const FiniteAlgebra& a, const Filter& f) {
    std::vector<Elem> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    return filterGenerated(a, sorted) == sorted;
}

std::vector<Filter> deductiveFilters(const FiniteAlgebra& a) {
    std::vector<Filter> found{filterGenerated(a, {})};
    for (std::size_t i = 0; i < found.size(); ++i) {
        const Filter base = found[i];
        std::vector<char> in = toMask(a, base);
        for (Elem x = 0; x < a.size(); ++x) {
            if (in[x]) continue;
            Filter ext = base;
            ext.push_back(x);
            Filter g = filterGenerated(a, ext);
            if (std::find(found.begin(), found.end(), g) == found.end()) found.push_back(std::move(g));
        }
    }
    std::sort(found.begin(), found.end(), filterLess);
    return found;
}

Congruence leibniz(const FiniteAlgebra& a, const Filter& g) {
    const int n = a.size();
    const std::vector<char> in = toMask(a, g);
    auto related = [&](Elem x, Elem y) { return in[a.resid(x, y)] && in[a.resid(y, x)]; };
    std::vector<int> rep(n);
    for (Elem x = 0; x < n; ++x) {
        rep[x] = x;
        for (Elem y = 0; y < x; ++y)
            if (related(x, y)) {
                rep[x] = rep[y];
                break;
            }
    }
    Congruence theta = canonicalClasses(rep);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if ((theta[x] == theta[y]) != related(x, y))
                throw Error(ErrorKind::InternalInvariantViolation, "Leibniz relation is not an equivalence");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (theta[x] != theta[y]) continue;
            if (a.hasInvolution() && theta[a.neg(x)] != theta[a.neg(y)])
                throw Error(ErrorKind::InternalInvariantViolation, "Leibniz relation not compatible with ~");
            for (Elem z = 0; z < n; ++z) {
                const bool ok = theta[a.fuse(x, z)] == theta[a.fuse(y, z)] &&
                                theta[a.resid(x, z)] == theta[a.resid(y, z)] &&
                                theta[a.resid(z, x)] == theta[a.resid(z, y)] &&
                                theta[a.meet(x, z)] == theta[a.meet(y, z)] &&
                                theta[a.join(x, z)] == theta[a.join(y, z)];
                if (!ok)
                    throw Error(ErrorKind::InternalInvariantViolation, "Leibniz relation is not compatible");
            }
        }
    return theta;
}

Filter filterOfCongruence(const FiniteAlgebra& a, const Congruence& theta) {
    Filter out;
    for (Elem x = 0; x < a.size(); ++x)
        if (theta[a.meet(x, a.e())] == theta[a.e()]) out.push_back(x);
    return out;
}

Quotient quotientByCongruence(const FiniteAlgebra& a, const Congruence& theta) {
    const int n = a.size();
    const int m = *std::max_element(theta.begin(), theta.end()) + 1;
    std::vector<Elem> least(m, -1);
    for (Elem x = 0; x < n; ++x)
        if (least[theta[x]] < 0) least[theta[x]] = x;
    RawTables raw;
    raw.size = m;
    raw.le.assign(m, std::vector<int>(m, 0));
    raw.fusion.assign(m, std::vector<Elem>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Elem x = least[i], y = least[j];
            // x/G <= y/G iff (x/\y) theta x
            raw.le[i][j] = theta[a.meet(x, y)] == i ? 1 : 0;
            raw.fusion[i][j] = theta[a.fuse(x, y)];
        }
    raw.e = theta[a.e()];
    if (a.hasInvolution()) {
        std::vector<Elem> ng(m);
        for (int i = 0; i < m; ++i) ng[i] = theta[a.neg(least[i])];
        raw.neg = std::move(ng);
    }
    std::vector<std::string> labels;
    if (a.hasLabels())
        for (Elem x : least) labels.push_back(a.label(x));
    return {FiniteAlgebra::validate(std::move(raw), std::move(labels)), ElementMap(theta.begin(), theta.end())};
}

Quotient quotient(const FiniteAlgebra& a, const Filter& g) {
    Quotient q = quotientByCongruence(a, leibniz(a, g));
    const std::vector<char> in = toMask(a, g);
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (q.algebra.le(q.map[x], q.map[y]) != static_cast<bool>(in[a.resid(x, y)]))
                throw Error(ErrorKind::InternalInvariantViolation, "quotient order disagrees with the filter");
    return q;
}

std::vector<Congruence> congruenceLattice(const FiniteAlgebra& a) {
    std::vector<Congruence> out;
    for (const Filter& g : deductiveFilters(a)) out.push_back(leibniz(a, g));
    return out;
}

std::vector<Filter> primeFilters(const FiniteAlgebra& a) {
    std::vector<Filter> out;
    for (const Filter& g : deductiveFilters(a)) {
        if (static_cast<int>(g.size()) == a.size()) continue;
        const std::vector<char> in = toMask(a, g);
        bool prime = true;
        for (Elem x = 0; x < a.size() && prime; ++x)
            for (Elem y = 0; y < a.size() && prime; ++y)
                if (!in[x] && !in[y] && in[a.join(x, y)]) prime = false;
        if (prime) out.push_back(g);
    }
    return out;
}

int depth(const FiniteAlgebra& a) {
    const std::vector<Filter> ps = primeFilters(a);
    if (ps.empty()) return 0;
    // Sorted by size, so strict supersets come later.
    std::vector<int> longest(ps.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (ps[j].size() < ps[i].size() && isSubset(ps[j], ps[i])) {
                longest[i] = std::max(longest[i], longest[j] + 1);
                best = std::max(best, longest[i]);
            }
    return best;
}

bool identityMeetIrreducible(const FiniteAlgebra& a) {
    const std::vector<Filter> fs = deductiveFilters(a);
    const Filter& least = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        for (std::size_t j = i; j < fs.size(); ++j) {
            Filter both;
            std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(),
                                  std::back_inserter(both));
            if (both == least) return false;
        }
    return true;
}

} // namespace dmm
