#include "dmm/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "dmm/classify.hpp"

namespace dmm {

namespace {

RawTables emptyTables(int n) {
    RawTables raw;
    raw.size = n;
    raw.le.assign(n, std::vector<int>(n, 0));
    raw.fusion.assign(n, std::vector<Elem>(n, 0));
    return raw;
}

// Fills le for a chain whose order is the index order.
void chainOrder(RawTables& raw) {
    for (int i = 0; i < raw.size; ++i)
        for (int j = 0; j < raw.size; ++j) raw.le[i][j] = i <= j ? 1 : 0;
}

// Elements of a chain sorted ascending.
std::vector<Elem> ascending(const FiniteAlgebra& a) {
    std::vector<Elem> xs(a.size());
    for (int i = 0; i < a.size(); ++i) xs[i] = i;
    std::sort(xs.begin(), xs.end(), [&](Elem x, Elem y) { return a.lt(x, y); });
    return xs;
}

} // namespace

FiniteAlgebra trivialAlgebra(bool involutive) {
    RawTables raw = emptyTables(1);
    raw.le[0][0] = 1;
    raw.name = involutive ? "trivial" : "trivial+";
    if (involutive) raw.neg = std::vector<Elem>{0};
    return FiniteAlgebra::validate(std::move(raw), {"e"});
}

FiniteAlgebra sugihara(int n) {
    if (n < 1) throw Error(ErrorKind::BadInput, "sugihara needs n >= 1");
    std::vector<int> values;
    const int m = n / 2;
    for (int v = -m; v <= m; ++v)
        if (v != 0 || n % 2 == 1) values.push_back(v);
    RawTables raw = emptyTables(n);
    raw.name = "S" + std::to_string(n);
    chainOrder(raw);
    auto indexOf = [&](int v) { return static_cast<Elem>(std::find(values.begin(), values.end(), v) - values.begin()); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int a = values[i], b = values[j];
            int prod;
            if (std::abs(a) != std::abs(b))
                prod = std::abs(a) > std::abs(b) ? a : b;
            else
                prod = std::min(a, b);
            raw.fusion[i][j] = indexOf(prod);
        }
    raw.e = indexOf(n % 2 == 1 ? 0 : 1);
    std::vector<Elem> ng(n);
    for (int i = 0; i < n; ++i) ng[i] = indexOf(-values[i]);
    raw.neg = std::move(ng);
    std::vector<std::string> labels;
    for (int v : values) labels.push_back(std::to_string(v));
    return FiniteAlgebra::validate(std::move(raw), std::move(labels));
}

OtimesResult otimesWithPoints(const ChainFamilySpec& spec) {
    const FiniteAlgebra& s = spec.base;
    if (!isOddSugiharaChain(s)) throw Error(ErrorKind::SpecInvalid, "base must be a totally ordered odd Sugihara monoid");
    if (static_cast<int>(spec.sizes.size()) != s.size())
        throw Error(ErrorKind::SpecInvalid, "one block size per base element is required");
    for (int k : spec.sizes)
        if (k < 1) throw Error(ErrorKind::SpecInvalid, "block sizes must be at least 1");

    std::vector<OtimesPoint> points;
    for (Elem c : ascending(s))
        for (int d = spec.sizes[c] - 1; d >= 0; --d) points.push_back({c, d});
    const int n = static_cast<int>(points.size());
    auto indexOf = [&](Elem c, int depth) {
        for (int i = 0; i < n; ++i)
            if (points[i].base == c && points[i].depth == depth) return i;
        throw Error(ErrorKind::InternalInvariantViolation, "missing point");
    };
    const Elem e = s.e();

    RawTables raw = emptyTables(n);
    chainOrder(raw);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Elem a = points[x].base, b = points[y].base;
            Elem out;
            if (a == b)
                out = s.le(a, e) ? std::min(x, y) : std::max(x, y);
            else
                out = s.fuse(a, b) == a ? x : y;
            raw.fusion[x][y] = out;
        }
    raw.e = indexOf(e, 0);

    std::vector<std::string> labels;
    for (const OtimesPoint& p : points) {
        const std::string base = s.label(p.base);
        labels.push_back(p.depth == 0 ? base : base + "_" + std::to_string(p.depth));
    }
    FiniteAlgebra out = FiniteAlgebra::validate(std::move(raw), std::move(labels));

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Elem aStar = indexOf(s.star(points[x].base), 0);
            const Elem expected = x <= y ? std::max(aStar, y) : std::min(aStar, y);
            if (out.resid(x, y) != expected)
                throw Error(ErrorKind::InternalInvariantViolation, "derived residual disagrees with the case formula");
        }
    return {std::move(out), std::move(points)};
}

FiniteAlgebra otimes(const ChainFamilySpec& spec) { return otimesWithPoints(spec).algebra; }

FiniteAlgebra oplus(int k) {
    if (k < 1) throw Error(ErrorKind::BadInput, "oplus needs k >= 1");
    const FiniteAlgebra s3 = sugihara(3);
    FiniteAlgebra a = otimes({s3, {1, 1, k}});
    std::vector<std::string> labels{"-1", "0"};
    for (int d = k - 1; d >= 1; --d) labels.push_back(std::string(1, static_cast<char>('c' + d - 1)));
    labels.push_back("1");
    return a.withLabels(std::move(labels)).withName("S3o" + std::to_string(k));
}

FiniteAlgebra reflection(const FiniteAlgebra& d) {
    if (!isDunnMonoid(d)) throw Error(ErrorKind::NotADunnMonoid, "reflection needs a Dunn monoid");
    const int n = d.size();
    const int m = 2 * n + 2;
    const Elem zero = 2 * n, one = 2 * n + 1;
    auto prime = [n](Elem a) { return n + a; };
    auto isD = [n](Elem x) { return x < n; };
    auto isPrime = [n](Elem x) { return x >= n && x < 2 * n; };

    RawTables raw = emptyTables(m);
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
            bool le;
            if (x == zero || y == one) le = true;
            else if (x == one || y == zero) le = false;
            else if (isD(x) && isD(y)) le = d.le(x, y);
            else if (isD(x)) le = true;
            else if (isD(y)) le = false;
            else le = d.le(y - n, x - n);
            raw.le[x][y] = le ? 1 : 0;
        }
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
            Elem out;
            if (x == zero || y == zero) out = zero;
            else if (x == one || y == one) out = one;
            else if (isD(x) && isD(y)) out = d.fuse(x, y);
            else if (isPrime(x) && isPrime(y)) out = one;
            else if (isD(x)) out = prime(d.resid(x, y - n));
            else out = prime(d.resid(y, x - n));
            raw.fusion[x][y] = out;
        }
    raw.e = d.e();
    std::vector<Elem> ng(m);
    for (Elem a = 0; a < n; ++a) {
        ng[a] = prime(a);
        ng[prime(a)] = a;
    }
    ng[zero] = one;
    ng[one] = zero;
    raw.neg = std::move(ng);
    raw.name = "R(" + d.name().value_or("D") + ")";

    std::vector<std::string> labels;
    for (Elem a = 0; a < n; ++a) labels.push_back(d.label(a));
    for (Elem a = 0; a < n; ++a) labels.push_back(d.label(a) + "'");
    labels.push_back("zero");
    labels.push_back("one");
    return FiniteAlgebra::validate(std::move(raw), std::move(labels));
}

bool oddIrreducibilityHolds(const FiniteAlgebra& s) {
    const Elem e = s.e();
    for (Elem x = 0; x < s.size(); ++x) {
        if (s.hasInvolution() && s.neg(x) == e && x != e) return false;
        for (Elem y = 0; y < s.size(); ++y) {
            if (x == e || y == e) continue;
            if (s.fuse(x, y) == e || s.meet(x, y) == e || s.join(x, y) == e) return false;
        }
    }
    return true;
}

RigorousExtension rigorousExtensionWithMaps(const FiniteAlgebra& s, const FiniteAlgebra& a) {
    if (!s.hasInvolution() || !isOddSugiharaChain(s) || !oddIrreducibilityHolds(s))
        throw Error(ErrorKind::NotOddSugihara, "S must be a totally ordered odd Sugihara monoid");
    if (!isDeMorganMonoid(a)) throw Error(ErrorKind::NotDeMorgan, "A must be a De Morgan monoid");
    const Elem es = s.e();

    std::vector<Elem> below, above;
    for (Elem x : ascending(s)) {
        if (s.lt(x, es)) below.push_back(x);
        if (s.lt(es, x)) above.push_back(x);
    }
    const int nb = static_cast<int>(below.size());
    const int na = a.size();
    const int m = nb + na + static_cast<int>(above.size());

    RigorousExtension out{trivialAlgebra(true), ElementMap(na), std::vector<Elem>(s.size(), -1)};
    std::vector<Elem> sOf(m, -1); // element of S for new indices outside A
    for (int i = 0; i < nb; ++i) {
        out.fromS[below[i]] = i;
        sOf[i] = below[i];
    }
    for (Elem x = 0; x < na; ++x) out.fromA[x] = nb + x;
    for (std::size_t i = 0; i < above.size(); ++i) {
        out.fromS[above[i]] = nb + na + static_cast<int>(i);
        sOf[nb + na + i] = above[i];
    }
    auto inA = [&](Elem x) { return x >= nb && x < nb + na; };

    // Mixed case for a binary operation: a op s = a if (e op s) = e, else e op s.
    auto combine = [&](Elem x, Elem y, auto opS, auto opA) -> Elem {
        if (inA(x) && inA(y)) return nb + opA(x - nb, y - nb);
        if (!inA(x) && !inA(y)) return out.fromS[opS(sOf[x], sOf[y])];
        const Elem sv = inA(x) ? sOf[y] : sOf[x];
        const Elem av = inA(x) ? x : y;
        const Elem r = opS(es, sv);
        return r == es ? av : out.fromS[r];
    };

    RawTables raw = emptyTables(m);
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) {
            const Elem mt = combine(
                x, y, [&](Elem p, Elem q) { return s.meet(p, q); }, [&](Elem p, Elem q) { return a.meet(p, q); });
            raw.le[x][y] = mt == x ? 1 : 0;
            raw.fusion[x][y] = combine(
                x, y, [&](Elem p, Elem q) { return s.fuse(p, q); }, [&](Elem p, Elem q) { return a.fuse(p, q); });
        }
    raw.e = nb + a.e();
    std::vector<Elem> ng(m);
    for (Elem x = 0; x < m; ++x) ng[x] = inA(x) ? nb + a.neg(x - nb) : out.fromS[s.neg(sOf[x])];
    raw.neg = std::move(ng);
    raw.name = s.name().value_or("S") + "[" + a.name().value_or("A") + "]";

    std::vector<std::string> labels;
    for (Elem x = 0; x < m; ++x) labels.push_back(inA(x) ? a.label(x - nb) : s.label(sOf[x]));
    out.algebra = FiniteAlgebra::validate(std::move(raw), std::move(labels));
    if (!isDeMorganMonoid(out.algebra))
        throw Error(ErrorKind::InternalInvariantViolation, "rigorous extension is not a De Morgan monoid");
    return out;
}

FiniteAlgebra rigorousExtension(const FiniteAlgebra& s, const FiniteAlgebra& a) {
    return rigorousExtensionWithMaps(s, a).algebra;
}

FiniteAlgebra apFamily(int p) {
    if (p < 1) throw Error(ErrorKind::BadInput, "A_p needs p >= 1");
    if (p > 60) throw Error(ErrorKind::BadInput, "A_p supports p <= 60");
    const int n = p + 3;
    std::vector<std::uint64_t> values{0};
    for (int k = 0; k <= p + 1; ++k) values.push_back(std::uint64_t{1} << k);
    const std::uint64_t cap = values.back();
    auto indexOf = [&](std::uint64_t v) {
        return static_cast<Elem>(std::find(values.begin(), values.end(), v) - values.begin());
    };
    RawTables raw = emptyTables(n);
    chainOrder(raw);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::uint64_t a = values[i], b = values[j];
            std::uint64_t prod;
            if (a == 0 || b == 0) prod = 0;
            else if (a >= cap || b >= cap || a > cap / b) prod = cap;
            else prod = std::min(cap, a * b);
            raw.fusion[i][j] = indexOf(prod);
        }
    raw.e = apIndexOfPower(0);
    std::vector<Elem> ng(n);
    ng[0] = apIndexOfPower(p + 1);
    ng[apIndexOfPower(p + 1)] = 0;
    for (int k = 0; k <= p; ++k) ng[apIndexOfPower(k)] = apIndexOfPower(p - k);
    raw.neg = std::move(ng);
    raw.name = "A" + std::to_string(p);
    std::vector<std::string> labels;
    for (std::uint64_t v : values) labels.push_back(std::to_string(v));
    return FiniteAlgebra::validate(std::move(raw), std::move(labels));
}

FiniteAlgebra apPlus(int p) {
    RawTables raw = apFamily(p).raw();
    const std::vector<std::string> labels = apFamily(p).labels();
    raw.neg.reset();
    raw.name = "A" + std::to_string(p) + "+";
    return FiniteAlgebra::validate(std::move(raw), labels);
}

FiniteAlgebra namedAlgebra(const std::string& key) {
    if (key == "2") {
        RawTables raw = emptyTables(2);
        chainOrder(raw);
        raw.fusion = {{0, 0}, {0, 1}};
        raw.e = 1;
        raw.neg = std::vector<Elem>{1, 0};
        raw.name = "2";
        return FiniteAlgebra::validate(std::move(raw), {"0", "1"});
    }
    if (key == "2+") {
        RawTables raw = emptyTables(2);
        chainOrder(raw);
        raw.fusion = {{0, 0}, {0, 1}};
        raw.e = 1;
        raw.name = "2+";
        return FiniteAlgebra::validate(std::move(raw), {"bot", "e"});
    }
    if (key == "C4") {
        // ~f^2 < e < f < f^2
        RawTables raw = emptyTables(4);
        chainOrder(raw);
        raw.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
        raw.e = 1;
        raw.neg = std::vector<Elem>{3, 2, 1, 0};
        raw.name = "C4";
        return FiniteAlgebra::validate(std::move(raw), {"~f^2", "e", "f", "f^2"});
    }
    if (key == "D4") {
        // bot < e, f < top with e, f incomparable
        RawTables raw = emptyTables(4);
        raw.le = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
        raw.fusion = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 3}, {0, 3, 3, 3}};
        raw.e = 1;
        raw.neg = std::vector<Elem>{3, 2, 1, 0};
        raw.name = "D4";
        return FiniteAlgebra::validate(std::move(raw), {"~f^2", "e", "f", "f^2"});
    }
    if (key == "RS3") {
        RawTables raw = emptyTables(3);
        chainOrder(raw);
        raw.fusion = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
        raw.e = 2;
        raw.name = "RS3";
        return FiniteAlgebra::validate(std::move(raw), {"bot", "a", "e"});
    }
    throw Error(ErrorKind::BadInput, "unknown named algebra '" + key + "'");
}

std::vector<std::string> namedAlgebraKeys() { return {"2", "2+", "C4", "D4", "RS3"}; }

const std::vector<std::pair<std::string, FiniteAlgebra>>& goldenCorpus() {
    static const std::vector<std::pair<std::string, FiniteAlgebra>> corpus = [] {
        std::vector<std::pair<std::string, FiniteAlgebra>> c;
        auto add = [&](const std::string& key, const FiniteAlgebra& a) { c.emplace_back(key, a.withName(key)); };
        add("2", namedAlgebra("2"));
        add("2+", namedAlgebra("2+"));
        add("C4", namedAlgebra("C4"));
        add("D4", namedAlgebra("D4"));
        for (int n = 2; n <= 7; ++n) add("S" + std::to_string(n), sugihara(n));
        add("S3o2", oplus(2));
        add("S3o3", oplus(3));
        add("A2", apFamily(2));
        add("A3", apFamily(3));
        add("A5", apFamily(5));
        add("A2+", apPlus(2));
        add("A3+", apPlus(3));
        add("A4+", apPlus(4));
        add("R(2+)", reflection(namedAlgebra("2+")));
        add("S3[C4]", rigorousExtension(sugihara(3), namedAlgebra("C4")));
        add("RS3", namedAlgebra("RS3"));
        return c;
    }();
    return corpus;
}

const FiniteAlgebra& corpusAlgebra(const std::string& key) {
    for (const auto& [k, a] : goldenCorpus())
        if (k == key) return a;
    throw Error(ErrorKind::BadInput, "unknown corpus key '" + key + "'");
}

} // namespace dmm
