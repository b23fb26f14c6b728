#include "dmm/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace dmm {

namespace {

using Key = std::array<int, 6>;

Key invariantKey(const FiniteAlgebra& a, Elem x) {
    int below = 0, above = 0;
    for (Elem y = 0; y < a.size(); ++y) {
        below += a.le(y, x) ? 1 : 0;
        above += a.le(x, y) ? 1 : 0;
    }
    const int fixedByNeg = a.hasInvolution() && a.neg(x) == x ? 1 : 0;
    return {below, above, x == a.e() ? 1 : 0, a.fuse(x, x) == x ? 1 : 0,
            a.le(x, a.e()) ? 1 : 0, fixedByNeg};
}

class IsoSearch {
public:
    IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b) : a_(a), b_(b), map_(a.size(), -1), used_(b.size(), 0) {
        for (Elem x = 0; x < a.size(); ++x) keyA_.push_back(invariantKey(a, x));
        for (Elem y = 0; y < b.size(); ++y) keyB_.push_back(invariantKey(b, y));
    }

    std::optional<ElementMap> run() {
        std::vector<Key> sa = keyA_, sb = keyB_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool consistent(Elem x) const {
        const Elem hx = map_[x];
        for (Elem y = 0; y <= x; ++y) {
            const Elem hy = map_[y];
            if (a_.le(x, y) != b_.le(hx, hy) || a_.le(y, x) != b_.le(hy, hx)) return false;
            const Elem p = a_.fuse(x, y);
            if (map_[p] >= 0 && map_[p] != b_.fuse(hx, hy)) return false;
            const Elem r1 = a_.resid(x, y), r2 = a_.resid(y, x);
            if (map_[r1] >= 0 && map_[r1] != b_.resid(hx, hy)) return false;
            if (map_[r2] >= 0 && map_[r2] != b_.resid(hy, hx)) return false;
        }
        if (a_.hasInvolution()) {
            const Elem nx = a_.neg(x);
            if (map_[nx] >= 0 && map_[nx] != b_.neg(hx)) return false;
        }
        return true;
    }

    bool extend(Elem x) {
        if (x == a_.size()) return true;
        for (Elem y = 0; y < b_.size(); ++y) {
            if (used_[y] || keyA_[x] != keyB_[y]) continue;
            map_[x] = y;
            used_[y] = 1;
            if (consistent(x) && extend(x + 1)) return true;
            used_[y] = 0;
            map_[x] = -1;
        }
        return false;
    }

    const FiniteAlgebra& a_;
    const FiniteAlgebra& b_;
    std::vector<Key> keyA_, keyB_;
    ElementMap map_;
    std::vector<char> used_;
};

// Encoding of a relabeled copy: pos[x] is the new index of x, inv its inverse.
std::vector<int> encode(const FiniteAlgebra& a, const std::vector<int>& pos, const std::vector<int>& inv) {
    const int n = a.size();
    std::vector<int> code;
    code.reserve(2 * n * n + n + 2);
    code.push_back(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code.push_back(a.le(inv[i], inv[j]) ? 1 : 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code.push_back(pos[a.fuse(inv[i], inv[j])]);
    code.push_back(pos[a.e()]);
    if (a.hasInvolution())
        for (int i = 0; i < n; ++i) code.push_back(pos[a.neg(inv[i])]);
    else
        code.push_back(-1);
    return code;
}

std::vector<int> canonicalOrder(const FiniteAlgebra& a) {
    const int n = a.size();
    std::vector<Key> keys;
    for (Elem x = 0; x < n; ++x) keys.push_back(invariantKey(a, x));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });

    // Cells of equal keys are permuted independently; take the least code.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && keys[order[j]] == keys[order[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }
    std::vector<int> best;
    std::vector<int> bestOrder;
    std::vector<int> current = order;
    auto evaluate = [&]() {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[current[i]] = i;
        std::vector<int> code = encode(a, pos, current);
        if (best.empty() || code < best) {
            best = std::move(code);
            bestOrder = current;
        }
    };
    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(current.begin() + lo, current.begin() + hi);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(current.begin() + lo, current.begin() + hi));
    };
    recurse(recurse, 0);
    return bestOrder;
}

} // namespace

std::optional<ElementMap> isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.size() != b.size() || a.hasInvolution() != b.hasInvolution()) return std::nullopt;
    return IsoSearch(a, b).run();
}

std::vector<int> canonicalCode(const FiniteAlgebra& a) {
    const std::vector<int> order = canonicalOrder(a);
    std::vector<int> pos(a.size());
    for (int i = 0; i < a.size(); ++i) pos[order[i]] = i;
    return encode(a, pos, order);
}

FiniteAlgebra canonicalForm(const FiniteAlgebra& a) {
    const std::vector<int> order = canonicalOrder(a);
    const int n = a.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    RawTables raw;
    raw.name = a.name();
    raw.size = n;
    raw.le.assign(n, std::vector<int>(n, 0));
    raw.fusion.assign(n, std::vector<Elem>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            raw.le[i][j] = a.le(order[i], order[j]) ? 1 : 0;
            raw.fusion[i][j] = pos[a.fuse(order[i], order[j])];
        }
    raw.e = pos[a.e()];
    if (a.hasInvolution()) {
        std::vector<Elem> ng(n);
        for (int i = 0; i < n; ++i) ng[i] = pos[a.neg(order[i])];
        raw.neg = std::move(ng);
    }
    std::vector<std::string> labels;
    if (a.hasLabels())
        for (int i = 0; i < n; ++i) labels.push_back(a.label(order[i]));
    return FiniteAlgebra::validate(std::move(raw), std::move(labels));
}

} // namespace dmm
