#include "arrtop/poset.hpp"

#include <algorithm>
#include <map>

namespace arrtop {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
    std::size_t n = labels_.size();
    if (leq_.size() != n)
        fail(ErrorKind::Invalid, "poset relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (leq_[i].size() != n)
            fail(ErrorKind::Invalid, "poset relation size mismatch");
        if (!leq_[i][i])
            fail(ErrorKind::Invalid, "poset relation is not reflexive");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_[i][j] && leq_[j][i])
                fail(ErrorKind::Invalid, "poset relation is not antisymmetric at " +
                                             labels_[i] + ", " + labels_[j]);
            if (leq_[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (leq_[j][k] && !leq_[i][k])
                        fail(ErrorKind::Invalid, "poset relation is not transitive at " +
                                                     labels_[i] + ", " + labels_[j] + ", " +
                                                     labels_[k]);
        }
}

Poset Poset::from_predicate(std::vector<std::string> labels,
                            const std::function<bool(std::size_t, std::size_t)>& leq) {
    std::size_t n = labels.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(i, j);
    return Poset(std::move(labels), std::move(rel));
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (lt(i, k) && lt(k, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

std::vector<std::size_t> Poset::strict_downset(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (lt(j, i)) out.push_back(j);
    return out;
}

Poset Poset::restricted(const std::vector<std::size_t>& elements) const {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (std::size_t e : elements) labels.push_back(labels_[e]);
    std::vector<std::vector<bool>> rel(elements.size(), std::vector<bool>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            rel[i][j] = leq_[elements[i]][elements[j]];
    return Poset(std::move(labels), std::move(rel));
}

std::size_t Poset::height_edges() const {
    std::size_t n = size();
    std::vector<std::size_t> order(n), depth(n, 0);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lt(j, i)) ++below[i];
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    std::size_t best = 0;
    for (std::size_t oi = 0; oi < n; ++oi)
        for (std::size_t oj = 0; oj < oi; ++oj) {
            std::size_t i = order[oi], j = order[oj];
            if (lt(j, i)) depth[i] = std::max(depth[i], depth[j] + 1);
        }
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, depth[i]);
    return best;
}

namespace {

struct IsoInvariant {
    std::size_t down, up, covers_down, covers_up;
    friend bool operator==(const IsoInvariant&, const IsoInvariant&) = default;
    friend auto operator<=>(const IsoInvariant&, const IsoInvariant&) = default;
};

std::vector<IsoInvariant> invariants(const Poset& p) {
    std::size_t n = p.size();
    std::vector<IsoInvariant> inv(n, IsoInvariant{0, 0, 0, 0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.lt(j, i)) ++inv[i].down;
            if (p.lt(i, j)) ++inv[i].up;
        }
    for (auto [lo, hi] : p.covers()) {
        ++inv[hi].covers_down;
        ++inv[lo].covers_up;
    }
    return inv;
}

bool extend(const Poset& p, const Poset& q, const std::vector<IsoInvariant>& pi,
            const std::vector<IsoInvariant>& qi, std::vector<std::ptrdiff_t>& img,
            std::vector<bool>& used, std::size_t next) {
    std::size_t n = p.size();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || !(pi[next] == qi[cand])) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev) {
            std::size_t pc = static_cast<std::size_t>(img[prev]);
            if (p.leq(prev, next) != q.leq(pc, cand)) ok = false;
            if (p.leq(next, prev) != q.leq(cand, pc)) ok = false;
        }
        if (!ok) continue;
        img[next] = static_cast<std::ptrdiff_t>(cand);
        used[cand] = true;
        if (extend(p, q, pi, qi, img, used, next + 1)) return true;
        used[cand] = false;
        img[next] = -1;
    }
    return false;
}

} // namespace

bool poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    std::vector<IsoInvariant> pi = invariants(p), qi = invariants(q);
    std::vector<IsoInvariant> ps = pi, qs = qi;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return false;
    std::vector<std::ptrdiff_t> img(p.size(), -1);
    std::vector<bool> used(p.size(), false);
    return extend(p, q, pi, qi, img, used, 0);
}

} // namespace arrtop
