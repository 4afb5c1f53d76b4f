#include "arrtop/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrtop {

AbstractSimplicialComplex AbstractSimplicialComplex::from_simplices(
    std::size_t vertex_count, std::vector<std::vector<std::size_t>> simplices,
    std::vector<std::string> vertex_labels) {
    AbstractSimplicialComplex k;
    k.vertex_count_ = vertex_count;
    if (vertex_labels.empty()) {
        for (std::size_t v = 0; v < vertex_count; ++v)
            vertex_labels.push_back("v" + std::to_string(v + 1));
    }
    if (vertex_labels.size() != vertex_count)
        fail(ErrorKind::Invalid, "vertex label count mismatch");
    k.vertex_labels_ = std::move(vertex_labels);

    std::set<std::vector<std::size_t>> seen;
    for (std::vector<std::size_t>& s : simplices) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorKind::Invalid, "simplex with repeated vertex");
        if (s.empty())
            fail(ErrorKind::Invalid, "empty simplex");
        if (s.back() >= vertex_count)
            fail(ErrorKind::Invalid, "simplex vertex out of range");
        seen.insert(std::move(s));
    }
    for (const std::vector<std::size_t>& s : seen) {
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet.push_back(s[i]);
            if (!seen.count(facet))
                fail(ErrorKind::Invalid, "simplex set is not downward closed");
        }
    }
    k.simplices_.assign(seen.begin(), seen.end());
    std::sort(k.simplices_.begin(), k.simplices_.end(),
              [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return k;
}

std::size_t AbstractSimplicialComplex::dimension() const {
    std::size_t d = 0;
    for (const auto& s : simplices_) d = std::max(d, s.size() - 1);
    return d;
}

std::vector<std::size_t> AbstractSimplicialComplex::counts_by_dim() const {
    std::vector<std::size_t> counts;
    for (const auto& s : simplices_) {
        if (s.size() > counts.size()) counts.resize(s.size(), 0);
        ++counts[s.size() - 1];
    }
    return counts;
}

AbstractSimplicialComplex order_complex(const Poset& p) {
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> chain;
    auto dfs = [&](auto&& self, std::size_t top) -> void {
        chain.push_back(top);
        std::vector<std::size_t> sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        chains.push_back(std::move(sorted));
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.lt(top, j)) self(self, j);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < p.size(); ++i) dfs(dfs, i);
    return AbstractSimplicialComplex::from_simplices(p.size(), std::move(chains), p.labels());
}

Poset simplex_poset(const AbstractSimplicialComplex& k) {
    const auto& ss = k.simplices();
    std::vector<std::string> labels;
    labels.reserve(ss.size());
    for (const auto& s : ss) {
        std::string l = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            l += (i ? "," : "") + std::to_string(s[i] + 1);
        labels.push_back(l + "}");
    }
    return Poset::from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) {
        return std::includes(ss[j].begin(), ss[j].end(), ss[i].begin(), ss[i].end());
    });
}

AbstractSimplicialComplex nerve(const std::vector<std::vector<std::size_t>>& family) {
    std::vector<std::vector<std::size_t>> sorted_family = family;
    for (auto& s : sorted_family) std::sort(s.begin(), s.end());

    std::vector<std::vector<std::size_t>> simplices;
    std::vector<std::size_t> members;
    auto dfs = [&](auto&& self, std::size_t last, const std::vector<std::size_t>& common) -> void {
        for (std::size_t j = last + 1; j < sorted_family.size(); ++j) {
            std::vector<std::size_t> next;
            std::set_intersection(common.begin(), common.end(), sorted_family[j].begin(),
                                  sorted_family[j].end(), std::back_inserter(next));
            if (next.empty()) continue;
            members.push_back(j);
            simplices.push_back(members);
            self(self, j, next);
            members.pop_back();
        }
    };
    for (std::size_t i = 0; i < sorted_family.size(); ++i) {
        if (sorted_family[i].empty()) continue;
        members.assign(1, i);
        simplices.push_back(members);
        dfs(dfs, i, sorted_family[i]);
    }
    return AbstractSimplicialComplex::from_simplices(sorted_family.size(), std::move(simplices));
}

long long euler_characteristic(const AbstractSimplicialComplex& k) {
    long long chi = 0;
    long long sign = 1;
    for (std::size_t c : k.counts_by_dim()) {
        chi += sign * static_cast<long long>(c);
        sign = -sign;
    }
    return chi;
}

ChainComplex chain_complex(const AbstractSimplicialComplex& k) {
    std::vector<std::size_t> counts = k.counts_by_dim();
    std::size_t top = counts.size();
    ChainComplex cc;
    cc.ranks = counts;
    cc.boundary.resize(top);

    // Position of each simplex within its dimension class; the simplex list
    // is already sorted by (dim, lex).
    std::map<std::vector<std::size_t>, std::size_t> pos;
    std::vector<std::size_t> next_in_dim(top, 0);
    for (const auto& s : k.simplices()) pos[s] = next_in_dim[s.size() - 1]++;

    for (std::size_t d = 1; d < top; ++d)
        cc.boundary[d].assign(counts[d - 1], std::vector<Int>(counts[d], Int(0)));
    for (const auto& s : k.simplices()) {
        std::size_t d = s.size() - 1;
        if (d == 0) continue;
        std::size_t col = pos.at(s);
        Int sgn = 1;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet.push_back(s[i]);
            cc.boundary[d][pos.at(facet)][col] = sgn;
            sgn = -sgn;
        }
    }
    return cc;
}

SmithResult smith_normal_form(IntMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    SmithResult res;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate the entry of least magnitude in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) { std::swap(m[t], m[i]); clean = false; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // Enforce divisibility of the remaining block by the pivot.
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                            clean = false;
                        }
            }
        }
        if (m[t][t] < 0)
            for (std::size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
        res.invariant_factors.push_back(m[t][t]);
        ++t;
    }
    res.rank = res.invariant_factors.size();
    return res;
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
    std::size_t top = cc.ranks.size();
    // d_k . d_{k+1} must vanish before any rank computation is meaningful.
    for (std::size_t d = 1; d + 1 < top; ++d) {
        const IntMat& a = cc.boundary[d];
        const IntMat& b = cc.boundary[d + 1];
        if (a.empty() || b.empty()) continue;
        for (std::size_t i = 0; i < cc.ranks[d - 1]; ++i)
            for (std::size_t j = 0; j < cc.ranks[d + 1]; ++j) {
                Int s = 0;
                for (std::size_t k = 0; k < cc.ranks[d]; ++k) s += a[i][k] * b[k][j];
                if (s != 0)
                    fail(ErrorKind::Invalid, "boundary of boundary is nonzero in degree " +
                                                 std::to_string(d + 1));
            }
    }
    std::vector<SmithResult> snf(top + 1);
    for (std::size_t d = 1; d < top; ++d) snf[d] = smith_normal_form(cc.boundary[d]);
    std::vector<HomologyGroup> out(top);
    for (std::size_t k = 0; k < top; ++k) {
        std::size_t rank_in = k ? snf[k].rank : 0;
        std::size_t rank_out = (k + 1 < top) ? snf[k + 1].rank : 0;
        HomologyGroup g;
        g.betti = cc.ranks[k] - rank_in - rank_out;
        if (k + 1 < top)
            for (const Int& f : snf[k + 1].invariant_factors)
                if (f > 1) g.torsion.push_back(f);
        out[k] = std::move(g);
    }
    return out;
}

std::vector<HomologyGroup> homology(const AbstractSimplicialComplex& k) {
    return homology(chain_complex(k));
}

std::vector<std::size_t> RegularCellComplexModel::counts_by_dim() const {
    std::vector<std::size_t> counts;
    for (std::size_t d : dims) {
        if (d + 1 > counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

long long RegularCellComplexModel::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += (dims[i] % 2 == 0) ? 1 : -1;
    return chi;
}

RegularCellComplexModel cell_complex_from_poset(Poset p, std::vector<std::size_t> dims) {
    if (dims.size() != p.size())
        fail(ErrorKind::Invalid, "one dimension per cell required");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.lt(i, j) && dims[i] >= dims[j])
                fail(ErrorKind::Invalid, "cell dimensions must increase strictly along the order (" +
                                             p.label(i) + " vs " + p.label(j) + ")");
    return RegularCellComplexModel{std::move(p), std::move(dims)};
}

std::vector<HomologyGroup> homology(const RegularCellComplexModel& model) {
    return homology(order_complex(model.face_poset));
}

CellModelReport validate_cell_model(const RegularCellComplexModel& model) {
    CellModelReport rep;
    for (std::size_t i = 0; i < model.dims.size(); ++i) {
        std::size_t k = model.dims[i];
        if (k == 0) continue;
        std::vector<std::size_t> below = model.face_poset.strict_downset(i);
        if (below.empty()) {
            rep.pass = false;
            rep.witness = "cell " + model.face_poset.label(i) + " has empty boundary";
            return rep;
        }
        std::vector<HomologyGroup> h = homology(order_complex(model.face_poset.restricted(below)));
        bool ok = h.size() >= 1;
        if (ok) {
            if (k == 1) {
                ok = h[0].betti == 2 && h[0].torsion.empty() && h.size() == 1;
            } else {
                ok = h.size() == k && h[0].betti == 1 && h[k - 1].betti == 1;
                for (std::size_t d = 0; d < h.size() && ok; ++d) {
                    if (!h[d].torsion.empty()) ok = false;
                    if (d > 0 && d < k - 1 && h[d].betti != 0) ok = false;
                }
            }
        }
        if (!ok) {
            rep.pass = false;
            rep.witness = "boundary of cell " + model.face_poset.label(i) +
                          " is not a homology " + std::to_string(k - 1) + "-sphere";
            return rep;
        }
    }
    return rep;
}

} // namespace arrtop
