#include "arrtop/sign.hpp"

#include <algorithm>
#include <set>

namespace arrtop {

static void require_same_size(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size())
        fail(ErrorKind::Invalid, "sign vectors of different length");
}

SignVector opposite(const SignVector& x) {
    std::string s = x.str();
    for (char& c : s) {
        if (c == '+') c = '-';
        else if (c == '-') c = '+';
    }
    return SignVector(s);
}

SignVector compose(const SignVector& x, const SignVector& y) {
    require_same_size(x, y);
    std::string s = x.str();
    const std::string& t = y.str();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '0') s[i] = t[i];
    return SignVector(s);
}

std::vector<std::size_t> separation(const SignVector& x, const SignVector& y) {
    require_same_size(x, y);
    std::vector<std::size_t> sep;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Sign a = x[i], b = y[i];
        if (a != Sign::zero && b == sign_opposite(a)) sep.push_back(i);
    }
    return sep;
}

bool sign_leq(const SignVector& x, const SignVector& y) {
    require_same_size(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != Sign::zero && x[i] != y[i]) return false;
    return true;
}

AxiomReport check_covector_axioms(const std::vector<SignVector>& covectors) {
    AxiomReport rep;
    if (covectors.empty()) {
        rep.witness = "empty covector set";
        return rep;
    }
    std::size_t n = covectors.front().size();
    for (const SignVector& x : covectors)
        if (x.size() != n)
            fail(ErrorKind::Invalid, "covector set mixes lengths");

    std::set<SignVector> in(covectors.begin(), covectors.end());
    auto member = [&](const SignVector& v) { return in.count(v) != 0; };

    rep.l0 = member(SignVector::zero(n));
    if (!rep.l0) { rep.witness = "L0: zero covector missing"; return rep; }

    rep.l1 = true;
    for (const SignVector& x : covectors) {
        if (!member(opposite(x))) {
            rep.l1 = false;
            rep.witness = "L1: opposite of " + x.str() + " missing";
            return rep;
        }
    }

    rep.l2 = true;
    for (const SignVector& x : covectors) {
        for (const SignVector& y : covectors) {
            if (!member(compose(x, y))) {
                rep.l2 = false;
                rep.witness = "L2: " + x.str() + " o " + y.str() + " = " +
                              compose(x, y).str() + " missing";
                return rep;
            }
        }
    }

    // L3: for every i separating X from Y there is Z in L vanishing at i and
    // agreeing with X o Y away from S(X, Y).
    rep.l3 = true;
    for (const SignVector& x : covectors) {
        for (const SignVector& y : covectors) {
            std::vector<std::size_t> sep = separation(x, y);
            if (sep.empty()) continue;
            SignVector xy = compose(x, y);
            std::vector<bool> in_sep(n, false);
            for (std::size_t i : sep) in_sep[i] = true;
            for (std::size_t i : sep) {
                bool found = false;
                for (const SignVector& z : covectors) {
                    if (z[i] != Sign::zero) continue;
                    bool ok = true;
                    for (std::size_t j = 0; j < n && ok; ++j)
                        if (!in_sep[j] && z[j] != xy[j]) ok = false;
                    if (ok) { found = true; break; }
                }
                if (!found) {
                    rep.l3 = false;
                    rep.witness = "L3: no eliminator for " + x.str() + ", " +
                                  y.str() + " at position " + std::to_string(i + 1);
                    return rep;
                }
            }
        }
    }
    return rep;
}

ChainStats longest_chain(const std::vector<SignVector>& covectors) {
    // Longest path in the strict-order DAG; elements sorted so that any strict
    // predecessor has strictly fewer nonzero entries or smaller string, which a
    // topological sweep over all pairs handles at desk scale.
    std::size_t m = covectors.size();
    std::vector<std::size_t> depth(m, 0);
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    auto nonzeros = [&](std::size_t i) {
        return covectors[i].size() - covectors[i].zero_set().size();
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return nonzeros(a) < nonzeros(b);
    });
    ChainStats stats;
    if (m == 0) return stats;
    stats.rank_elements = 1;
    for (std::size_t oi = 0; oi < m; ++oi) {
        std::size_t i = order[oi];
        for (std::size_t oj = 0; oj < oi; ++oj) {
            std::size_t j = order[oj];
            if (covectors[j] == covectors[i]) continue;
            if (sign_leq(covectors[j], covectors[i]))
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        stats.rank_edges = std::max(stats.rank_edges, depth[i]);
    }
    stats.rank_elements = stats.rank_edges + 1;
    return stats;
}

bool complex_sign_leq(ComplexSign a, ComplexSign b) {
    if (a == b) return true;
    if (a == ComplexSign::zero) return true;
    bool a_real = a == ComplexSign::plus || a == ComplexSign::minus;
    bool b_top = b == ComplexSign::im || b == ComplexSign::neg_im;
    return a_real && b_top;
}

bool complex_sign_leq(const ComplexSignVector& x, const ComplexSignVector& y) {
    if (x.size() != y.size())
        fail(ErrorKind::Invalid, "complex sign vectors of different length");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!complex_sign_leq(x[i], y[i])) return false;
    return true;
}

} // namespace arrtop
