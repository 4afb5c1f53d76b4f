#ifndef ARRTOP_SIGNED_PERM_HPP
#define ARRTOP_SIGNED_PERM_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "arrtop/error.hpp"
#include "arrtop/sign.hpp"

namespace arrtop {

// A permutation of the hyperplane indices together with one sign per source
// index.  Acting on a covector X it produces (gX)_{perm[k]} = flips[k] * X_k,
// which matches how an ambient linear symmetry relabels the sign data of a
// point.  Composition below is arranged so act(compose(g, h), X) equals
// act(g, act(h, X)).
struct SignedPermutation {
    std::vector<std::size_t> perm;
    std::vector<std::int8_t> flips;

    static SignedPermutation identity(std::size_t n) {
        SignedPermutation sp;
        sp.perm.resize(n);
        std::iota(sp.perm.begin(), sp.perm.end(), std::size_t{0});
        sp.flips.assign(n, 1);
        return sp;
    }

    std::size_t size() const { return perm.size(); }

    SignVector act(const SignVector& x) const {
        if (x.size() != perm.size())
            fail(ErrorKind::Invalid, "signed permutation arity mismatch");
        SignVector out = SignVector::zero(x.size());
        for (std::size_t k = 0; k < perm.size(); ++k) {
            Sign v = x[k];
            out.set(perm[k], flips[k] < 0 ? sign_opposite(v) : v);
        }
        return out;
    }

    friend SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
        if (g.size() != h.size())
            fail(ErrorKind::Invalid, "signed permutation arity mismatch");
        SignedPermutation out;
        out.perm.resize(g.size());
        out.flips.resize(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) {
            out.perm[k] = g.perm[h.perm[k]];
            out.flips[k] = static_cast<std::int8_t>(h.flips[k] * g.flips[h.perm[k]]);
        }
        return out;
    }

    SignedPermutation inverse() const {
        SignedPermutation out;
        out.perm.resize(size());
        out.flips.resize(size());
        for (std::size_t k = 0; k < size(); ++k) {
            out.perm[perm[k]] = k;
            out.flips[perm[k]] = flips[k];
        }
        return out;
    }

    bool is_identity() const {
        for (std::size_t k = 0; k < size(); ++k)
            if (perm[k] != k || flips[k] != 1) return false;
        return true;
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.flips < b.flips;
    }
};

} // namespace arrtop

#endif
