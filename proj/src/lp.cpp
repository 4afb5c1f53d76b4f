#include "arrtop/lp.hpp"

#include <algorithm>
#include <set>

namespace arrtop {

namespace {

// Rows are stored as (a_0 .. a_{k-1} | c) with meaning  a . x >= c.  Scaling
// to a primitive integer vector (positive factor only) makes duplicates
// visible to the set-based dedup below, which is what keeps elimination from
// blowing up on arrangement-sized systems.
using Row = std::vector<Rat>;

Row normalized(Row r) {
    Int den_lcm = 1;
    for (const Rat& x : r) den_lcm = lcm(den_lcm, Int(denominator(x)));
    Int num_gcd = 0;
    for (Rat& x : r) {
        x *= Rat(den_lcm);
        num_gcd = gcd(num_gcd, Int(numerator(x)));
    }
    if (num_gcd > 1)
        for (Rat& x : r) x /= Rat(num_gcd);
    return r;
}

} // namespace

std::optional<RatVec> feasible_point(std::vector<GeConstraint> constraints,
                                     std::size_t nvars) {
    std::set<Row> rows;
    for (GeConstraint& g : constraints) {
        if (g.a.size() != nvars)
            fail(ErrorKind::Invalid, "constraint arity mismatch");
        Row r = std::move(g.a);
        r.push_back(-g.c);  // store as (a | -c), i.e. a . x + last >= 0
        rows.insert(normalized(std::move(r)));
    }

    // stages[k] holds the lower/upper bound rows for x_k in terms of x_0..x_{k-1}.
    std::vector<std::pair<std::vector<Row>, std::vector<Row>>> stages(nvars);

    for (std::size_t k = nvars; k-- > 0;) {
        std::vector<Row> lower, upper;
        std::set<Row> rest;
        for (const Row& r : rows) {
            if (r[k] > 0) lower.push_back(r);        // x_k >= -(rest)/r[k]
            else if (r[k] < 0) upper.push_back(r);   // x_k <= -(rest)/r[k]
            else {
                Row cut(r.begin(), r.begin() + k);
                cut.push_back(r.back());
                rest.insert(std::move(cut));
            }
        }
        for (const Row& lo : lower) {
            for (const Row& up : upper) {
                // lo[k] * up + (-up[k]) * lo eliminates x_k; both factors positive.
                Row comb(k + 1, Rat(0));
                for (std::size_t i = 0; i < k; ++i)
                    comb[i] = lo[k] * up[i] - up[k] * lo[i];
                comb[k] = lo[k] * up.back() - up[k] * lo.back();
                rest.insert(normalized(std::move(comb)));
            }
        }
        stages[k] = {std::move(lower), std::move(upper)};
        rows = std::move(rest);
    }

    for (const Row& r : rows) {
        // Only the constant is left: 0 >= -r.back() fails when r.back() < 0.
        if (r.back() < 0) return std::nullopt;
    }

    RatVec x(nvars, Rat(0));
    for (std::size_t k = 0; k < nvars; ++k) {
        auto bound_value = [&](const Row& r) -> Rat {
            Rat s = r.back();
            for (std::size_t i = 0; i < k; ++i) s += r[i] * x[i];
            return -s / r[k];
        };
        std::optional<Rat> lo, up;
        for (const Row& r : stages[k].first) {
            Rat v = bound_value(r);
            if (!lo || v > *lo) lo = v;
        }
        for (const Row& r : stages[k].second) {
            Rat v = bound_value(r);
            if (!up || v < *up) up = v;
        }
        if (lo && up) x[k] = (*lo + *up) / 2;
        else if (lo) x[k] = *lo + 1;
        else if (up) x[k] = *up - 1;
    }
    return x;
}

} // namespace arrtop
