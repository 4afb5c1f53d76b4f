#ifndef ARRTOP_POSET_HPP
#define ARRTOP_POSET_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/error.hpp"

namespace arrtop {

// A finite poset on elements 0..n-1, stored as the full reflexive leq
// relation.  Construction validates reflexivity, antisymmetry and
// transitivity; everything downstream may then trust the matrix.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

    static Poset from_predicate(std::vector<std::string> labels,
                                const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    bool lt(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }

    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    std::vector<std::size_t> strict_downset(std::size_t i) const;

    // Induced subposet; elements keep the order of the index list.
    Poset restricted(const std::vector<std::size_t>& elements) const;

    // Length statistics of a longest chain.
    std::size_t height_edges() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

// Exact isomorphism test by invariant-pruned backtracking; meant for the
// desk-scale posets in this library, not for large instances.
bool poset_isomorphic(const Poset& p, const Poset& q);

} // namespace arrtop

#endif
