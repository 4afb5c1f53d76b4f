#ifndef ARRTOP_GROUP_HPP
#define ARRTOP_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/salvetti.hpp"
#include "arrtop/signed_perm.hpp"

namespace arrtop {

// A symmetry of the arrangement: how it permutes and reorients the
// hyperplanes, and (in geometric mode) the exact linear map behind it.  The
// word lists generator indices, leftmost factor applied last, so evaluating
// it right-to-left on the base chamber covector reproduces the element.
struct GroupElement {
    SignedPermutation action;
    std::optional<RatMat> matrix;
    std::vector<std::size_t> word;
};

// The reflection over hyperplane j, as s = I - 2 a a^T / (a . a) in the
// coordinates where that formula is orthogonal: directly for a plain
// geometric arrangement, in the parent coordinates for an essentialized one
// (the matrix is conjugated back through the frame), from the stored fan data
// in combinatorial mode.  Errors with "not a reflection symmetry" when the
// map fails to permute the hyperplanes.
GroupElement reflection_of(const Arrangement& a, std::size_t j);

// The signed permutation induced by an arbitrary exact linear map, by
// matching each transformed form to a hyperplane up to a scalar.
SignedPermutation induced_signed_permutation(const Arrangement& a, const RatMat& m);

class ReflectionGroup {
public:
    ReflectionGroup() = default;
    ReflectionGroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators,
                    std::vector<std::size_t> generator_walls, SignVector base_chamber)
        : elements_(std::move(elements)), generators_(std::move(generators)),
          generator_walls_(std::move(generator_walls)), base_chamber_(std::move(base_chamber)) {}

    std::size_t order() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(std::size_t i) const { return elements_[i]; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    // Hyperplane index of each generator's wall.
    const std::vector<std::size_t>& generator_walls() const { return generator_walls_; }
    const SignVector& base_chamber() const { return base_chamber_; }

    std::optional<std::size_t> index_of(const SignedPermutation& sp) const;
    bool has_matrices() const;

private:
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
    std::vector<std::size_t> generator_walls_;
    SignVector base_chamber_;
};

// Closes the wall reflections of the base chamber (the lexicographically
// least chamber) under composition; errors when the closure exceeds cap.
ReflectionGroup generate_group(const Arrangement& a, const FacePoset& poset,
                               std::size_t cap = 10000);

inline SignVector act_on_covector(const GroupElement& g, const SignVector& x) {
    return g.action.act(x);
}

inline SalCell act_on_sal(const GroupElement& g, const SalCell& c) {
    return act_on_sal(g.action, c);
}

struct TransitiveFreeReport {
    bool transitive = false;
    bool free = false;
    bool order_matches = false;  // |W| == number of chambers
    std::string witness;
    bool pass() const { return transitive && free && order_matches; }
};

TransitiveFreeReport check_transitive_free(const ReflectionGroup& w, const FacePoset& poset);

// Shortest generator word carrying the base chamber to the given one, by
// breadth-first search over left multiplication.
std::vector<std::size_t> chamber_word(const ReflectionGroup& w, const SignVector& chamber);

// Replace the stored witnesses by a W-invariant family: faces of the closed
// base chamber keep their witnesses, every other face receives the matrix
// image of its unique congruent representative.  Geometric groups only.
void apply_invariant_witnesses(const Arrangement& a, FacePoset& poset, const ReflectionGroup& w);

// The symmetric group S_l acting on the braid arrangement in R^l by
// coordinate permutations; generators are the adjacent transpositions.
struct SymmetricGroupModel {
    Arrangement arrangement;
    FacePoset poset;
    ReflectionGroup group;
};
SymmetricGroupModel symmetric_group_model(std::size_t l);

} // namespace arrtop

#endif
