#ifndef ARRTOP_COMPLEX_HPP
#define ARRTOP_COMPLEX_HPP

#include <string>
#include <vector>

#include "arrtop/poset.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

using IntMat = std::vector<std::vector<Int>>;

// Simplices are stored as ascending vertex-id lists, downward closed, sorted
// by (dimension, lex).  Orientation everywhere is the one induced by the
// global total order on vertex ids, so boundary matrices are reproducible.
class AbstractSimplicialComplex {
public:
    AbstractSimplicialComplex() = default;

    static AbstractSimplicialComplex from_simplices(std::size_t vertex_count,
                                                    std::vector<std::vector<std::size_t>> simplices,
                                                    std::vector<std::string> vertex_labels = {});

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<std::size_t>>& simplices() const { return simplices_; }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

    std::size_t dimension() const;
    std::vector<std::size_t> counts_by_dim() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<std::size_t>> simplices_;
    std::vector<std::string> vertex_labels_;
};

// All nonempty chains of the poset, one vertex per element.
AbstractSimplicialComplex order_complex(const Poset& p);

// The inclusion poset of a complex's simplices; its order complex is the
// barycentric subdivision.
Poset simplex_poset(const AbstractSimplicialComplex& k);

// Nerve of a finite family of finite sets: a simplex per subfamily with
// nonempty common intersection.
AbstractSimplicialComplex nerve(const std::vector<std::vector<std::size_t>>& family);

long long euler_characteristic(const AbstractSimplicialComplex& k);

// ranks[k] counts k-cells; boundary[k] (k >= 1) is the ranks[k-1] x ranks[k]
// integer matrix of the differential C_k -> C_{k-1}.  boundary[0] is unused.
struct ChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMat> boundary;
};

ChainComplex chain_complex(const AbstractSimplicialComplex& k);

struct SmithResult {
    std::vector<Int> invariant_factors;  // nonzero diagonal of the normal form
    std::size_t rank = 0;
};
SmithResult smith_normal_form(IntMat m);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1
};

// Integer homology in every degree; errors when boundary . boundary != 0.
std::vector<HomologyGroup> homology(const ChainComplex& cc);
std::vector<HomologyGroup> homology(const AbstractSimplicialComplex& k);

// A regular CW model given combinatorially: a face poset plus a dimension per
// cell, strictly increasing along the order.  Homology of such a model is
// always taken through the order complex of its poset.
struct RegularCellComplexModel {
    Poset face_poset;
    std::vector<std::size_t> dims;

    std::vector<std::size_t> counts_by_dim() const;
    long long euler_characteristic() const;
};

RegularCellComplexModel cell_complex_from_poset(Poset p, std::vector<std::size_t> dims);

std::vector<HomologyGroup> homology(const RegularCellComplexModel& model);

// Every cell of positive dimension k must have a boundary subposet whose
// order complex is a homology (k-1)-sphere; returns the offending cell label
// on failure.
struct CellModelReport {
    bool pass = true;
    std::string witness;
};
CellModelReport validate_cell_model(const RegularCellComplexModel& model);

} // namespace arrtop

#endif
