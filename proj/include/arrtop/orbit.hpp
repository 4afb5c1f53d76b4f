#ifndef ARRTOP_ORBIT_HPP
#define ARRTOP_ORBIT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/group.hpp"

namespace arrtop {

// W-orbit classes of Salvetti cells.  The representative of a class is its
// lexicographically least cell; incidence records, for each class, how many
// covered cells of its representative fall into each lower class.
struct OrbitClass {
    std::size_t rep;                   // index into the Salvetti poset
    std::vector<std::size_t> members;  // all cell indices, ascending
    std::size_t dim;
};

struct OrbitCellComplexModel {
    std::vector<OrbitClass> classes;
    std::vector<std::size_t> class_of;  // Salvetti cell index -> class index
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> incidence;

    std::vector<std::size_t> counts_by_dim() const;
};

OrbitCellComplexModel quotient_sal(const SalPoset& sal, const ReflectionGroup& w);

// One letter of a boundary word: a generator index and a +-1 exponent.
struct LetterExp {
    std::size_t gen;
    int exp;
    friend bool operator==(const LetterExp&, const LetterExp&) = default;
};
using Word = std::vector<LetterExp>;

// Boundary word of the base top cell of the quotient, read off the fan walk
// that starts across the first wall of the base chamber and always crosses
// the wall not just crossed.  An edge traversed toward its (C, C) vertex
// contributes exponent +1.  Requires an essential rank-2 arrangement.
Word boundary_word(const Arrangement& a, const FacePoset& poset, const ReflectionGroup& w);

// The dual 2-complex of a rank-2 arrangement: a vertex per chamber, an edge
// per ray labeled by the ray's orbit, and the base 2-cell boundary word.
struct DualEdge {
    std::size_t c1, c2;     // chamber ordinals, c1 < c2
    std::size_t ray;        // face-poset index of the dual ray
    std::size_t label;      // generator index of the ray's orbit
};
struct DualComplex2D {
    std::vector<std::size_t> chamber_faces;            // face-poset indices
    std::vector<std::optional<RatVec>> vertex_witness;
    std::vector<DualEdge> edges;
    Word base_boundary;
};
DualComplex2D dual_complex_2d(const Arrangement& a, const FacePoset& poset,
                              const ReflectionGroup& w);

// Number of hyperplanes containing the codimension-2 flat H_i cap H_j, i.e.
// with normal in the span of a_i and a_j; equals the hyperplane count for a
// rank-2 arrangement (which is the only combinatorial-mode case).
std::size_t coxeter_exponent(const Arrangement& a, std::size_t i, std::size_t j);

struct Relation {
    std::size_t gi, gj;  // generator indices
    std::size_t m;       // factors per side
    std::string left, right;
};
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    std::string text() const;
};

// Artin presentation on the walls of the base chamber, one alternating
// relation of length m_ij per wall pair.
Presentation presentation(const Arrangement& a, const FacePoset& poset,
                          const ReflectionGroup& w);

// Normalizes a cyclic boundary word into a positive-word equation; exposed so
// the walked relation can be compared against the Artin one.
std::pair<std::string, std::string> relation_from_word(const Word& word,
                                                       const std::vector<std::string>& names);

// Integer homology of the quotient complex, via the one-vertex presentation
// 2-complex; defined for single-vertex rank-2 quotients only.
std::vector<HomologyGroup> quotient_homology(const Arrangement& a, const FacePoset& poset,
                                             const ReflectionGroup& w);

} // namespace arrtop

#endif
