#ifndef ARRTOP_ARRANGEMENT_HPP
#define ARRTOP_ARRANGEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/lp.hpp"
#include "arrtop/rational.hpp"
#include "arrtop/sign.hpp"
#include "arrtop/signed_perm.hpp"

namespace arrtop {

// Central arrangements only: every hyperplane is ker(a . x) for a nonzero
// rational normal a, and the orientation of each hyperplane is the sign of
// its form.  An arrangement is either geometric (normals present) or a
// combinatorial rank-2 fan (covectors and symmetries given directly, no
// witness points, used for dihedral m without a rational realization).

struct Hyperplane {
    RatVec normal;
};

// Data an essentialized arrangement remembers about its parent coordinates:
// the substitution x = basis^T y identifies R^dim with the essential subspace
// of the parent, preserving every form's sign, which is what lets symmetries
// be computed upstairs and transported.
struct EssentializationFrame {
    RatMat basis;                      // (dim x parent_dim), rows span the subspace
    std::vector<RatVec> parent_normals;
};

class Arrangement {
public:
    static Arrangement from_normals(std::vector<RatVec> normals);
    static Arrangement from_normals(std::vector<RatVec> normals, EssentializationFrame frame);
    static Arrangement fan(std::size_t m,
                           std::vector<SignVector> faces,
                           std::vector<SignedPermutation> reflections);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const RatVec& normal(std::size_t j) const { return hyperplanes_[j].normal; }

    bool combinatorial() const { return combinatorial_; }
    const std::vector<SignVector>& fan_faces() const { return fan_faces_; }
    const SignedPermutation& fan_reflection(std::size_t j) const;

    bool essentialized() const { return frame_.has_value(); }
    const EssentializationFrame& frame() const { return *frame_; }

private:
    std::size_t dim_ = 0;
    std::vector<Hyperplane> hyperplanes_;
    bool combinatorial_ = false;
    std::vector<SignVector> fan_faces_;
    std::vector<SignedPermutation> fan_reflections_;
    std::optional<EssentializationFrame> frame_;
};

SignVector covector_of_point(const Arrangement& a, const RatVec& x);

// An interior point of the candidate face, via the homogeneous relaxation
// (forms pinned to 0 on zero entries, pushed past +-1 elsewhere), or nullopt
// when the sign pattern is not realized.
std::optional<RatVec> feasible_witness(const Arrangement& a, const SignVector& x);

struct Face {
    SignVector covector;
    std::optional<RatVec> witness;
    std::size_t codim = 0;
};

class FacePoset {
public:
    FacePoset() = default;
    explicit FacePoset(std::vector<Face> faces);

    std::size_t size() const { return faces_.size(); }
    const Face& face(std::size_t i) const { return faces_[i]; }
    const std::vector<Face>& faces() const { return faces_; }
    std::vector<SignVector> covectors() const;

    std::optional<std::size_t> index_of(const SignVector& v) const;
    bool contains(const SignVector& v) const { return index_of(v).has_value(); }

    bool leq(std::size_t i, std::size_t j) const {
        return sign_leq(faces_[i].covector, faces_[j].covector);
    }
    // Covering relations (i, j) with face i immediately below face j.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    std::vector<std::size_t> chamber_indices() const;
    std::size_t zero_index() const;

    void set_witness(std::size_t i, RatVec w) { faces_[i].witness = std::move(w); }

private:
    std::vector<Face> faces_;
    std::map<std::string, std::size_t> index_;
};

// All covectors of A by exhaustive sign-pattern search with exact feasibility
// at every prefix.  Refuses when the hyperplane count exceeds cap; fan-mode
// arrangements return their stored poset directly.
FacePoset enumerate_faces(const Arrangement& a, std::size_t cap = 12);

std::vector<SignVector> chambers(const FacePoset& poset);

bool is_essential(const Arrangement& a);

struct Subarrangement {
    Arrangement arr;
    std::vector<std::size_t> indices;  // positions in the parent arrangement
};
Subarrangement subarrangement_at(const Arrangement& a, const SignVector& f);

// C restricted to the hyperplanes containing F, in parent index order.
SignVector restrict_chamber(const Arrangement& a, const SignVector& f, const SignVector& c);

// Inverse of restrict_chamber: the unique chamber of A above F restricting to
// d; errors when d is not a chamber of the subarrangement at F.
SignVector unique_extension(const FacePoset& poset, const SignVector& f, const SignVector& d);

// Hyperplanes j such that zeroing C_j lands back in the poset.
std::vector<std::size_t> walls(const FacePoset& poset, const SignVector& chamber);

struct AdjacencyEdge {
    std::size_t c1, c2;       // indices into chambers(poset), c1 < c2
    std::size_t hyperplane;   // the separating wall
};
std::vector<AdjacencyEdge> adjacency_graph(const FacePoset& poset);

// Builtins.
Arrangement coords_arrangement();
Arrangement braid_arrangement(std::size_t l, bool essentialize = false);
Arrangement dihedral_arrangement(std::size_t m);
// Purely combinatorial realization of the m-line dihedral fan, available for
// every m; dihedral_arrangement falls back to it when no small geometric
// model exists.
Arrangement dihedral_fan_arrangement(std::size_t m);

} // namespace arrtop

#endif
