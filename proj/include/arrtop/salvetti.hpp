#ifndef ARRTOP_SALVETTI_HPP
#define ARRTOP_SALVETTI_HPP

#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/complex.hpp"
#include "arrtop/poset.hpp"
#include "arrtop/sign.hpp"

namespace arrtop {

// Cells of the Salvetti complex: pairs (F, C) with F a face and C a chamber
// above it.  (F', C') <= (F, C) iff F <= F' and F' o C = C'; under this order
// the (C, C) cells are the vertices and ({0}, C) the top cells, with the
// dimension of (F, C) equal to codim F.
struct SalCell {
    SignVector face;
    SignVector chamber;

    std::string label() const { return "(" + face.str() + "," + chamber.str() + ")"; }
    friend bool operator==(const SalCell&, const SalCell&) = default;
    friend bool operator<(const SalCell& a, const SalCell& b) {
        if (a.face != b.face) return a.face < b.face;
        return a.chamber < b.chamber;
    }
};

bool sal_leq(const SalCell& a, const SalCell& b);

inline SalCell act_on_sal(const SignedPermutation& g, const SalCell& c) {
    return SalCell{g.act(c.face), g.act(c.chamber)};
}

class SalPoset {
public:
    SalPoset() = default;
    SalPoset(std::vector<SalCell> cells, std::vector<std::size_t> dims);

    std::size_t size() const { return cells_.size(); }
    const SalCell& cell(std::size_t i) const { return cells_[i]; }
    const std::vector<SalCell>& cells() const { return cells_; }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    std::optional<std::size_t> index_of(const SalCell& c) const;
    bool leq(std::size_t i, std::size_t j) const { return sal_leq(cells_[i], cells_[j]); }

    std::vector<std::size_t> counts_by_dim() const;
    Poset as_poset() const;

private:
    std::vector<SalCell> cells_;
    std::vector<std::size_t> dims_;
};

SalPoset build_salvetti(const FacePoset& poset);

// F^C: keep the nonzero face signs, push the zero coordinates a quarter turn
// toward the side the chamber is on.
ComplexSignVector to_complex_covector(const SalCell& cell);

// Decode a nowhere-zero complex covector; nullopt when it does not name a
// Salvetti cell of this arrangement.
std::optional<SalCell> from_complex_covector(const ComplexSignVector& x, const FacePoset& poset);

// Exact labeling of z = re + i * im against the complexified forms.
ComplexSignVector complex_covector_of_point(const Arrangement& a, const RatVec& re,
                                            const RatVec& im);

struct OrderIsoReport {
    bool injective = false;
    bool decode_matches_image = false;
    bool order_iso = false;
    bool witness_points_match = true;  // vacuous without witnesses
    std::string witness;
    bool pass() const {
        return injective && decode_matches_image && order_iso && witness_points_match;
    }
};

// Verifies that cell -> complex covector is a bijection onto the decodable
// nowhere-zero complex covectors and an order isomorphism; in geometric mode
// also rechecks every cell against the labeling of its embedded vertex.
OrderIsoReport check_sal_complex_order_iso(const Arrangement& a, const FacePoset& poset,
                                           const SalPoset& sal);

AbstractSimplicialComplex sal_order_complex(const SalPoset& sal);

// Regular CW model of the Salvetti complex; refuses non-essential
// arrangements, whose top cells would not be bounded by spheres.
RegularCellComplexModel sal_cell_complex(const Arrangement& a, const FacePoset& poset,
                                         const SalPoset& sal);

struct EmbeddedVertex {
    SalCell cell;
    RatVec re, im;  // z(F, C) = x(F) + i x(C)
};

// One embedded point per cell, off every complexified hyperplane; requires
// witness points, hence unavailable in combinatorial fan mode.
std::vector<EmbeddedVertex> embed_vertices(const Arrangement& a, const FacePoset& poset,
                                           const SalPoset& sal);

} // namespace arrtop

#endif
