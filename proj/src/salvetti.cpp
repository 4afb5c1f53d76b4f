#include "arrtop/salvetti.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrtop {

bool sal_leq(const SalCell& a, const SalCell& b) {
    return sign_leq(b.face, a.face) && compose(a.face, b.chamber) == a.chamber;
}

SalPoset::SalPoset(std::vector<SalCell> cells, std::vector<std::size_t> dims)
    : cells_(std::move(cells)), dims_(std::move(dims)) {
    if (cells_.size() != dims_.size())
        fail(ErrorKind::Invalid, "one dimension per Salvetti cell required");
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (!(cells_[i - 1] < cells_[i]))
            fail(ErrorKind::Invalid, "Salvetti cells must be strictly sorted");
}

std::optional<std::size_t> SalPoset::index_of(const SalCell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<std::size_t> SalPoset::counts_by_dim() const {
    std::vector<std::size_t> counts;
    for (std::size_t d : dims_) {
        if (d + 1 > counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

Poset SalPoset::as_poset() const {
    std::vector<std::string> labels;
    labels.reserve(cells_.size());
    for (const SalCell& c : cells_) labels.push_back(c.label());
    return Poset::from_predicate(std::move(labels),
                                 [this](std::size_t i, std::size_t j) { return leq(i, j); });
}

SalPoset build_salvetti(const FacePoset& poset) {
    std::vector<SalCell> cells;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> chamber_ids = poset.chamber_indices();
    for (std::size_t fi = 0; fi < poset.size(); ++fi) {
        const Face& f = poset.face(fi);
        for (std::size_t ci : chamber_ids) {
            const Face& c = poset.face(ci);
            if (sign_leq(f.covector, c.covector)) {
                cells.push_back(SalCell{f.covector, c.covector});
                dims.push_back(f.codim);
            }
        }
    }
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
    std::vector<SalCell> sorted_cells;
    std::vector<std::size_t> sorted_dims;
    for (std::size_t i : order) {
        sorted_cells.push_back(cells[i]);
        sorted_dims.push_back(dims[i]);
    }
    return SalPoset(std::move(sorted_cells), std::move(sorted_dims));
}

ComplexSignVector to_complex_covector(const SalCell& cell) {
    std::string out;
    out.reserve(cell.face.size());
    for (std::size_t j = 0; j < cell.face.size(); ++j) {
        if (cell.face[j] != Sign::zero)
            out.push_back(sign_char(cell.face[j]));
        else
            out.push_back(cell.chamber[j] == Sign::plus ? 'i' : 'j');
    }
    return ComplexSignVector(out);
}

std::optional<SalCell> from_complex_covector(const ComplexSignVector& x, const FacePoset& poset) {
    std::string face, chamber;
    for (std::size_t j = 0; j < x.size(); ++j) {
        switch (x[j]) {
        case ComplexSign::plus:   face.push_back('+'); chamber.push_back('+'); break;
        case ComplexSign::minus:  face.push_back('-'); chamber.push_back('-'); break;
        case ComplexSign::im:     face.push_back('0'); chamber.push_back('+'); break;
        case ComplexSign::neg_im: face.push_back('0'); chamber.push_back('-'); break;
        case ComplexSign::zero:   return std::nullopt;
        }
    }
    SalCell cell{SignVector(face), SignVector(chamber)};
    if (!poset.contains(cell.face) || !poset.contains(cell.chamber)) return std::nullopt;
    return cell;
}

ComplexSignVector complex_covector_of_point(const Arrangement& a, const RatVec& re,
                                            const RatVec& im) {
    if (a.combinatorial())
        fail(ErrorKind::Precondition,
             "complex_covector_of_point is unavailable in combinatorial fan mode");
    if (re.size() != a.dimension() || im.size() != a.dimension())
        fail(ErrorKind::Invalid, "point dimension mismatch");
    std::string out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        int x = sign_of(dot(a.normal(j), re));
        int y = sign_of(dot(a.normal(j), im));
        if (x > 0) out.push_back('+');
        else if (x < 0) out.push_back('-');
        else if (y > 0) out.push_back('i');
        else if (y < 0) out.push_back('j');
        else out.push_back('0');
    }
    return ComplexSignVector(out);
}

OrderIsoReport check_sal_complex_order_iso(const Arrangement& a, const FacePoset& poset,
                                           const SalPoset& sal) {
    OrderIsoReport rep;
    std::size_t n = poset.size() ? poset.face(0).covector.size() : 0;

    std::vector<ComplexSignVector> image;
    image.reserve(sal.size());
    std::set<ComplexSignVector> image_set;
    for (std::size_t i = 0; i < sal.size(); ++i) {
        image.push_back(to_complex_covector(sal.cell(i)));
        image_set.insert(image.back());
    }
    rep.injective = image_set.size() == sal.size();
    if (!rep.injective) {
        rep.witness = "two cells share a complex covector";
        return rep;
    }

    // The decodable nowhere-zero complex covectors are exactly the image.
    rep.decode_matches_image = true;
    if (n <= 8) {
        std::string probe(n, '+');
        const char alphabet[4] = {'+', '-', 'i', 'j'};
        std::vector<std::size_t> digits(n, 0);
        while (true) {
            for (std::size_t j = 0; j < n; ++j) probe[j] = alphabet[digits[j]];
            ComplexSignVector x(probe);
            bool decodes = from_complex_covector(x, poset).has_value();
            if (decodes != (image_set.count(x) != 0)) {
                rep.decode_matches_image = false;
                rep.witness = "decode/image mismatch at " + x.str();
                return rep;
            }
            std::size_t j = 0;
            while (j < n && digits[j] == 3) digits[j++] = 0;
            if (j == n) break;
            ++digits[j];
        }
    } else {
        for (std::size_t i = 0; i < sal.size(); ++i) {
            auto back = from_complex_covector(image[i], poset);
            if (!back || !(*back == sal.cell(i))) {
                rep.decode_matches_image = false;
                rep.witness = "cell " + sal.cell(i).label() + " does not decode to itself";
                return rep;
            }
        }
    }

    rep.order_iso = true;
    for (std::size_t i = 0; i < sal.size() && rep.order_iso; ++i)
        for (std::size_t j = 0; j < sal.size(); ++j) {
            if (sal.leq(i, j) != complex_sign_leq(image[i], image[j])) {
                rep.order_iso = false;
                rep.witness = "order mismatch between " + sal.cell(i).label() + " and " +
                              sal.cell(j).label();
                break;
            }
        }
    if (!rep.order_iso) return rep;

    if (!a.combinatorial()) {
        for (std::size_t i = 0; i < sal.size(); ++i) {
            const SalCell& c = sal.cell(i);
            auto fi = poset.index_of(c.face);
            auto ci = poset.index_of(c.chamber);
            if (!fi || !ci || !poset.face(*fi).witness || !poset.face(*ci).witness) {
                rep.witness_points_match = false;
                rep.witness = "missing witness for " + c.label();
                return rep;
            }
            ComplexSignVector from_point = complex_covector_of_point(
                a, *poset.face(*fi).witness, *poset.face(*ci).witness);
            if (!(from_point == image[i])) {
                rep.witness_points_match = false;
                rep.witness = "embedded point of " + c.label() + " labels as " + from_point.str();
                return rep;
            }
        }
    }
    return rep;
}

AbstractSimplicialComplex sal_order_complex(const SalPoset& sal) {
    return order_complex(sal.as_poset());
}

RegularCellComplexModel sal_cell_complex(const Arrangement& a, const FacePoset& poset,
                                         const SalPoset& sal) {
    if (!is_essential(a))
        fail(ErrorKind::Precondition,
             "Salvetti cell model requires an essential arrangement (pass the "
             "essentialized form instead)");
    (void)poset;
    return cell_complex_from_poset(sal.as_poset(), sal.dims());
}

std::vector<EmbeddedVertex> embed_vertices(const Arrangement& a, const FacePoset& poset,
                                           const SalPoset& sal) {
    if (a.combinatorial())
        fail(ErrorKind::Precondition,
             "embedded vertices are unavailable in combinatorial fan mode");
    std::vector<EmbeddedVertex> out;
    out.reserve(sal.size());
    for (std::size_t i = 0; i < sal.size(); ++i) {
        const SalCell& c = sal.cell(i);
        auto fi = poset.index_of(c.face);
        auto ci = poset.index_of(c.chamber);
        if (!fi || !ci)
            fail(ErrorKind::Invalid, "Salvetti cell " + c.label() + " not backed by the poset");
        if (!poset.face(*fi).witness || !poset.face(*ci).witness)
            fail(ErrorKind::Precondition, "missing witness point for " + c.label());
        EmbeddedVertex v{c, *poset.face(*fi).witness, *poset.face(*ci).witness};
        for (std::size_t j = 0; j < a.size(); ++j)
            if (dot(a.normal(j), v.re) == 0 && dot(a.normal(j), v.im) == 0)
                fail(ErrorKind::Internal, "embedded vertex of " + c.label() +
                                              " lies on complexified hyperplane " +
                                              std::to_string(j + 1));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace arrtop
