#include "arrtop/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace arrtop {

/* ----- construction ----- */

Arrangement Arrangement::from_normals(std::vector<RatVec> normals) {
    if (normals.empty())
        fail(ErrorKind::Invalid, "arrangement needs at least one hyperplane");
    Arrangement a;
    a.dim_ = normals.front().size();
    if (a.dim_ == 0)
        fail(ErrorKind::Invalid, "zero-dimensional ambient space");
    for (std::size_t j = 0; j < normals.size(); ++j) {
        if (normals[j].size() != a.dim_)
            fail(ErrorKind::Invalid, "hyperplane " + std::to_string(j + 1) +
                                         ": normal length mismatch");
        if (is_zero_vec(normals[j]))
            fail(ErrorKind::Invalid, "hyperplane " + std::to_string(j + 1) +
                                         ": zero normal");
        for (std::size_t k = 0; k < j; ++k)
            if (proportional(a.hyperplanes_[k].normal, normals[j]))
                fail(ErrorKind::Invalid,
                     "hyperplanes " + std::to_string(k + 1) + " and " +
                         std::to_string(j + 1) + " are proportional");
        a.hyperplanes_.push_back(Hyperplane{std::move(normals[j])});
    }
    return a;
}

Arrangement Arrangement::from_normals(std::vector<RatVec> normals, EssentializationFrame frame) {
    Arrangement a = from_normals(std::move(normals));
    if (frame.parent_normals.size() != a.size())
        fail(ErrorKind::Invalid, "essentialization frame arity mismatch");
    a.frame_ = std::move(frame);
    return a;
}

Arrangement Arrangement::fan(std::size_t m,
                             std::vector<SignVector> faces,
                             std::vector<SignedPermutation> reflections) {
    Arrangement a;
    a.dim_ = 2;
    a.combinatorial_ = true;
    a.hyperplanes_.resize(m);  // placeholders: fan hyperplanes carry no normals
    a.fan_faces_ = std::move(faces);
    a.fan_reflections_ = std::move(reflections);
    for (const SignVector& f : a.fan_faces_)
        if (f.size() != m)
            fail(ErrorKind::Invalid, "fan covector length mismatch");
    if (a.fan_reflections_.size() != m)
        fail(ErrorKind::Invalid, "fan needs one reflection per line");
    return a;
}

const SignedPermutation& Arrangement::fan_reflection(std::size_t j) const {
    if (!combinatorial_)
        fail(ErrorKind::Invalid, "fan_reflection on a geometric arrangement");
    return fan_reflections_.at(j);
}

/* ----- point labeling and witnesses ----- */

static void require_geometric(const Arrangement& a, const char* what) {
    if (a.combinatorial())
        fail(ErrorKind::Precondition,
             std::string(what) + " is unavailable in combinatorial fan mode");
}

SignVector covector_of_point(const Arrangement& a, const RatVec& x) {
    require_geometric(a, "covector_of_point");
    if (x.size() != a.dimension())
        fail(ErrorKind::Invalid, "point dimension mismatch");
    SignVector v = SignVector::zero(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        v.set(j, sign_from_int(sign_of(dot(a.normal(j), x))));
    return v;
}

static std::vector<GeConstraint> sign_constraints(const Arrangement& a,
                                                  const std::string& prefix) {
    std::vector<GeConstraint> cs;
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        const RatVec& n = a.normal(j);
        switch (prefix[j]) {
        case '0': {
            cs.push_back({n, Rat(0)});
            RatVec neg(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
            cs.push_back({std::move(neg), Rat(0)});
            break;
        }
        case '+':
            cs.push_back({n, Rat(1)});
            break;
        case '-': {
            RatVec neg(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
            cs.push_back({std::move(neg), Rat(1)});
            break;
        }
        }
    }
    return cs;
}

std::optional<RatVec> feasible_witness(const Arrangement& a, const SignVector& x) {
    require_geometric(a, "feasible_witness");
    if (x.size() != a.size())
        fail(ErrorKind::Invalid, "sign vector arity mismatch");
    return feasible_point(sign_constraints(a, x.str()), a.dimension());
}

/* ----- face poset ----- */

FacePoset::FacePoset(std::vector<Face> faces) : faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        return a.covector.str() < b.covector.str();
    });
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (i > 0 && faces_[i].covector.size() != faces_[0].covector.size())
            fail(ErrorKind::Invalid, "face covectors mix lengths");
        if (!index_.emplace(faces_[i].covector.str(), i).second)
            fail(ErrorKind::Invalid, "duplicate face covector " + faces_[i].covector.str());
    }
}

std::vector<SignVector> FacePoset::covectors() const {
    std::vector<SignVector> out;
    out.reserve(faces_.size());
    for (const Face& f : faces_) out.push_back(f.covector);
    return out;
}

std::optional<std::size_t> FacePoset::index_of(const SignVector& v) const {
    auto it = index_.find(v.str());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> FacePoset::covers() const {
    std::size_t n = faces_.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq(i, j)) lt[i][j] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (lt[i][k] && lt[k][j]) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::size_t> FacePoset::chamber_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].covector.nowhere_zero()) out.push_back(i);
    return out;
}

std::size_t FacePoset::zero_index() const {
    auto idx = index_of(SignVector::zero(faces_.empty() ? 0 : faces_[0].covector.size()));
    if (!idx) fail(ErrorKind::Internal, "central arrangement without zero covector");
    return *idx;
}

FacePoset enumerate_faces(const Arrangement& a, std::size_t cap) {
    if (a.combinatorial()) {
        std::vector<Face> faces;
        for (const SignVector& v : a.fan_faces()) {
            std::size_t codim = v.is_zero() ? 2 : (v.nowhere_zero() ? 0 : 1);
            faces.push_back(Face{v, std::nullopt, codim});
        }
        return FacePoset(std::move(faces));
    }
    if (a.size() > cap)
        fail(ErrorKind::Precondition,
             "enumeration refused: " + std::to_string(a.size()) +
                 " hyperplanes exceed the cap of " + std::to_string(cap));

    std::vector<Face> found;
    std::string prefix;
    prefix.reserve(a.size());
    std::function<void()> dfs = [&]() {
        auto witness = feasible_point(sign_constraints(a, prefix), a.dimension());
        if (!witness) return;
        if (prefix.size() == a.size()) {
            SignVector v(prefix);
            RatMat zero_rows;
            for (std::size_t j : v.zero_set()) zero_rows.push_back(a.normal(j));
            found.push_back(Face{v, std::move(witness), matrix_rank(zero_rows)});
            return;
        }
        for (char c : {'+', '-', '0'}) {
            prefix.push_back(c);
            dfs();
            prefix.pop_back();
        }
    };
    dfs();
    return FacePoset(std::move(found));
}

std::vector<SignVector> chambers(const FacePoset& poset) {
    std::vector<SignVector> out;
    for (std::size_t i : poset.chamber_indices()) out.push_back(poset.face(i).covector);
    return out;
}

bool is_essential(const Arrangement& a) {
    if (a.combinatorial()) return true;
    RatMat rows;
    for (const Hyperplane& h : a.hyperplanes()) rows.push_back(h.normal);
    return matrix_rank(rows) == a.dimension();
}

Subarrangement subarrangement_at(const Arrangement& a, const SignVector& f) {
    require_geometric(a, "subarrangement_at");
    if (f.size() != a.size())
        fail(ErrorKind::Invalid, "sign vector arity mismatch");
    Subarrangement sub;
    std::vector<RatVec> normals;
    for (std::size_t j : f.zero_set()) {
        normals.push_back(a.normal(j));
        sub.indices.push_back(j);
    }
    if (normals.empty())
        fail(ErrorKind::Invalid, "subarrangement at a chamber is empty");
    sub.arr = Arrangement::from_normals(std::move(normals));
    return sub;
}

SignVector restrict_chamber(const Arrangement& a, const SignVector& f, const SignVector& c) {
    if (f.size() != a.size() || c.size() != a.size())
        fail(ErrorKind::Invalid, "sign vector arity mismatch");
    std::string out;
    for (std::size_t j : f.zero_set()) out.push_back(sign_char(c[j]));
    return SignVector(out);
}

SignVector unique_extension(const FacePoset& poset, const SignVector& f, const SignVector& d) {
    if (!poset.contains(f))
        fail(ErrorKind::Invalid, "face " + f.str() + " is not in the poset");
    std::vector<std::size_t> zeros = f.zero_set();
    if (d.size() != zeros.size())
        fail(ErrorKind::Invalid, "restricted chamber arity mismatch");
    SignVector x = f;
    for (std::size_t k = 0; k < zeros.size(); ++k) x.set(zeros[k], d[k]);
    if (!x.nowhere_zero() || !poset.contains(x))
        fail(ErrorKind::Invalid,
             d.str() + " is not a chamber of the subarrangement at " + f.str());
    return x;
}

std::vector<std::size_t> walls(const FacePoset& poset, const SignVector& chamber) {
    if (!chamber.nowhere_zero() || !poset.contains(chamber))
        fail(ErrorKind::Invalid, chamber.str() + " is not a chamber of the poset");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < chamber.size(); ++j) {
        SignVector x = chamber;
        x.set(j, Sign::zero);
        if (poset.contains(x)) out.push_back(j);
    }
    return out;
}

std::vector<AdjacencyEdge> adjacency_graph(const FacePoset& poset) {
    std::vector<std::size_t> cs = poset.chamber_indices();
    std::map<std::string, std::size_t> ordinal;
    for (std::size_t i = 0; i < cs.size(); ++i)
        ordinal[poset.face(cs[i]).covector.str()] = i;
    std::vector<AdjacencyEdge> edges;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const SignVector& c = poset.face(cs[i]).covector;
        for (std::size_t j : walls(poset, c)) {
            SignVector other = c;
            other.set(j, sign_opposite(c[j]));
            auto it = ordinal.find(other.str());
            if (it != ordinal.end() && it->second > i)
                edges.push_back(AdjacencyEdge{i, it->second, j});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const AdjacencyEdge& a, const AdjacencyEdge& b) {
        return std::tie(a.c1, a.c2, a.hyperplane) < std::tie(b.c1, b.c2, b.hyperplane);
    });
    return edges;
}

/* ----- builtins ----- */

Arrangement coords_arrangement() {
    return Arrangement::from_normals({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

static RatMat adjacent_difference_basis(std::size_t l) {
    RatMat b(l - 1, RatVec(l, Rat(0)));
    for (std::size_t k = 0; k + 1 < l; ++k) {
        b[k][k] = 1;
        b[k][k + 1] = -1;
    }
    return b;
}

static RatVec apply_basis(const RatMat& b, const RatVec& a) {
    RatVec out(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = dot(b[i], a);
    return out;
}

static Arrangement essentialize_normals(std::vector<RatVec> parent, std::size_t parent_dim) {
    RatMat basis = adjacent_difference_basis(parent_dim);
    std::vector<RatVec> normals;
    normals.reserve(parent.size());
    for (const RatVec& a : parent) normals.push_back(apply_basis(basis, a));
    return Arrangement::from_normals(std::move(normals),
                                     EssentializationFrame{std::move(basis), std::move(parent)});
}

Arrangement braid_arrangement(std::size_t l, bool essentialize) {
    if (l < 2)
        fail(ErrorKind::Invalid, "braid arrangement needs l >= 2");
    std::vector<RatVec> normals;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            RatVec a(l, Rat(0));
            a[i] = 1;
            a[j] = -1;  // positive side is x_i > x_j
            normals.push_back(std::move(a));
        }
    if (!essentialize) return Arrangement::from_normals(std::move(normals));
    return essentialize_normals(std::move(normals), l);
}

// Rank-2 fans are described by the 2m half-line directions at angles
// T * pi/(2m), T even on a ray and odd inside a sector.  Line j sits at the
// even direction 2j and its positive side is the open counterclockwise half
// turn starting there.
static char fan_sign(std::size_t m, std::size_t j, std::size_t t) {
    std::size_t d = (t + 4 * m - 2 * j) % (4 * m);
    if (d == 0 || d == 2 * m) return '0';
    return d < 2 * m ? '+' : '-';
}

Arrangement dihedral_fan_arrangement(std::size_t m) {
    if (m < 2)
        fail(ErrorKind::Invalid, "dihedral fan needs m >= 2");
    std::vector<SignVector> faces;
    faces.push_back(SignVector::zero(m));
    for (std::size_t u = 0; u < 2 * m; ++u) {
        std::string ray, sector;
        for (std::size_t j = 0; j < m; ++j) {
            ray.push_back(fan_sign(m, j, 2 * u));
            sector.push_back(fan_sign(m, j, 2 * u + 1));
        }
        faces.emplace_back(ray);
        faces.emplace_back(sector);
    }
    std::vector<SignedPermutation> reflections;
    for (std::size_t j = 0; j < m; ++j) {
        SignedPermutation sp;
        sp.perm.resize(m);
        sp.flips.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            sp.perm[k] = (2 * j + m - k % m) % m;
            // A direction strictly inside line k's positive side maps to
            // whichever side of the image line; that sign is the flip.
            std::size_t image_t = (4 * j + 8 * m - (2 * k + 1)) % (4 * m);
            sp.flips[k] = fan_sign(m, sp.perm[k], image_t) == '+' ? 1 : -1;
        }
        reflections.push_back(std::move(sp));
    }
    return Arrangement::fan(m, std::move(faces), std::move(reflections));
}

Arrangement dihedral_arrangement(std::size_t m) {
    if (m < 2)
        fail(ErrorKind::Invalid, "dihedral arrangement needs m >= 2");
    switch (m) {
    case 2:
        return coords_arrangement();
    case 3:
        return braid_arrangement(3, true);
    case 4:
        return Arrangement::from_normals({{Rat(0), Rat(1)},
                                          {Rat(1), Rat(-1)},
                                          {Rat(1), Rat(0)},
                                          {Rat(1), Rat(1)}});
    case 6: {
        // The six root lines of G2 have integer normals one dimension up;
        // essentializing brings them down to the plane exactly.
        std::vector<RatVec> parent = {
            {Rat(1), Rat(-1), Rat(0)},  {Rat(1), Rat(0), Rat(-1)},
            {Rat(0), Rat(1), Rat(-1)},  {Rat(2), Rat(-1), Rat(-1)},
            {Rat(1), Rat(1), Rat(-2)},  {Rat(1), Rat(-2), Rat(1)}};
        return essentialize_normals(std::move(parent), 3);
    }
    default:
        return dihedral_fan_arrangement(m);
    }
}

} // namespace arrtop
