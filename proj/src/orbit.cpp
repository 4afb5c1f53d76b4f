#include "arrtop/orbit.hpp"

#include <algorithm>
#include <set>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

void require_rank2(const Arrangement& a) {
    if (a.combinatorial()) return;
    if (a.dimension() != 2 || !is_essential(a))
        fail(ErrorKind::Precondition, "operation requires an essential rank-2 arrangement");
}

// Orbit label of each ray covector.  Every ray is equivalent to one of the
// two rays bounding the base chamber, which carry labels 0 and 1 in wall
// order.
std::map<std::string, std::size_t> ray_orbit_labels(const FacePoset& poset,
                                                    const ReflectionGroup& w) {
    const auto& base = w.base_chamber();
    const auto& wall_ids = w.generator_walls();
    if (wall_ids.size() != 2)
        fail(ErrorKind::Precondition, "base chamber must have exactly two walls");

    std::map<std::string, std::size_t> labels;
    for (std::size_t k = 0; k < 2; ++k) {
        SignVector ray = base;
        ray.set(wall_ids[k], Sign::zero);
        if (!poset.contains(ray))
            fail(ErrorKind::Internal, "wall ray " + ray.str() + " is missing from the face poset");
        for (const auto& g : w.elements()) {
            SignVector image = act_on_covector(g, ray);
            auto [it, inserted] = labels.emplace(image.str(), k);
            if (!inserted && it->second != k)
                fail(ErrorKind::Internal, "ray orbits are not disjoint at " + image.str());
        }
    }
    return labels;
}

std::string generator_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "g" + std::to_string(i + 1);
}

} // namespace

std::vector<std::size_t> OrbitCellComplexModel::counts_by_dim() const {
    std::size_t top = 0;
    for (const auto& c : classes) top = std::max(top, c.dim);
    std::vector<std::size_t> counts(top + 1, 0);
    for (const auto& c : classes) ++counts[c.dim];
    return counts;
}

OrbitCellComplexModel quotient_sal(const SalPoset& sal, const ReflectionGroup& w) {
    const std::size_t n = sal.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);

    OrbitCellComplexModel model;
    model.class_of.assign(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (model.class_of[i] != unset) continue;
        std::set<std::size_t> members;
        for (const auto& g : w.elements()) {
            auto idx = sal.index_of(act_on_sal(g, sal.cell(i)));
            if (!idx)
                fail(ErrorKind::Symmetry,
                     "group element moves cell " + sal.cell(i).label() + " out of the complex");
            members.insert(*idx);
        }
        std::size_t cls = model.classes.size();
        OrbitClass oc;
        oc.rep = *members.begin();
        oc.members.assign(members.begin(), members.end());
        oc.dim = sal.dim(oc.rep);
        for (std::size_t m : oc.members) model.class_of[m] = cls;
        model.classes.push_back(std::move(oc));
    }

    for (std::size_t cls = 0; cls < model.classes.size(); ++cls) {
        std::size_t r = model.classes[cls].rep;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == r || !sal.leq(j, r)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (k != j && k != r && sal.leq(j, k) && sal.leq(k, r)) covered = false;
            if (covered) ++model.incidence[{cls, model.class_of[j]}];
        }
    }
    return model;
}

Word boundary_word(const Arrangement& a, const FacePoset& poset, const ReflectionGroup& w) {
    require_rank2(a);
    auto labels = ray_orbit_labels(poset, w);
    const SignVector& base = w.base_chamber();
    const std::size_t steps = chambers(poset).size();

    Word word;
    SignVector cur = base;
    std::size_t last_wall = a.size();
    for (std::size_t step = 0; step < steps; ++step) {
        std::size_t j;
        if (step == 0) {
            j = w.generator_walls()[0];
        } else {
            auto ws = walls(poset, cur);
            if (ws.size() != 2)
                fail(ErrorKind::Internal, "chamber " + cur.str() + " does not have two walls");
            j = ws[0] == last_wall ? ws[1] : ws[0];
        }

        SignVector ray = cur;
        ray.set(j, Sign::zero);
        auto label = labels.find(ray.str());
        if (label == labels.end())
            fail(ErrorKind::Internal, "ray " + ray.str() + " has no orbit label");

        SignVector next = cur;
        next.set(j, sign_opposite(cur[j]));
        if (!poset.contains(next))
            fail(ErrorKind::Internal, "flipped chamber " + next.str() + " is missing");

        word.push_back({label->second, next[j] == base[j] ? 1 : -1});
        cur = std::move(next);
        last_wall = j;
    }
    if (!(cur == base))
        fail(ErrorKind::Internal, "boundary walk did not return to the base chamber");
    return word;
}

DualComplex2D dual_complex_2d(const Arrangement& a, const FacePoset& poset,
                              const ReflectionGroup& w) {
    require_rank2(a);
    DualComplex2D dual;
    dual.chamber_faces = poset.chamber_indices();
    for (std::size_t f : dual.chamber_faces)
        dual.vertex_witness.push_back(poset.face(f).witness);

    auto ordinal = [&](const SignVector& c) {
        auto idx = poset.index_of(c);
        if (!idx) fail(ErrorKind::Internal, "chamber " + c.str() + " is missing");
        auto it = std::lower_bound(dual.chamber_faces.begin(), dual.chamber_faces.end(), *idx);
        return static_cast<std::size_t>(it - dual.chamber_faces.begin());
    };

    auto labels = ray_orbit_labels(poset, w);
    for (std::size_t r = 0; r < poset.size(); ++r) {
        const Face& f = poset.face(r);
        if (f.codim != 1) continue;
        auto zeros = f.covector.zero_set();
        if (zeros.size() != 1)
            fail(ErrorKind::Internal, "ray " + f.covector.str() + " lies on several hyperplanes");
        auto label = labels.find(f.covector.str());
        if (label == labels.end())
            fail(ErrorKind::Internal, "ray " + f.covector.str() + " has no orbit label");

        SignVector up = f.covector, down = f.covector;
        up.set(zeros[0], Sign::plus);
        down.set(zeros[0], Sign::minus);
        std::size_t cu = ordinal(up), cd = ordinal(down);
        dual.edges.push_back({std::min(cu, cd), std::max(cu, cd), r, label->second});
    }
    dual.base_boundary = boundary_word(a, poset, w);
    return dual;
}

std::size_t coxeter_exponent(const Arrangement& a, std::size_t i, std::size_t j) {
    if (i >= a.size() || j >= a.size() || i == j)
        fail(ErrorKind::Invalid, "exponent requires two distinct hyperplane indices");
    if (a.combinatorial()) return a.size();

    RatMat pair{a.normal(i), a.normal(j)};
    if (matrix_rank(pair) != 2)
        fail(ErrorKind::Invalid, "hyperplanes " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " do not meet in a codimension-2 flat");
    std::size_t count = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        RatMat triple = pair;
        triple.push_back(a.normal(k));
        if (matrix_rank(triple) == 2) ++count;
    }
    return count;
}

std::string Presentation::text() const {
    std::string out = "⟨";
    for (std::size_t i = 0; i < generators.size(); ++i)
        out += (i ? ", " : "") + generators[i];
    out += " |";
    for (std::size_t i = 0; i < relations.size(); ++i)
        out += (i ? ", " : " ") + relations[i].left + " = " + relations[i].right;
    return out + "⟩";
}

Presentation presentation(const Arrangement& a, const FacePoset& poset,
                          const ReflectionGroup& w) {
    auto report = check_transitive_free(w, poset);
    if (!report.pass())
        fail(ErrorKind::Symmetry,
             "chamber action is not transitive and free: " + report.witness);

    Presentation p;
    const auto& wall_ids = w.generator_walls();
    for (std::size_t i = 0; i < wall_ids.size(); ++i) p.generators.push_back(generator_name(i));

    for (std::size_t i = 0; i < wall_ids.size(); ++i) {
        for (std::size_t j = i + 1; j < wall_ids.size(); ++j) {
            std::size_t m = coxeter_exponent(a, wall_ids[i], wall_ids[j]);
            Relation rel{i, j, m, "", ""};
            for (std::size_t k = 0; k < m; ++k) {
                rel.left += p.generators[k % 2 == 0 ? i : j];
                rel.right += p.generators[k % 2 == 0 ? j : i];
            }
            p.relations.push_back(std::move(rel));
        }
    }
    return p;
}

std::pair<std::string, std::string> relation_from_word(const Word& word,
                                                       const std::vector<std::string>& names) {
    const std::size_t len = word.size();
    if (len == 0 || len % 2 != 0)
        fail(ErrorKind::Invalid, "boundary word must have positive even length");
    const std::size_t half = len / 2;

    for (std::size_t r = 0; r < len; ++r) {
        bool split = true;
        for (std::size_t k = 0; k < len && split; ++k)
            split = (word[(r + k) % len].exp > 0) == (k < half);
        if (!split) continue;

        std::string pos, inv;
        for (std::size_t k = 0; k < half; ++k) pos += names[word[(r + k) % len].gen];
        for (std::size_t k = len; k > half; --k) inv += names[word[(r + k - 1) % len].gen];
        return pos <= inv ? std::make_pair(pos, inv) : std::make_pair(inv, pos);
    }
    fail(ErrorKind::Invalid, "boundary word does not split into positive and negative halves");
}

std::vector<HomologyGroup> quotient_homology(const Arrangement& a, const FacePoset& poset,
                                             const ReflectionGroup& w) {
    auto quotient = quotient_sal(build_salvetti(poset), w);
    if (quotient.counts_by_dim() != std::vector<std::size_t>{1, 2, 1})
        fail(ErrorKind::Precondition,
             "quotient homology is implemented for single-vertex rank-2 quotients only");

    Word word = boundary_word(a, poset, w);
    ChainComplex cc;
    cc.ranks = {1, 2, 1};
    cc.boundary.resize(3);
    cc.boundary[1] = IntMat(1, std::vector<Int>(2, 0));
    cc.boundary[2] = IntMat(2, std::vector<Int>(1, 0));
    for (const auto& letter : word) cc.boundary[2][letter.gen][0] += letter.exp;
    return homology(cc);
}

} // namespace arrtop
