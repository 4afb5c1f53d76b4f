#include "arrtop/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace arrtop {

SignedPermutation induced_signed_permutation(const Arrangement& a, const RatMat& m) {
    // alpha_k o m = c * alpha_p reads as sigma(p) = k with flip sign(c): the
    // convention that makes act(g, covector(x)) == covector(m x).
    std::size_t n = a.size();
    RatMat mt = mat_transpose(m);
    SignedPermutation sp;
    sp.perm.assign(n, n);
    sp.flips.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        RatVec b = mat_vec(mt, a.normal(k));
        bool matched = false;
        for (std::size_t p = 0; p < n && !matched; ++p) {
            if (!proportional(a.normal(p), b)) continue;
            std::size_t lead = 0;
            while (a.normal(p)[lead] == 0) ++lead;
            Rat c = b[lead] / a.normal(p)[lead];
            if (sp.flips[p] != 0)
                fail(ErrorKind::Symmetry, "not a reflection symmetry: two forms map onto "
                                          "hyperplane " + std::to_string(p + 1));
            sp.perm[p] = k;
            sp.flips[p] = static_cast<std::int8_t>(c > 0 ? 1 : -1);
            matched = true;
        }
        if (!matched)
            fail(ErrorKind::Symmetry,
                 "not a reflection symmetry: the image of hyperplane " + std::to_string(k + 1) +
                     " matches no hyperplane of the arrangement");
    }
    return sp;
}

namespace {

RatMat householder_reflection(const RatVec& a) {
    std::size_t n = a.size();
    Rat aa = dot(a, a);
    RatMat s = mat_identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] -= 2 * a[i] * a[j] / aa;
    return s;
}

// Essentialized arrangements compute their reflections upstairs and conjugate
// the matrix through the frame: with x = B^T y, the induced map downstairs is
// (B B^T)^{-1} B s B^T, and the signed permutation transfers verbatim because
// the substitution preserves every form's value.
GroupElement transported_reflection(const Arrangement& a, std::size_t j) {
    const EssentializationFrame& fr = a.frame();
    Arrangement parent = Arrangement::from_normals(fr.parent_normals);
    RatMat s = householder_reflection(fr.parent_normals[j]);
    SignedPermutation sp = induced_signed_permutation(parent, s);

    RatMat bt = mat_transpose(fr.basis);
    RatMat gram = mat_mul(fr.basis, bt);
    RatMat down = mat_mul(mat_inverse(gram), mat_mul(fr.basis, mat_mul(s, bt)));
    if (!(induced_signed_permutation(a, down) == sp))
        fail(ErrorKind::Internal, "transported reflection disagrees with parent action");
    return GroupElement{std::move(sp), std::move(down), {}};
}

} // namespace

GroupElement reflection_of(const Arrangement& a, std::size_t j) {
    if (j >= a.size())
        fail(ErrorKind::Invalid, "hyperplane index out of range");
    if (a.combinatorial())
        return GroupElement{a.fan_reflection(j), std::nullopt, {}};
    if (a.essentialized())
        return transported_reflection(a, j);
    RatMat s = householder_reflection(a.normal(j));
    SignedPermutation sp = induced_signed_permutation(a, s);
    return GroupElement{std::move(sp), std::move(s), {}};
}

std::optional<std::size_t> ReflectionGroup::index_of(const SignedPermutation& sp) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].action == sp) return i;
    return std::nullopt;
}

bool ReflectionGroup::has_matrices() const {
    for (const GroupElement& g : elements_)
        if (!g.matrix) return false;
    return true;
}

ReflectionGroup generate_group(const Arrangement& a, const FacePoset& poset, std::size_t cap) {
    std::vector<SignVector> cs = chambers(poset);
    if (cs.empty())
        fail(ErrorKind::Invalid, "arrangement has no chambers");
    SignVector base = cs.front();  // chambers come lexicographically sorted

    std::vector<std::size_t> wall_ids = walls(poset, base);
    std::vector<GroupElement> gens;
    for (std::size_t wj : wall_ids) {
        GroupElement g = reflection_of(a, wj);
        if (!g.action.act(base).nowhere_zero() || g.action.act(base) == base)
            fail(ErrorKind::Symmetry, "wall reflection " + std::to_string(wj + 1) +
                                          " does not move the base chamber");
        g.word = {gens.size()};
        gens.push_back(std::move(g));
    }

    bool with_matrices = true;
    for (const GroupElement& g : gens)
        if (!g.matrix) with_matrices = false;

    std::map<SignedPermutation, std::size_t> seen;
    std::vector<GroupElement> elements;
    GroupElement id{SignedPermutation::identity(a.size()),
                    with_matrices ? std::optional<RatMat>(mat_identity(a.dimension()))
                                  : std::nullopt,
                    {}};
    seen.emplace(id.action, 0);
    elements.push_back(std::move(id));
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            SignedPermutation next = compose(gens[gi].action, elements[cur].action);
            if (seen.count(next)) continue;
            if (elements.size() >= cap)
                fail(ErrorKind::Precondition,
                     "group generation exceeded the cap of " + std::to_string(cap));
            GroupElement g;
            g.action = next;
            if (with_matrices)
                g.matrix = mat_mul(*gens[gi].matrix, *elements[cur].matrix);
            g.word.reserve(elements[cur].word.size() + 1);
            g.word.push_back(gi);
            for (std::size_t w : elements[cur].word) g.word.push_back(w);
            seen.emplace(g.action, elements.size());
            elements.push_back(std::move(g));
            queue.push_back(elements.size() - 1);
        }
    }
    return ReflectionGroup(std::move(elements), std::move(gens), std::move(wall_ids),
                           std::move(base));
}

TransitiveFreeReport check_transitive_free(const ReflectionGroup& w, const FacePoset& poset) {
    TransitiveFreeReport rep;
    std::vector<SignVector> cs = chambers(poset);
    std::set<SignVector> chamber_set(cs.begin(), cs.end());

    std::set<SignVector> orbit;
    for (const GroupElement& g : w.elements()) {
        SignVector img = g.action.act(w.base_chamber());
        if (!chamber_set.count(img)) {
            rep.witness = "image " + img.str() + " is not a chamber";
            return rep;
        }
        orbit.insert(img);
    }
    rep.transitive = orbit.size() == cs.size();
    if (!rep.transitive) {
        rep.witness = "orbit of " + w.base_chamber().str() + " covers " +
                      std::to_string(orbit.size()) + " of " + std::to_string(cs.size()) +
                      " chambers";
        return rep;
    }

    rep.free = true;
    for (const GroupElement& g : w.elements()) {
        if (g.action.is_identity()) continue;
        for (const SignVector& c : cs) {
            if (g.action.act(c) == c) {
                rep.free = false;
                rep.witness = "a nontrivial element fixes chamber " + c.str();
                return rep;
            }
        }
    }

    rep.order_matches = w.order() == cs.size();
    if (!rep.order_matches)
        rep.witness = "group order " + std::to_string(w.order()) + " vs " +
                      std::to_string(cs.size()) + " chambers";
    return rep;
}

std::vector<std::size_t> chamber_word(const ReflectionGroup& w, const SignVector& chamber) {
    std::map<SignVector, std::vector<std::size_t>> word;
    word[w.base_chamber()] = {};
    std::deque<SignVector> queue{w.base_chamber()};
    while (!queue.empty()) {
        SignVector cur = queue.front();
        queue.pop_front();
        if (cur == chamber) return word[cur];
        for (std::size_t gi = 0; gi < w.generators().size(); ++gi) {
            SignVector next = w.generators()[gi].action.act(cur);
            if (word.count(next)) continue;
            std::vector<std::size_t> nw;
            nw.reserve(word[cur].size() + 1);
            nw.push_back(gi);
            for (std::size_t x : word[cur]) nw.push_back(x);
            word[next] = std::move(nw);
            queue.push_back(next);
        }
    }
    fail(ErrorKind::Invalid, "chamber " + chamber.str() + " is not in the orbit of " +
                                 w.base_chamber().str());
}

void apply_invariant_witnesses(const Arrangement& a, FacePoset& poset,
                               const ReflectionGroup& w) {
    if (!w.has_matrices())
        fail(ErrorKind::Precondition,
             "invariant witnesses require matrix symmetries (geometric mode)");
    for (std::size_t i = 0; i < poset.size(); ++i) {
        const SignVector& f = poset.face(i).covector;
        // The unique face of the closed base chamber congruent to f, and one
        // group element carrying it here.
        std::optional<SignVector> rep;
        std::optional<std::size_t> carrier;
        for (std::size_t gi = 0; gi < w.order(); ++gi) {
            SignVector pre = w.element(gi).action.inverse().act(f);
            if (!sign_leq(pre, w.base_chamber())) continue;
            if (!rep) {
                rep = pre;
                carrier = gi;
            } else if (!(*rep == pre)) {
                fail(ErrorKind::Internal, "face " + f.str() +
                                              " is congruent to two faces of the base chamber");
            }
        }
        if (!rep)
            fail(ErrorKind::Internal,
                 "face " + f.str() + " has no congruent face in the closed base chamber");
        auto ri = poset.index_of(*rep);
        if (!ri || !poset.face(*ri).witness)
            fail(ErrorKind::Internal, "missing witness for base face " + rep->str());
        RatVec moved = mat_vec(*w.element(*carrier).matrix, *poset.face(*ri).witness);
        if (!(covector_of_point(a, moved) == f))
            fail(ErrorKind::Internal, "transported witness of " + f.str() + " mislabels");
        poset.set_witness(i, std::move(moved));
    }
}

SymmetricGroupModel symmetric_group_model(std::size_t l) {
    SymmetricGroupModel model;
    model.arrangement = braid_arrangement(l);
    model.poset = enumerate_faces(model.arrangement);
    model.group = generate_group(model.arrangement, model.poset);
    return model;
}

} // namespace arrtop
