#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arrtop/arrangement.hpp"
#include "arrtop/error.hpp"
#include "arrtop/oracle.hpp"

using namespace arrtop;

namespace {

RatVec rv(std::vector<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Arrangement::from_normals({}), Error);
    CHECK_THROWS_AS(Arrangement::from_normals({rv({0, 0})}), Error);
    CHECK_THROWS_AS(Arrangement::from_normals({rv({1, 0}), rv({1})}), Error);
    // proportional normals describe the same hyperplane
    CHECK_THROWS_AS(Arrangement::from_normals({rv({1, 2}), rv({-2, -4})}), Error);
    CHECK_THROWS_AS(Arrangement::from_normals({rv({1, 2}), rv({2, 4})}), Error);
}

TEST_CASE("point labeling") {
    auto a = coords_arrangement();
    CHECK(covector_of_point(a, rv({3, -7})).str() == "+-");
    CHECK(covector_of_point(a, rv({0, 5})).str() == "0+");
    CHECK(covector_of_point(a, rv({0, 0})).str() == "00");
    CHECK_THROWS_AS(covector_of_point(a, rv({1, 2, 3})), Error);
}

TEST_CASE("feasible witnesses relabel to their covector") {
    auto a = braid_arrangement(3);
    for (const char* s : {"+++", "++-", "+0-", "000", "0++"}) {
        auto x = feasible_witness(a, SignVector(s));
        REQUIRE(x.has_value());
        CHECK(covector_of_point(a, *x).str() == s);
    }
    CHECK_FALSE(feasible_witness(a, SignVector("+-+")).has_value());
    CHECK_FALSE(feasible_witness(a, SignVector("+-0")).has_value());
    CHECK_THROWS_AS(feasible_witness(a, SignVector("+-")), Error);
}

TEST_CASE("coordinate faces") {
    auto poset = enumerate_faces(coords_arrangement());
    CHECK(poset.size() == 9);
    CHECK(poset.chamber_indices().size() == 4);
    CHECK(poset.face(poset.zero_index()).covector.is_zero());
    // lexicographic order of the stored covectors with '+' < '-' < '0'
    CHECK(poset.face(0).covector.str() == "++");
    CHECK(poset.covectors().back().str() == "00");
    for (const auto& f : poset.faces()) {
        REQUIRE(f.witness.has_value());
        CHECK(covector_of_point(coords_arrangement(), *f.witness) == f.covector);
    }
}

TEST_CASE("braid sizes") {
    for (std::size_t l = 2; l <= 4; ++l) {
        auto a = braid_arrangement(l);
        CHECK(a.size() == l * (l - 1) / 2);
        CHECK(a.dimension() == l);
        auto poset = enumerate_faces(a);
        CHECK(chambers(poset).size() == factorial(l));
        CHECK_FALSE(is_essential(a));

        auto e = braid_arrangement(l, true);
        CHECK(e.dimension() == l - 1);
        CHECK(is_essential(e));
        CHECK(e.essentialized());
        auto eposet = enumerate_faces(e);
        CHECK(chambers(eposet).size() == factorial(l));
        // essentialization preserves the whole face structure
        CHECK(eposet.size() == poset.size());
        std::set<std::string> covs, ecovs;
        for (const auto& f : poset.faces()) covs.insert(f.covector.str());
        for (const auto& f : eposet.faces()) ecovs.insert(f.covector.str());
        CHECK(covs == ecovs);
    }
    CHECK_THROWS_AS(braid_arrangement(1), Error);
}

TEST_CASE("essentialization frame transports forms") {
    auto e = braid_arrangement(3, true);
    REQUIRE(e.essentialized());
    const auto& fr = e.frame();
    REQUIRE(fr.basis.size() == 2);
    REQUIRE(fr.parent_normals.size() == 3);
    // a point y downstairs labels like the lifted point B^T y upstairs
    auto parent = braid_arrangement(3);
    RatVec y = rv({5, 1});
    RatVec x(3, Rat(0));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) x[c] += fr.basis[r][c] * y[r];
    CHECK(covector_of_point(e, y) == covector_of_point(parent, x));
}

TEST_CASE("enumeration cap") {
    std::vector<RatVec> normals;
    for (long k = 1; k <= 13; ++k) normals.push_back(rv({1, k}));
    auto a = Arrangement::from_normals(std::move(normals));
    CHECK_THROWS_AS(enumerate_faces(a), Error);
    CHECK_THROWS_WITH_AS(enumerate_faces(a),
                         "enumeration refused: 13 hyperplanes exceed the cap of 12", Error);
    auto poset = enumerate_faces(a, 13);
    // 13 concurrent lines: 26 rays, 26 sectors, origin
    CHECK(poset.size() == 53);
}

TEST_CASE("walls and adjacency") {
    auto a = braid_arrangement(3, true);
    auto poset = enumerate_faces(a);
    CHECK(walls(poset, SignVector("+++")) == (std::vector<std::size_t>{0, 2}));
    CHECK(walls(poset, SignVector("-++")) == (std::vector<std::size_t>{0, 1}));

    auto edges = adjacency_graph(poset);
    CHECK(edges.size() == 6);  // hexagon
    auto cs = chambers(poset);
    std::vector<std::size_t> degree(cs.size(), 0);
    for (const auto& e : edges) {
        ++degree[e.c1];
        ++degree[e.c2];
        // the shared wall separates the two chambers
        CHECK(cs[e.c1][e.hyperplane] == sign_opposite(cs[e.c2][e.hyperplane]));
    }
    for (auto d : degree) CHECK(d == 2);
}

TEST_CASE("subarrangement and restriction") {
    auto a = braid_arrangement(3, true);
    auto sub = subarrangement_at(a, SignVector("0++"));
    CHECK(sub.indices == std::vector<std::size_t>{0});
    CHECK(sub.arr.size() == 1);
    CHECK(restrict_chamber(a, SignVector("0++"), SignVector("+++")).str() == "+");
    CHECK(restrict_chamber(a, SignVector("000"), SignVector("-++")).str() == "-++");

    CHECK_THROWS_AS(subarrangement_at(a, SignVector("+++")), Error);
}

TEST_CASE("unique extension of a subchamber") {
    auto a = braid_arrangement(3, true);
    auto poset = enumerate_faces(a);
    // faces over 0++ correspond to chambers of the one-hyperplane
    // subarrangement on each side
    CHECK(unique_extension(poset, SignVector("0++"), SignVector("+")).str() == "+++");
    CHECK(unique_extension(poset, SignVector("0++"), SignVector("-")).str() == "-++");
    CHECK(unique_extension(poset, SignVector("000"), SignVector("++-")).str() == "++-");
    CHECK_THROWS_AS(unique_extension(poset, SignVector("0++"), SignVector("0")), Error);
}

TEST_CASE("dihedral realizations") {
    for (std::size_t m = 2; m <= 7; ++m) {
        auto a = dihedral_arrangement(m);
        CHECK(a.size() == m);
        CHECK(a.dimension() == 2);
        auto poset = enumerate_faces(a);
        CHECK(poset.size() == 4 * m + 1);
        CHECK(chambers(poset).size() == 2 * m);
        if (!a.combinatorial()) CHECK(is_essential(a));
    }
    CHECK(dihedral_arrangement(5).combinatorial());
    CHECK_FALSE(dihedral_arrangement(6).combinatorial());
    CHECK_THROWS_AS(dihedral_arrangement(1), Error);
}

TEST_CASE("fan mode refuses geometric questions") {
    auto a = dihedral_fan_arrangement(4);
    CHECK(a.combinatorial());
    auto poset = enumerate_faces(a);
    CHECK(poset.size() == 17);
    for (const auto& f : poset.faces()) CHECK_FALSE(f.witness.has_value());
    CHECK_THROWS_AS(covector_of_point(a, rv({1, 1})), Error);
    CHECK_THROWS_AS(feasible_witness(a, SignVector("++++")), Error);
    CHECK_THROWS_AS(sampling_oracle(a, poset, 1), Error);
}

TEST_CASE("sampling oracle agrees with enumeration") {
    for (auto a : {coords_arrangement(), braid_arrangement(3, true), braid_arrangement(3),
                   dihedral_arrangement(4)}) {
        auto poset = enumerate_faces(a);
        auto rep = sampling_oracle(a, poset, 20260815, 2000);
        CHECK(rep.subset);
        CHECK(rep.equal);
        CHECK(rep.pass());
        CHECK(rep.extra.empty());
        CHECK(rep.missing.empty());
    }
}

TEST_CASE("oracle counts flats") {
    auto a = braid_arrangement(3, true);
    auto poset = enumerate_faces(a);
    auto rep = sampling_oracle(a, poset, 7, 500);
    CHECK(rep.flats == 3);  // three lines, common point excluded
    CHECK(rep.distinct == poset.size());
}
