#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arrtop/arrangement.hpp"
#include "arrtop/error.hpp"
#include "arrtop/salvetti.hpp"

using namespace arrtop;

namespace {

SalCell cell(const char* f, const char* c) { return SalCell{SignVector(f), SignVector(c)}; }

std::set<std::string> cell_labels(const SalPoset& sal) {
    std::set<std::string> out;
    for (const SalCell& c : sal.cells()) out.insert(c.label());
    return out;
}

} // namespace

TEST_CASE("coordinate cells") {
    auto poset = enumerate_faces(coords_arrangement());
    auto sal = build_salvetti(poset);
    REQUIRE(sal.size() == 16);
    CHECK(sal.counts_by_dim() == std::vector<std::size_t>{4, 8, 4});

    std::set<std::string> expected = {
        "(++,++)", "(+-,+-)", "(+0,++)", "(+0,+-)",
        "(-+,-+)", "(--,--)", "(-0,-+)", "(-0,--)",
        "(0+,++)", "(0+,-+)", "(0-,+-)", "(0-,--)",
        "(00,++)", "(00,+-)", "(00,-+)", "(00,--)",
    };
    CHECK(cell_labels(sal) == expected);

    // cells come out sorted, so the correspondence table has a fixed order
    std::vector<std::string> table;
    for (const SalCell& c : sal.cells()) table.push_back(to_complex_covector(c).str());
    CHECK(table == std::vector<std::string>{"++", "+-", "+i", "+j", "-+", "--", "-i", "-j",
                                            "i+", "j+", "i-", "j-", "ii", "ij", "ji", "jj"});
}

TEST_CASE("salvetti order") {
    CHECK(sal_leq(cell("++", "++"), cell("00", "++")));
    CHECK(sal_leq(cell("0+", "-+"), cell("00", "-+")));
    CHECK_FALSE(sal_leq(cell("0+", "++"), cell("00", "-+")));
    CHECK_FALSE(sal_leq(cell("00", "++"), cell("++", "++")));
    // reflexive
    CHECK(sal_leq(cell("0+", "++"), cell("0+", "++")));

    auto poset = enumerate_faces(coords_arrangement());
    auto sal = build_salvetti(poset);
    auto p = sal.as_poset();  // construction validates the order axioms
    CHECK(p.size() == 16);
    // every vertex (C,C) is minimal and every (00,C) is maximal
    for (std::size_t i = 0; i < sal.size(); ++i) {
        if (sal.dim(i) == 0)
            for (std::size_t j = 0; j < sal.size(); ++j) CHECK_FALSE(p.lt(j, i));
        if (sal.dim(i) == 2)
            for (std::size_t j = 0; j < sal.size(); ++j) CHECK_FALSE(p.lt(i, j));
    }
}

TEST_CASE("cell counts on the fixtures") {
    auto one = Arrangement::from_normals({{Rat(1)}});
    auto sal1 = build_salvetti(enumerate_faces(one));
    CHECK(sal1.counts_by_dim() == std::vector<std::size_t>{2, 2});

    auto braid = build_salvetti(enumerate_faces(braid_arrangement(3, true)));
    CHECK(braid.counts_by_dim() == std::vector<std::size_t>{6, 12, 6});
    CHECK(braid.size() == 24);
}

TEST_CASE("homology of the complexified complements") {
    // one hyperplane: the punctured complex line
    auto one = Arrangement::from_normals({{Rat(1)}});
    auto h1 = homology(sal_order_complex(build_salvetti(enumerate_faces(one))));
    REQUIRE(h1.size() == 2);
    CHECK(h1[0].betti == 1);
    CHECK(h1[1].betti == 1);

    // two coordinate lines: a torus
    auto hc = homology(sal_order_complex(build_salvetti(enumerate_faces(coords_arrangement()))));
    REQUIRE(hc.size() == 3);
    CHECK(hc[0].betti == 1);
    CHECK(hc[1].betti == 2);
    CHECK(hc[2].betti == 1);
    for (const auto& g : hc) CHECK(g.torsion.empty());

    auto hb = homology(sal_order_complex(build_salvetti(enumerate_faces(braid_arrangement(3, true)))));
    REQUIRE(hb.size() == 3);
    CHECK(hb[0].betti == 1);
    CHECK(hb[1].betti == 3);
    CHECK(hb[2].betti == 2);
    for (const auto& g : hb) CHECK(g.torsion.empty());
}

TEST_CASE("complex covector round trip") {
    for (auto a : {coords_arrangement(), braid_arrangement(3, true), dihedral_arrangement(5)}) {
        auto poset = enumerate_faces(a);
        auto sal = build_salvetti(poset);
        for (const SalCell& c : sal.cells()) {
            auto back = from_complex_covector(to_complex_covector(c), poset);
            REQUIRE(back.has_value());
            CHECK(*back == c);
        }
    }
    auto poset = enumerate_faces(braid_arrangement(3));
    CHECK_FALSE(from_complex_covector(ComplexSignVector("+-+"), poset).has_value());
    CHECK_FALSE(from_complex_covector(ComplexSignVector("0++"), poset).has_value());
}

TEST_CASE("point labeling over the complexification") {
    auto a = coords_arrangement();
    auto lbl = [&](std::vector<long> re, std::vector<long> im) {
        RatVec r, i;
        for (long x : re) r.emplace_back(x);
        for (long x : im) i.emplace_back(x);
        return complex_covector_of_point(a, r, i).str();
    };
    CHECK(lbl({1, 1}, {0, 0}) == "++");
    CHECK(lbl({0, 0}, {1, -1}) == "ij");
    CHECK(lbl({1, 0}, {5, 3}) == "+i");
    CHECK(lbl({0, 0}, {0, 0}) == "00");
    CHECK(lbl({-2, 0}, {9, -1}) == "-j");
    CHECK_THROWS_AS(complex_covector_of_point(a, RatVec{Rat(1)}, RatVec{Rat(1)}), Error);
}

TEST_CASE("order isomorphism onto the complex covectors") {
    for (auto a : {coords_arrangement(), braid_arrangement(3, true), braid_arrangement(3),
                   dihedral_arrangement(4), dihedral_arrangement(5)}) {
        auto poset = enumerate_faces(a);
        auto sal = build_salvetti(poset);
        auto rep = check_sal_complex_order_iso(a, poset, sal);
        CAPTURE(rep.witness);
        CHECK(rep.injective);
        CHECK(rep.decode_matches_image);
        CHECK(rep.order_iso);
        CHECK(rep.witness_points_match);
        CHECK(rep.pass());
    }
}

TEST_CASE("embedded vertices label correctly") {
    auto a = coords_arrangement();
    auto poset = enumerate_faces(a);
    auto sal = build_salvetti(poset);
    auto verts = embed_vertices(a, poset, sal);
    REQUIRE(verts.size() == sal.size());
    for (const auto& v : verts)
        CHECK(complex_covector_of_point(a, v.re, v.im) == to_complex_covector(v.cell));

    auto fan = dihedral_fan_arrangement(5);
    auto fposet = enumerate_faces(fan);
    CHECK_THROWS_AS(embed_vertices(fan, fposet, build_salvetti(fposet)), Error);
}

TEST_CASE("regular cell model") {
    auto a = braid_arrangement(3, true);
    auto poset = enumerate_faces(a);
    auto sal = build_salvetti(poset);
    auto model = sal_cell_complex(a, poset, sal);
    CHECK(model.counts_by_dim() == std::vector<std::size_t>{6, 12, 6});
    CHECK(model.euler_characteristic() == 0);
    CHECK(validate_cell_model(model).pass);

    auto raw = braid_arrangement(3);
    auto rposet = enumerate_faces(raw);
    CHECK_THROWS_WITH_AS(sal_cell_complex(raw, rposet, build_salvetti(rposet)),
                         "Salvetti cell model requires an essential arrangement (pass the "
                         "essentialized form instead)",
                         Error);
}

TEST_CASE("poset lookups") {
    auto sal = build_salvetti(enumerate_faces(coords_arrangement()));
    auto i = sal.index_of(cell("0+", "-+"));
    REQUIRE(i.has_value());
    CHECK(sal.cell(*i).label() == "(0+,-+)");
    CHECK(sal.dim(*i) == 1);
    CHECK_FALSE(sal.index_of(cell("0+", "--")).has_value());
}
