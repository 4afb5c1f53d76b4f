#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrtop/sign.hpp"

using namespace arrtop;

TEST_CASE("sign vector validation") {
    CHECK(SignVector("+-0").str() == "+-0");
    CHECK(SignVector::zero(3).str() == "000");
    CHECK_THROWS_AS(SignVector("+x0"), Error);
    CHECK(SignVector("").size() == 0);
    CHECK(SignVector("000").is_zero());
    CHECK(SignVector("+-+").nowhere_zero());
    CHECK(SignVector("+0-").zero_set() == std::vector<std::size_t>{1});
}

TEST_CASE("opposite and composition") {
    CHECK(opposite(SignVector("+-0")).str() == "-+0");
    CHECK(compose(SignVector("+0-"), SignVector("-+0")).str() == "++-");
    CHECK(compose(SignVector("000"), SignVector("-+0")).str() == "-+0");
    CHECK(compose(SignVector("-+0"), SignVector("000")).str() == "-+0");

    SignVector x("+-0"), y("0+-"), z("-0+");
    // composition is associative and idempotent on the left argument
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(x, x) == x);
    CHECK(compose(compose(x, y), y) == compose(x, y));
}

TEST_CASE("separation set") {
    CHECK(separation(SignVector("++-"), SignVector("-+-")) == std::vector<std::size_t>{0});
    CHECK(separation(SignVector("+0-"), SignVector("-0+")) == (std::vector<std::size_t>{0, 2}));
    CHECK(separation(SignVector("+0-"), SignVector("+0-")).empty());
    CHECK(separation(SignVector("0+0"), SignVector("00+")).empty());
}

TEST_CASE("componentwise order") {
    CHECK(sign_leq(SignVector("000"), SignVector("+-+")));
    CHECK(sign_leq(SignVector("0+0"), SignVector("-+-")));
    CHECK(sign_leq(SignVector("+-"), SignVector("+-")));
    CHECK_FALSE(sign_leq(SignVector("+-"), SignVector("++")));
    CHECK_FALSE(sign_leq(SignVector("+0"), SignVector("0+")));
}

namespace {

std::vector<SignVector> coords_covectors() {
    std::vector<SignVector> out;
    for (const char* s : {"++", "+-", "-+", "--", "+0", "-0", "0+", "0-", "00"})
        out.emplace_back(s);
    return out;
}

} // namespace

TEST_CASE("axioms pass on four quadrants") {
    auto rep = check_covector_axioms(coords_covectors());
    CHECK(rep.l0);
    CHECK(rep.l1);
    CHECK(rep.l2);
    CHECK(rep.l3);
    CHECK(rep.pass());
    CHECK(rep.witness.empty());
}

TEST_CASE("axiom failures carry witnesses") {
    auto vs = coords_covectors();

    SUBCASE("missing zero") {
        vs.erase(std::remove(vs.begin(), vs.end(), SignVector("00")), vs.end());
        auto rep = check_covector_axioms(vs);
        CHECK_FALSE(rep.l0);
        CHECK(rep.witness == "L0: zero covector missing");
    }
    SUBCASE("missing opposite") {
        vs.erase(std::remove(vs.begin(), vs.end(), SignVector("-0")), vs.end());
        auto rep = check_covector_axioms(vs);
        CHECK_FALSE(rep.l1);
        CHECK(rep.witness.find("+0") != std::string::npos);
    }
    SUBCASE("missing composition") {
        // drop an opposite pair so the failure is attributed to composition
        vs.erase(std::remove(vs.begin(), vs.end(), SignVector("+-")), vs.end());
        vs.erase(std::remove(vs.begin(), vs.end(), SignVector("-+")), vs.end());
        auto rep = check_covector_axioms(vs);
        CHECK(rep.l1);
        CHECK_FALSE(rep.l2);
        CHECK(rep.witness.find("L2") != std::string::npos);
    }
    SUBCASE("elimination fails without the axis") {
        // keep the four chambers and zero: eliminating between ++ and --
        // needs a covector vanishing on one coordinate only
        std::vector<SignVector> vs2;
        for (const char* s : {"++", "+-", "-+", "--", "00"}) vs2.emplace_back(s);
        auto rep = check_covector_axioms(vs2);
        CHECK(rep.l0);
        CHECK(rep.l1);
        CHECK_FALSE(rep.l3);
        CHECK(rep.witness.find("L3") != std::string::npos);
    }
}

TEST_CASE("axioms reject mixed arity") {
    std::vector<SignVector> vs{SignVector("00"), SignVector("+")};
    CHECK_THROWS_AS(check_covector_axioms(vs), Error);
}

TEST_CASE("longest chain counts both conventions") {
    auto stats = longest_chain(coords_covectors());
    CHECK(stats.rank_elements == 3);  // 00 < 0+ < ++
    CHECK(stats.rank_edges == 2);

    std::vector<SignVector> point{SignVector("")};
    auto trivial = longest_chain(point);
    CHECK(trivial.rank_elements == 1);
    CHECK(trivial.rank_edges == 0);
}

TEST_CASE("complex sign order") {
    using C = ComplexSign;
    for (C s : {C::plus, C::minus, C::zero, C::im, C::neg_im}) CHECK(complex_sign_leq(s, s));
    CHECK(complex_sign_leq(C::zero, C::plus));
    CHECK(complex_sign_leq(C::zero, C::neg_im));
    CHECK(complex_sign_leq(C::plus, C::im));
    CHECK(complex_sign_leq(C::plus, C::neg_im));
    CHECK(complex_sign_leq(C::minus, C::im));
    CHECK_FALSE(complex_sign_leq(C::plus, C::minus));
    CHECK_FALSE(complex_sign_leq(C::im, C::neg_im));
    CHECK_FALSE(complex_sign_leq(C::im, C::plus));
    CHECK_FALSE(complex_sign_leq(C::plus, C::zero));

    CHECK(complex_sign_leq(ComplexSignVector("+0"), ComplexSignVector("+i")));
    CHECK(complex_sign_leq(ComplexSignVector("+-"), ComplexSignVector("ij")));
    CHECK_FALSE(complex_sign_leq(ComplexSignVector("+i"), ComplexSignVector("++")));
    CHECK_THROWS_AS(ComplexSignVector("+k"), Error);
}
