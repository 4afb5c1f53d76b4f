#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arrtop/lp.hpp"

using namespace arrtop;

namespace {

GeConstraint ge(std::vector<long> a, long c) {
    RatVec v;
    for (long x : a) v.emplace_back(x);
    return {std::move(v), Rat(c)};
}

} // namespace

TEST_CASE("single variable box") {
    std::vector<GeConstraint> cs{ge({1}, 2), ge({-1}, -5)};  // 2 <= x <= 5
    auto x = feasible_point(cs, 1);
    REQUIRE(x.has_value());
    CHECK(satisfies(cs, *x));

    cs.push_back(ge({1}, 6));  // now x >= 6 too
    CHECK_FALSE(feasible_point(cs, 1).has_value());
}

TEST_CASE("equality encoded as opposite inequalities") {
    // x + y = 1, x - y >= 3
    std::vector<GeConstraint> cs{ge({1, 1}, 1), ge({-1, -1}, -1), ge({1, -1}, 3)};
    auto x = feasible_point(cs, 2);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == 1);
    CHECK((*x)[0] - (*x)[1] >= 3);
}

TEST_CASE("strictness via unit margins") {
    // the open cone x > 0, y > 0, x + y < 1/2 scaled to margins of one
    std::vector<GeConstraint> cs{ge({4, 0}, 1), ge({0, 4}, 1), ge({-4, -4}, 1)};
    CHECK_FALSE(feasible_point(cs, 2).has_value());
    cs.back() = ge({-1, -1}, -100);
    auto x = feasible_point(cs, 2);
    REQUIRE(x.has_value());
    CHECK(satisfies(cs, *x));
}

TEST_CASE("degenerate rows") {
    std::vector<GeConstraint> cs{ge({0, 0}, 0)};
    CHECK(feasible_point(cs, 2).has_value());
    cs = {ge({0, 0}, 1)};
    CHECK_FALSE(feasible_point(cs, 2).has_value());
    CHECK(feasible_point({}, 3).has_value());
}

TEST_CASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(feasible_point({ge({1, 2, 3}, 0)}, 2), Error);
}

TEST_CASE("braid sign patterns") {
    // forms x1-x2, x1-x3, x2-x3 evaluated with margin one
    auto pattern = [](const char* s) {
        RatVec a12{Rat(1), Rat(-1), Rat(0)};
        RatVec a13{Rat(1), Rat(0), Rat(-1)};
        RatVec a23{Rat(0), Rat(1), Rat(-1)};
        std::vector<GeConstraint> cs;
        RatVec forms[3] = {a12, a13, a23};
        for (int i = 0; i < 3; ++i) {
            if (s[i] == '+') cs.push_back({forms[i], Rat(1)});
            if (s[i] == '-') {
                RatVec neg;
                for (const auto& c : forms[i]) neg.push_back(-c);
                cs.push_back({std::move(neg), Rat(1)});
            }
            if (s[i] == '0') {
                cs.push_back({forms[i], Rat(0)});
                RatVec neg;
                for (const auto& c : forms[i]) neg.push_back(-c);
                cs.push_back({std::move(neg), Rat(0)});
            }
        }
        return feasible_point(cs, 3);
    };

    CHECK(pattern("++-").has_value());  // x1 > x2, x1 > x3, x2 < x3: e.g. (3,1,2)
    CHECK(pattern("+0-").has_value());  // (2,1,2)
    CHECK(pattern("-0+").has_value());  // (1,2,1)
    CHECK(pattern("000").has_value());
    // patterns violating transitivity have no points
    CHECK_FALSE(pattern("+-+").has_value());
    CHECK_FALSE(pattern("+-0").has_value());
    CHECK_FALSE(pattern("0+-").has_value());
}

TEST_CASE("random feasible systems admit witnesses") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t nvars = 1 + rng() % 4;
        RatVec target(nvars);
        for (auto& t : target) t = Rat(static_cast<long>(rng() % 21) - 10);
        std::vector<GeConstraint> cs;
        std::size_t rows = 1 + rng() % 8;
        for (std::size_t r = 0; r < rows; ++r) {
            RatVec a(nvars);
            bool zero = true;
            for (auto& c : a) {
                long v = static_cast<long>(rng() % 11) - 5;
                c = Rat(v);
                zero = zero && v == 0;
            }
            if (zero) a[rng() % nvars] = Rat(1);
            cs.push_back({a, dot(a, target) - Rat(static_cast<long>(rng() % 3))});
        }
        auto x = feasible_point(cs, nvars);
        REQUIRE(x.has_value());
        CHECK(satisfies(cs, *x));
    }
}
