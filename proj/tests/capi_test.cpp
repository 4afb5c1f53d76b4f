#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <arrtop.h>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    arrtop_string_free(s);
    return out;
}

struct Handle {
    arrtop_arrangement* a = nullptr;
    ~Handle() { arrtop_arrangement_free(a); }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("builtin lifecycle") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("coords", 0, &h.a) == ARRTOP_OK);
    REQUIRE(h.a != nullptr);
    CHECK(arrtop_arrangement_dimension(h.a) == 2);
    CHECK(arrtop_arrangement_size(h.a) == 2);

    Handle braid;
    REQUIRE(arrtop_arrangement_builtin("braid:3", 1, &braid.a) == ARRTOP_OK);
    CHECK(arrtop_arrangement_dimension(braid.a) == 2);
    CHECK(arrtop_arrangement_size(braid.a) == 3);
}

TEST_CASE("builtin failures") {
    int sentinel = 0;
    arrtop_arrangement* a = reinterpret_cast<arrtop_arrangement*>(&sentinel);
    CHECK(arrtop_arrangement_builtin("foo", 0, &a) == ARRTOP_INVALID);
    CHECK(a == nullptr);  // cleared before any work
    CHECK(contains(arrtop_last_error(), "unknown builtin 'foo'"));

    CHECK(arrtop_arrangement_builtin("coords", 1, &a) == ARRTOP_INVALID);
    CHECK(std::string(arrtop_last_error()) == "only braid builtins support --essentialize");

    CHECK(arrtop_arrangement_builtin("dihedral:x", 0, &a) == ARRTOP_INVALID);
    CHECK(arrtop_arrangement_builtin("braid:1", 0, &a) == ARRTOP_INVALID);
}

TEST_CASE("json input") {
    Handle h;
    const char* text = R"({"dimension": 2, "hyperplanes": [["1", "0"], ["0", "1"], ["1", "-1/2"]]})";
    REQUIRE(arrtop_arrangement_from_json(text, &h.a) == ARRTOP_OK);
    CHECK(arrtop_arrangement_size(h.a) == 3);

    char* round = nullptr;
    REQUIRE(arrtop_arrangement_json(h.a, &round) == ARRTOP_OK);
    std::string dumped = take(round);
    CHECK(contains(dumped, "\"dimension\": 2"));
    CHECK(contains(dumped, "\"-1/2\""));

    Handle again;
    REQUIRE(arrtop_arrangement_from_json(dumped.c_str(), &again.a) == ARRTOP_OK);
    CHECK(arrtop_arrangement_size(again.a) == 3);
}

TEST_CASE("json parse failures") {
    arrtop_arrangement* a = nullptr;
    CHECK(arrtop_arrangement_from_json("{not json", &a) == ARRTOP_PARSE);
    CHECK(contains(arrtop_last_error(), "bad JSON:"));
    CHECK(arrtop_arrangement_from_json("{\"dimension\": 2}", &a) == ARRTOP_PARSE);
    CHECK(arrtop_arrangement_from_json(
              R"({"dimension": 2, "hyperplanes": [["1/0", "1"]]})", &a) == ARRTOP_PARSE);
    CHECK(arrtop_arrangement_from_json(
              R"({"dimension": 2, "hyperplanes": [["1", "0", "0"]]})", &a) == ARRTOP_PARSE);
    // duplicate hyperplane is structurally valid JSON but invalid input
    CHECK(arrtop_arrangement_from_json(
              R"({"dimension": 2, "hyperplanes": [["1", "0"], ["2", "0"]]})", &a) ==
          ARRTOP_INVALID);
}

TEST_CASE("null arguments") {
    char* out = nullptr;
    CHECK(arrtop_arrangement_from_json(nullptr, nullptr) == ARRTOP_INVALID);
    CHECK(std::string(arrtop_last_error()) == "null argument");
    CHECK(arrtop_faces(nullptr, 12, ARRTOP_FORMAT_JSON, &out) == ARRTOP_INVALID);
    CHECK(arrtop_check_faces("{}", ARRTOP_FORMAT_JSON, nullptr, nullptr) == ARRTOP_INVALID);
    CHECK(arrtop_arrangement_dimension(nullptr) == 0);
    arrtop_arrangement_free(nullptr);
    arrtop_string_free(nullptr);
}

TEST_CASE("faces rendering") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("coords", 0, &h.a) == ARRTOP_OK);

    char* out = nullptr;
    REQUIRE(arrtop_faces(h.a, 12, ARRTOP_FORMAT_JSON, &out) == ARRTOP_OK);
    std::string js = take(out);
    CHECK(contains(js, "\"counts_by_codim\""));
    CHECK(contains(js, "\"covector\": \"00\""));
    CHECK(contains(js, "\"covering_edges\""));

    REQUIRE(arrtop_faces(h.a, 12, ARRTOP_FORMAT_JSON, &out) == ARRTOP_OK);
    CHECK(take(out) == js);  // byte-identical rerun

    REQUIRE(arrtop_faces(h.a, 12, ARRTOP_FORMAT_DOT, &out) == ARRTOP_OK);
    std::string dot = take(out);
    CHECK(contains(dot, "digraph"));
    CHECK(contains(dot, "rankdir=BT"));

    REQUIRE(arrtop_faces(h.a, 12, ARRTOP_FORMAT_TEXT, &out) == ARRTOP_OK);
    std::string text = take(out);
    CHECK(contains(text, "faces: 9"));
    CHECK(contains(text, "chambers: 4"));
}

TEST_CASE("enumeration cap propagates") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("braid:6", 0, &h.a) == ARRTOP_OK);
    char* out = nullptr;
    CHECK(arrtop_faces(h.a, 12, ARRTOP_FORMAT_JSON, &out) == ARRTOP_PRECONDITION);
    CHECK(std::string(arrtop_last_error()) ==
          "enumeration refused: 15 hyperplanes exceed the cap of 12");
    REQUIRE(arrtop_faces(h.a, 15, ARRTOP_FORMAT_TEXT, &out) == ARRTOP_OK);
    CHECK(contains(take(out), "chambers: 720"));
}

TEST_CASE("salvetti rendering") {
    Handle raw;
    REQUIRE(arrtop_arrangement_builtin("braid:3", 0, &raw.a) == ARRTOP_OK);
    char* out = nullptr;
    CHECK(arrtop_salvetti(raw.a, 12, 0, ARRTOP_FORMAT_JSON, &out) == ARRTOP_PRECONDITION);
    CHECK(std::string(arrtop_last_error()) == "arrangement is not essential");

    Handle ess;
    REQUIRE(arrtop_arrangement_builtin("braid:3", 1, &ess.a) == ARRTOP_OK);
    REQUIRE(arrtop_salvetti(ess.a, 12, 1, ARRTOP_FORMAT_JSON, &out) == ARRTOP_OK);
    std::string js = take(out);
    CHECK(contains(js, "\"cell_counts_by_dim\": ["));
    CHECK(contains(js, "\"homology\""));
    CHECK(contains(js, "\"correspondence\""));
    CHECK(contains(js, "\"embedded_vertices\""));

    REQUIRE(arrtop_salvetti(ess.a, 12, 1, ARRTOP_FORMAT_JSON, &out) == ARRTOP_OK);
    CHECK(take(out) == js);
}

TEST_CASE("presentation rendering") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("braid:4", 1, &h.a) == ARRTOP_OK);
    char* out = nullptr;
    REQUIRE(arrtop_presentation(h.a, 12, ARRTOP_FORMAT_TEXT, &out) == ARRTOP_OK);
    CHECK(contains(take(out), "aba = bab, ac = ca, bcb = cbc"));

    Handle lines;
    REQUIRE(arrtop_arrangement_from_json(
                R"({"dimension": 2, "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]]})",
                &lines.a) == ARRTOP_OK);
    CHECK(arrtop_presentation(lines.a, 12, ARRTOP_FORMAT_JSON, &out) == ARRTOP_SYMMETRY);
    CHECK(contains(arrtop_last_error(), "not a reflection symmetry"));
}

TEST_CASE("group rendering") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("dihedral:5", 0, &h.a) == ARRTOP_OK);
    char* out = nullptr;
    REQUIRE(arrtop_group(h.a, 12, &out) == ARRTOP_OK);
    std::string js = take(out);
    CHECK(contains(js, "\"order\": 10"));
    CHECK(contains(js, "\"generator_walls\""));
}

TEST_CASE("checks") {
    Handle h;
    REQUIRE(arrtop_arrangement_builtin("coords", 0, &h.a) == ARRTOP_OK);
    char* out = nullptr;
    int all = -1, sym = -1;
    REQUIRE(arrtop_check(h.a, 12, 20260815, ARRTOP_FORMAT_JSON, &all, &sym, &out) == ARRTOP_OK);
    std::string js = take(out);
    CHECK(all == 1);
    CHECK(sym == 1);
    CHECK(contains(js, "\"all_pass\": true"));
    CHECK(contains(js, "\"covector_axioms\""));
    CHECK(contains(js, "\"oracle\""));
    CHECK(std::string(arrtop_last_error()).empty());
}

TEST_CASE("face file checks") {
    char* out = nullptr;
    int all = -1;
    REQUIRE(arrtop_check_faces(R"({"covectors": ["00", "0+", "0-", "+0", "-0",
                                                 "++", "+-", "-+", "--"]})",
                               ARRTOP_FORMAT_TEXT, &all, &out) == ARRTOP_OK);
    CHECK(all == 1);
    CHECK(contains(take(out), "pass"));

    REQUIRE(arrtop_check_faces(R"({"covectors": ["0+", "++"]})", ARRTOP_FORMAT_TEXT, &all,
                               &out) == ARRTOP_OK);
    CHECK(all == 0);
    CHECK(contains(take(out), "L0: zero covector missing"));

    CHECK(arrtop_check_faces("{}", ARRTOP_FORMAT_TEXT, &all, &out) == ARRTOP_PARSE);
    CHECK(std::string(arrtop_last_error()) ==
          "face file needs a \"covectors\" or \"faces\" array");
}
