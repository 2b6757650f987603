#include "assoc/errors.hpp"
#include "assoc/io.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace assoc;
using namespace testing_support;

namespace {

std::string file(const std::string& name) { return read_text_file(catalog_dir() + "/" + name); }

}  // namespace

TEST_CASE("cyclotomic JSON", "[io]") {
    std::mt19937 rng(5);
    for (long n : {1L, 3L, 4L, 8L, 12L, 15L}) {
        for (int t = 0; t < 20; ++t) {
            const Cyclotomic x = random_cyclotomic(rng, n);
            CHECK(cyclotomic_from_json(cyclotomic_to_json(x)) == x);
        }
    }
    CHECK(cyclotomic_from_json(Json("3/4")) == Cyclotomic(ratio(3, 4)));
    CHECK(cyclotomic_from_json(Json(-2)) == Cyclotomic(-2L));
    CHECK(cyclotomic_from_json(Json::parse(R"([[1, "1"], [3, "-1"]])"), 8) == sqrt2());
    CHECK_THROWS_AS(cyclotomic_from_json(Json("x")), ParseError);
}

TEST_CASE("catalog files round-trip byte for byte", "[io][catalog]") {
    for (const auto& e : load_catalog_index(catalog_dir())) {
        const std::string scheme_text = file(e.scheme_file);
        CHECK(serialize_scheme(parse_scheme_file(scheme_text)) == scheme_text);
        if (!e.eigen_file.empty()) {
            const std::string eigen_text = file(e.eigen_file);
            CHECK(serialize_eigen(parse_eigen_file(eigen_text)) == eigen_text);
        }
        if (!e.group_file.empty()) {
            const std::string text = file(e.group_file);
            CHECK(serialize_group(parse_group_file(text)) == text);
        }
        if (!e.characters_file.empty()) {
            const std::string text = file(e.characters_file);
            CHECK(serialize_characters(parse_character_file(text)) == text);
        }
    }
    const std::string index = file("index.json");
    CHECK(canonical_dump(catalog_index_to_json(load_catalog_index(catalog_dir()))) == index);
}

TEST_CASE("catalog contents", "[io][catalog]") {
    std::vector<std::string> names;
    for (const auto& e : load_catalog_index(catalog_dir())) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{"x8", "y8", "coxeter", "z12", "a4", "dic3", "dic5", "dic7"});
    const auto X = entry("x8");
    CHECK(X.scheme.relation_rows() == x8_relation());
    CHECK(X.eigen->Q == x8_Q());
    CHECK(entry("y8").scheme.relation_rows() == y8_relation());
    const auto C = entry("coxeter");
    CHECK(C.eigen->Q == coxeter_Q());
    // independent construction: disjoint non-lines are adjacent
    const auto vs = coxeter_vertices();
    REQUIRE(vs.size() == 28);
    for (int x = 0; x < 28; ++x)
        for (int y = 0; y < 28; ++y) {
            const auto& a = vs[static_cast<std::size_t>(x)];
            const auto& b = vs[static_cast<std::size_t>(y)];
            bool disjoint = true;
            for (int u : a)
                for (int v : b) disjoint = disjoint && u != v;
            CHECK((C.scheme.rel(x, y) == 1) == disjoint);
        }
    CHECK_THROWS_AS(entry("nope"), PreconditionError);
}

TEST_CASE("tampered catalog entries are rejected", "[io][catalog]") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "assoc_catalog_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& p : fs::directory_iterator(catalog_dir())) fs::copy_file(p.path(), dir / p.path().filename());
    {
        Json q = parse_json_text(file("a4.eigen.json"));
        q["Q"][1][3] = "-2";
        std::ofstream(dir / "a4.eigen.json") << canonical_dump(q);
    }
    CHECK_THROWS_AS(load_catalog_entry(dir.string(), "a4"), Error);
    {
        Json g = parse_json_text(file("dic5.scheme.json"));
        std::ofstream(dir / "dic3.scheme.json") << canonical_dump(g);
    }
    CHECK_THROWS_AS(load_catalog_entry(dir.string(), "dic3"), ValidationError);
    CHECK_NOTHROW(load_catalog_entry(dir.string(), "x8"));
    fs::remove_all(dir);
}

TEST_CASE("parse errors carry line numbers", "[io]") {
    try {
        parse_json_text("{\n  \"size\": 2,\n  \"relation\": [[0, 1],\n  [1, 0]\n  oops\n}\n");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.line() == 5);
    }
    CHECK_THROWS_AS(parse_scheme_file(R"({"size": 2, "classes": 2})"), ParseError);
    CHECK_THROWS_AS(parse_scheme_file(R"({"size": 2, "classes": 2, "relation": [[0, 1], [1, 1]]})"), NotAScheme);
    CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(parse_group_file(R"({"order": 2, "mult": [[0, 1], [1, 1]]})"), BadGroupTable);
}

TEST_CASE("design files", "[io]") {
    const WeightedSubset s = parse_design_file(R"({"subset": [1, 2, 5, 6]})", 8);
    CHECK(s.weights == WeightedSubset::from_subset(8, {0, 1, 4, 5}).weights);
    const WeightedSubset w = parse_design_file(R"({"weights": ["1", "1/2", "0", "0"]})", 4);
    CHECK(w.weights == std::vector<Rational>{Rational(1), ratio(1, 2), Rational(0), Rational(0)});
    CHECK_THROWS_AS(parse_design_file(R"({"subset": [0]})", 8), Error);
    CHECK_THROWS_AS(parse_design_file(R"({"subset": [9]})", 8), Error);
    CHECK_THROWS_AS(parse_design_file(R"({"weights": ["1"]})", 8), Error);
    CHECK_THROWS_AS(parse_design_file(R"({"other": 1})", 8), ParseError);
}

TEST_CASE("index lists and rendering", "[io]") {
    CHECK(parse_index_list("1,2,5,6") == std::vector<int>{1, 2, 5, 6});
    CHECK(parse_index_list("").empty());
    CHECK_THROWS_AS(parse_index_list("1,x"), PreconditionError);
    CHECK(render_table({{"a", "bb"}, {"ccc", "d"}}) == "  a  bb\nccc   d\n");
    const std::string m = render_matrix(rational_matrix({{1, -1}, {10, 2}}));
    CHECK(m.find("-1") != std::string::npos);
    CHECK(m.find("10") != std::string::npos);
}
