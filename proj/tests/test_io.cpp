#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "dsneg/errors.hpp"
#include "dsneg/io.hpp"
#include "support.hpp"

using namespace dsneg;
using nlohmann::json;
using test::letters;

namespace {

Document parse(const char* text) {
    std::istringstream in(text);
    return load_document(in);
}

}  // namespace

TEST_CASE("parses a structure document") {
    Document doc = parse(R"({
        "frame": ["a", "b", "c"],
        "masses": [
            {"set": ["a"], "mass": 0.7},
            {"set": ["b", "c"], "mass": 0.1},
            {"set": ["a", "b", "c"], "mass": 0.2}
        ]
    })");
    REQUIRE(std::holds_alternative<BeliefStructure>(doc));
    const auto& m = std::get<BeliefStructure>(doc);
    CHECK(m.frame().size() == 3);
    CHECK(m.focal_count() == 3);
    CHECK(m.mass(m.frame().subset(0b001)) == 0.7);
    CHECK(m.mass(m.frame().subset(0b110)) == 0.1);
    CHECK(m.mass(m.frame().full_set()) == 0.2);
}

TEST_CASE("parses a distribution document") {
    Document doc = parse(R"({"frame": ["a", "b", "c"], "probs": [0.7, 0.1, 0.2]})");
    REQUIRE(std::holds_alternative<ProbabilityDistribution>(doc));
    const auto& p = std::get<ProbabilityDistribution>(doc);
    CHECK(p.size() == 3);
    CHECK(p[0] == 0.7);
    CHECK(p[1] == 0.1);
    CHECK(p[2] == 0.2);
}

TEST_CASE("rejects documents with the wrong shape") {
    CHECK_THROWS_AS(parse("[1, 2, 3]"), SchemaError);
    CHECK_THROWS_AS(parse(R"("hello")"), SchemaError);
    CHECK_THROWS_AS(parse("not json at all"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "probs": [0.5, 0.5],
                             "masses": []})"),
                    SchemaError);
    CHECK_THROWS_AS(parse(R"({"masses": [{"set": ["a"], "mass": 1.0}]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": "ab", "probs": [0.5, 0.5]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", 2], "probs": [0.5, 0.5]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "masses": 7})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "masses": [7]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "masses": [{"set": ["a"]}]})"),
                    SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "masses": [{"mass": 1.0}]})"),
                    SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": "x"}]})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"frame": ["a", "b"], "masses": [{"set": [1], "mass": 1.0}]})"),
        SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "probs": "half"})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "probs": [0.5, "x"]})"), SchemaError);
}

TEST_CASE("propagates domain violations as validation errors") {
    // unknown set member
    CHECK_THROWS_AS(
        parse(R"({"frame": ["a", "b"], "masses": [{"set": ["z"], "mass": 1.0}]})"),
        ValidationError);
    // duplicate frame label
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "a"], "probs": [0.5, 0.5]})"),
                    ValidationError);
    // masses not summing to one
    CHECK_THROWS_AS(
        parse(R"({"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.5}]})"),
        ValidationError);
    // mass on the empty set
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"],
                              "masses": [{"set": [], "mass": 0.5},
                                         {"set": ["a"], "mass": 0.5}]})"),
                    ValidationError);
    // wrong probability count
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "probs": [1.0]})"), ValidationError);
    // probability out of range
    CHECK_THROWS_AS(parse(R"({"frame": ["a", "b"], "probs": [1.5, -0.5]})"),
                    ValidationError);
}

TEST_CASE("load_document reports unreadable files") {
    CHECK_THROWS_AS(load_document("/nonexistent/input.json"), SchemaError);
}

TEST_CASE("serializes structures with focal elements in frame-mask order") {
    Frame abc = letters(3);
    BeliefStructure m(abc, {{abc.full_set(), 0.2},
                            {abc.subset(0b110), 0.1},
                            {abc.subset(0b001), 0.7}});
    json j = to_json(m);
    CHECK(j["frame"] == json::array({"a", "b", "c"}));
    REQUIRE(j["masses"].size() == 3);
    CHECK(j["masses"][0]["set"] == json::array({"a"}));
    CHECK(j["masses"][0]["mass"] == 0.7);
    CHECK(j["masses"][1]["set"] == json::array({"b", "c"}));
    CHECK(j["masses"][2]["set"] == json::array({"a", "b", "c"}));
}

TEST_CASE("serializes distributions in frame order") {
    Frame abc = letters(3);
    json j = to_json(ProbabilityDistribution(abc, {0.7, 0.1, 0.2}));
    CHECK(j["frame"] == json::array({"a", "b", "c"}));
    CHECK(j["probs"] == json::array({0.7, 0.1, 0.2}));
}

TEST_CASE("round_for_output keeps 12 significant digits") {
    CHECK(round_for_output(0.7) == 0.7);
    CHECK(round_for_output(1.0 / 3.0) == 0.333333333333);
    CHECK(round_for_output(0.0) == 0.0);
    CHECK(round_for_output(1.0) == 1.0);
    CHECK(std::abs(round_for_output(0.1 + 0.2) - 0.3) < 1e-12);
}

TEST_CASE("structure documents survive a round trip") {
    std::mt19937_64 rng(1616);
    for (int trial = 0; trial < 100; ++trial) {
        Frame frame = letters(2 + trial % 7);
        BeliefStructure m = test::random_structure(rng, frame);
        std::istringstream in(to_json(m).dump());
        Document doc = load_document(in);
        REQUIRE(std::holds_alternative<BeliefStructure>(doc));
        CHECK(approx_equal(m, std::get<BeliefStructure>(doc), 1e-10));
    }
}

TEST_CASE("distribution documents survive a round trip") {
    std::mt19937_64 rng(1717);
    for (int trial = 0; trial < 100; ++trial) {
        Frame frame = letters(2 + trial % 7);
        ProbabilityDistribution p = distribution_of(test::random_bayesian(rng, frame));
        std::istringstream in(to_json(p).dump());
        Document doc = load_document(in);
        REQUIRE(std::holds_alternative<ProbabilityDistribution>(doc));
        CHECK(approx_equal(p, std::get<ProbabilityDistribution>(doc), 1e-10));
    }
}
