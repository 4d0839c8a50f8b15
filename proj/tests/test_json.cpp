#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "kmp/json_io.hpp"
#include "kmp/poincare.hpp"

using namespace kmp;

TEST_CASE("cartan input schema") {
    auto v = parse_input_text(R"({"cartan": [[2,-1],[-1,2]]})");
    REQUIRE(std::holds_alternative<CartanMatrix>(v));
    CHECK(std::get<CartanMatrix>(v).rank() == 2);

    CHECK_THROWS_WITH(parse_input_text(R"({"cartan": [[2,-1],[0,2]]})"),
                      Catch::Matchers::ContainsSubstring("a[2][1] = 0"));
    CHECK_THROWS_WITH(parse_input_text(R"({"cartan": [[2,-1]]})"),
                      Catch::Matchers::ContainsSubstring("square"));
    CHECK_THROWS_WITH(parse_input_text("{}"), Catch::Matchers::ContainsSubstring("cartan"));
    CHECK_THROWS_WITH(parse_input_text("not json"), Catch::Matchers::ContainsSubstring("malformed JSON"));
}

TEST_CASE("coxeter graph input schema") {
    auto v = parse_input_text(R"({"coxeter_graph": {"n":3, "edges":[[1,2,2],[1,3,3],[2,3,4]]}})");
    REQUIRE(std::holds_alternative<CoxeterGraph>(v));
    const CoxeterGraph& g = std::get<CoxeterGraph>(v);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(0, 2) == 3);
    CHECK(g.multiplicity(1, 2) == 4);
    CartanMatrix A = g.to_cartan();
    CHECK(A == fixtures::graph_234().to_cartan());

    CHECK_THROWS_AS(parse_input_text(R"({"coxeter_graph": {"n":2, "edges":[[1,1,1]]}})"), InputError);
    CHECK_THROWS_AS(parse_input_text(R"({"coxeter_graph": {"n":2, "edges":[[1,5,1]]}})"), InputError);
}

TEST_CASE("rational function serialization round-trips", "[property]") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> n, d;
        for (int i = 0; i < 5; ++i) n.emplace_back(coeff(rng));
        for (int i = 0; i < 5; ++i) d.emplace_back(coeff(rng));
        IntPoly den(d);
        if (den.is_zero()) continue;
        RatFunc f(IntPoly(n), den);
        CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);
    }
}

TEST_CASE("big coefficients serialize as decimal strings") {
    Int big("123456789012345678901234567890");
    RatFunc f(IntPoly(std::vector<Int>{big}), IntPoly{1, -1});
    Json j = ratfunc_to_json(f);
    CHECK(j["num"][0] == "123456789012345678901234567890");
    CHECK(ratfunc_from_json(j) == f);
}

TEST_CASE("type class serialization") {
    Engine eng;
    Json j = typeclass_to_json(eng.classify(CartanMatrix::from_rows({{2, -1}, {-1, 2}})));
    CHECK(j["components"][0]["label"] == "A2");
    CHECK(j["dim_flag"] == 3);
    Json k = typeclass_to_json(eng.classify(fixtures::triangle_tail()));
    CHECK(k["dim_flag"] == "infinity");
}
