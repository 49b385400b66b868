#include "support.hpp"

#include "relalg/dot.hpp"
#include "relalg/error.hpp"
#include "relalg/fixtures.hpp"
#include "relalg/serialization.hpp"

#include <doctest.h>

using namespace relalg;
using relalg::testing::structure_file;
using relalg::testing::unit_file;

TEST_SUITE("serialization")
{
    TEST_CASE("fixture files load")
    {
        const auto full2 = io::load_structure(io::read_file(structure_file("FULL2")));
        CHECK(full2.size() == 4);
        CHECK(full2.identity() == full2.element({"e00", "e11"}));
        const auto arrow = io::load_structure(io::read_file(structure_file("ARROW")));
        CHECK(arrow.size() == 1);
        CHECK(arrow.identity().empty());
        CHECK_FALSE(arrow.converse_of(0));
        CHECK(arrow.comp(0, 0).empty());
    }

    TEST_CASE("fixture files match the built-in catalog")
    {
        for (const auto &f : fixtures::all()) {
            CHECK_MESSAGE(io::read_file(structure_file(f.name)) == io::dump(io::to_json(f.structure)), f.name);
            CHECK(io::load_structure(io::read_file(structure_file(f.name))) == f.structure);
            if (f.has_unit) {
                CHECK(io::load_unit(io::read_file(unit_file(f.name))) == f.unit);
                CHECK(build_concrete(io::load_unit(io::read_file(unit_file(f.name)))) == f.structure);
            }
        }
    }

    TEST_CASE("structure JSON round-trips")
    {
        std::mt19937_64 rng{41};
        for (int i = 0; i < 50; ++i) {
            const auto s = testing::random_structure(rng, 1 + rng() % 6);
            const auto text = io::dump(io::to_json(s));
            CHECK(io::load_structure(text) == s);
            CHECK(io::dump(io::to_json(io::load_structure(text))) == text);
        }
    }

    TEST_CASE("structure files are validated")
    {
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a","b","c"],"converse":{"a":["b","c"]}})"), ValidationError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a","b"],"converse":{"a":"b","a":"a"}})"), ParseError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a","a"]})"), ValidationError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a"],"identity":["b"]})"), ValidationError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a"],"composition":{"a":{"a":["z"]}}})"), ValidationError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a"],"h":["t"]})"), ValidationError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a"],"colour":1})"), ParseError);
        CHECK_THROWS_AS(io::load_structure(R"({"atoms":["a"])"), ParseError);
        CHECK_THROWS_AS(io::load_structure(R"([1,2])"), ParseError);
        CHECK_THROWS_AS(io::load_structure(R"({"identity":[]})"), ParseError);
    }

    TEST_CASE("omitted entries mean zero")
    {
        const auto s = io::load_structure(R"({"atoms":["a","b"],"converse":{"a":[]},"composition":{"a":{"b":["a"]}}})");
        CHECK_FALSE(s.converse_of(0));
        CHECK(s.comp(0, 1) == s.element({"a"}));
        CHECK(s.comp(1, 0).empty());
        CHECK(s.flags() == HFlags{});
    }

    TEST_CASE("unit files")
    {
        const auto u = io::load_unit(R"({"base":["x","y"],"unit":[["x","y"],["y","x"]]})");
        CHECK(u.pairs == std::vector<PointPair>{{0, 1}, {1, 0}});
        const auto s = build_concrete(u);
        CHECK(s.names() == std::vector<std::string>{"exy", "eyx"});
        CHECK_THROWS_AS(io::load_unit(R"({"base":["x"],"unit":[["x","y"]]})"), ValidationError);
        CHECK_THROWS_AS(io::load_unit(R"({"base":["x"],"unit":[["x"]]})"), ParseError);
        CHECK_THROWS_AS(io::load_unit(R"({"base":["x"],"unit":[["x","x"]],"names":["a","b"]})"), ValidationError);
        CHECK(io::load_unit(io::dump(io::to_json(u))) == u);
    }

    TEST_CASE("network files")
    {
        const auto s = fixtures::full2();
        const auto n = io::network_from_json(io::parse_json(R"({"nodes":[0,1],"edges":[{"from":0,"to":1,"atom":"e01"}]})"), s);
        CHECK(n.label(NodeId{0}, NodeId{1}) == s.index("e01"));
        CHECK(io::network_from_json(io::to_json(n, s), s) == n);
        CHECK_THROWS_AS(io::network_from_json(io::parse_json(R"({"nodes":[0],"edges":[{"from":0,"to":1,"atom":"e01"}]})"), s),
            ValidationError);
        CHECK_THROWS_AS(io::network_from_json(io::parse_json(R"({"nodes":[0],"edges":[{"from":0,"to":0,"atom":"zz"}]})"), s),
            ValidationError);
        CHECK_THROWS_AS(io::network_from_json(io::parse_json(R"({"nodes":[-1],"edges":[]})"), s), ParseError);
    }

    TEST_CASE("trace JSON carries the schema and the pending queue")
    {
        PlayOptions o;
        o.rounds = 5;
        const auto t = run_game(fixtures::full3(), o);
        const auto j = io::to_json(t);
        CHECK(j["schema"] == io::trace_schema);
        CHECK(j["rounds"].size() == 5);
        CHECK(j["pending_count"] == 20);
        CHECK(j["pending"].size() == 20);
        CHECK(j["saturated"] == false);
        CHECK(j["warnings"].size() == 1);
        CHECK(j["rounds"][0]["move"]["type"] == "atom");
        CHECK(j["rounds"][0]["move"]["atom"] == "e00");
    }

    TEST_CASE("report JSON")
    {
        const auto bad = fixtures::full2_bad();
        const auto j = io::to_json(check_axioms(bad), bad);
        CHECK(j["passed"] == false);
        bool found = false;
        for (const auto &v : j["axioms"])
            if (v["axiom"] == "Ax 6") {
                found = true;
                CHECK(v["counterexample"]["assignment"]["x"] == io::Json::array({"e01"}));
            }
        CHECK(found);
        const auto none = io::to_json(brute_force_representation(bad, 2), bad);
        CHECK(none["result"] == "none up to bound");
    }

    TEST_CASE("DOT export draws converse edges and loops dashed")
    {
        ProfiledStructure p{fixtures::full2()};
        const auto n = initial_network(p, p.structure().index("e01"), NodeId{0}, NodeId{1});
        const auto dot = to_dot(n, p.structure());
        CHECK(dot.find("n0 -> n1 [label=\"e01\"];") != std::string::npos);
        CHECK(dot.find("n1 -> n0 [label=\"e10\", style=dashed];") != std::string::npos);
        CHECK(dot.find("n0 -> n0 [label=\"e00\", style=dashed];") != std::string::npos);
        CHECK(dot.starts_with("digraph"));
    }
}
