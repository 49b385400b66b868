#include "support.hpp"

#include "relalg/atom_calculus.hpp"
#include "relalg/axioms.hpp"
#include "relalg/error.hpp"
#include "relalg/fixtures.hpp"

#include <doctest.h>

using namespace relalg;

TEST_SUITE("atom-calculus")
{
    TEST_CASE("profiles of FULL2")
    {
        const auto s = fixtures::full2();
        const auto prof = profile_atoms(s);
        const auto e00 = s.index("e00"), e01 = s.index("e01"), e10 = s.index("e10"), e11 = s.index("e11");
        CHECK(prof[e01].conv == e10);
        CHECK(prof[e01].has_st);
        CHECK(prof[e01].s_atom == e00);
        CHECK(prof[e01].e_atom == e11);
        CHECK(prof[e10].s_atom == e11);
        CHECK(prof[e00].is_identity);
        CHECK(prof[e00].conv == e00);
        CHECK(prof[e11].s_atom == e11);
    }

    TEST_CASE("profiles without loops")
    {
        const auto arrow = profile_atoms(fixtures::arrow());
        CHECK_FALSE(arrow[0].conv);
        CHECK_FALSE(arrow[0].has_st);
        CHECK_FALSE(arrow[0].has_end);
        const auto sym = profile_atoms(fixtures::sym2());
        CHECK(sym[0].conv == 1u);
        CHECK_FALSE(sym[1].s_atom);
    }

    TEST_CASE("start atom must be unique")
    {
        // two identity atoms that both act as a left unit for a
        AtomStructureBuilder b{{"i", "j", "a"}};
        b.identity(0).identity(1).comp(0, 2, 2).comp(1, 2, 2);
        CHECK_THROWS_AS(profile_atoms(b.build()), ProfileError);
        const auto report = validate_lemmas(b.build());
        REQUIRE(report.first_failure());
        CHECK(report.first_failure()->name == "loops.exist_unique");
    }

    TEST_CASE("start atom must exist when st is non-zero")
    {
        AtomStructureBuilder b{{"i", "a", "c"}};
        b.identity(0).comp(0, 1, 2);
        CHECK_THROWS_AS(profile_atoms(b.build()), ProfileError);
    }

    TEST_CASE("splittings list atom pairs in lexicographic order")
    {
        ProfiledStructure p{fixtures::full2()};
        const auto &s = p.structure();
        const auto sp = p.splittings(s.index("e01"));
        const std::vector<std::pair<AtomIndex, AtomIndex>> expected{
            {s.index("e00"), s.index("e01")}, {s.index("e01"), s.index("e11")}};
        CHECK(std::vector(sp.begin(), sp.end()) == expected);
    }

    TEST_CASE("lemmas hold on every fixture that passes the axioms")
    {
        for (const auto &f : fixtures::all()) {
            AxiomOptions o;
            o.fallback_to_sampling = true;
            if (!check_axioms(f.structure, o).passed())
                continue;
            const auto report = validate_lemmas(f.structure);
            CHECK_MESSAGE(report.passed(), f.name);
            CHECK(report.clauses.size() == 20);
        }
    }

    TEST_CASE("lemmas hold on the three-point catalog")
    {
        for (const auto &u : testing::nonempty_catalog(3)) {
            const auto s = build_concrete(u);
            const auto report = validate_lemmas(s);
            const auto *f = report.first_failure();
            CHECK_MESSAGE(f == nullptr, (f ? f->name + ": " + f->detail : std::string{}));
        }
    }

    TEST_CASE("broken converse is reported with its witness")
    {
        AtomStructureBuilder b{{"a", "b", "c"}};
        b.converse(0, 1).converse(1, 2);
        const auto report = validate_lemmas(b.build());
        const auto *f = report.first_failure();
        REQUIRE(f);
        CHECK(f->name == "converse.involution");
        CHECK(f->witness == std::vector<AtomIndex>{0});
    }

    TEST_CASE("cycle law failure names the triple")
    {
        // FULL2 with e01 dropped from e01;e11 breaks the converse cycle laws
        const auto good = fixtures::full2();
        AtomStructureBuilder b{good};
        b.set_comp(good.index("e01"), good.index("e11"), good.zero());
        const auto report = validate_lemmas(b.build());
        CHECK_FALSE(report.passed());
        bool cycle_failed = false;
        for (const auto &c : report.clauses)
            if (c.name.starts_with("cycles.") && !c.holds) {
                cycle_failed = true;
                CHECK(c.witness.size() == 3);
                CHECK(b.build().comp(c.witness[1], c.witness[2]).contains(c.witness[0]));
            }
        CHECK(cycle_failed);
    }
}
