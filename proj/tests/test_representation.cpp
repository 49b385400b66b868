#include "support.hpp"

#include "relalg/error.hpp"
#include "relalg/fixtures.hpp"
#include "relalg/representation.hpp"

#include <doctest.h>

#include <numeric>

using namespace relalg;

namespace {

struct Pipeline {
    AtomStructure structure;
    PlayTrace trace;
    Representation rep;
    VerificationReport report;
};

Pipeline pipeline(const AtomStructure &s, std::size_t rounds, SchedulerMode mode = SchedulerMode::fifo, std::uint64_t seed = 0)
{
    PlayOptions o;
    o.rounds = rounds;
    o.mode = mode;
    o.seed = seed;
    Pipeline p{s, run_game(s, o), {}, {}};
    p.rep = extract(p.trace);
    p.report = verify(p.rep, s, status_of(p.trace));
    return p;
}

} // namespace

TEST_SUITE("representation")
{
    TEST_CASE("extract from an ARROW play")
    {
        const auto p = pipeline(fixtures::arrow(), 10);
        CHECK(p.rep.base == std::vector<NodeId>{NodeId{0}, NodeId{1}});
        CHECK(p.rep.unit == std::vector<Edge>{{NodeId{0}, NodeId{1}}});
        CHECK(p.rep.h[0] == PairSet{{NodeId{0}, NodeId{1}}});
        CHECK(p.rep.flags_observed == HFlags{false, false});
    }

    TEST_CASE("extract from a REFL1 play")
    {
        const auto p = pipeline(fixtures::refl1(), 10);
        CHECK(p.rep.base == std::vector<NodeId>{NodeId{0}});
        CHECK(p.rep.h[0] == PairSet{{NodeId{0}, NodeId{0}}});
        CHECK(p.rep.flags_observed == HFlags{true, true});
    }

    TEST_CASE("empty play gives an empty representation")
    {
        const auto p = pipeline(fixtures::full2(), 0);
        CHECK(p.rep.base.empty());
        CHECK(p.rep.unit.empty());
        CHECK(p.rep.h.size() == 4);
        CHECK(p.report.composition_complete == Verdict::pending);
        CHECK(p.report.injective_ok == Verdict::pending);
        CHECK(p.report.identity_ok);
    }

    TEST_CASE("saturated FULL2 play verifies completely")
    {
        const auto p = pipeline(fixtures::full2(), 64);
        REQUIRE(p.trace.saturated);
        CHECK(p.report.all_true());
        CHECK(p.report.reflexive_ok == true);
        CHECK(p.report.symmetric_ok == true);
        CHECK(p.rep.flags_observed == HFlags{true, true});
        CHECK(p.report.counterexamples.empty());
    }

    TEST_CASE("ARROW verifies with empty operations")
    {
        const auto p = pipeline(fixtures::arrow(), 10);
        CHECK(p.report.all_true());
        CHECK_FALSE(p.report.reflexive_ok);
        CHECK_FALSE(p.report.symmetric_ok);
        PairSet w(p.rep.unit.begin(), p.rep.unit.end());
        CHECK(re::diagonal(w).empty());
        CHECK(re::converse(w, p.rep.h[0]).empty());
        CHECK(re::compose(w, p.rep.h[0], p.rep.h[0]).empty());
    }

    TEST_CASE("unsaturated FULL3 fragment is sound with completeness pending")
    {
        const auto p = pipeline(fixtures::full3(), 5);
        CHECK_FALSE(p.trace.saturated);
        CHECK(p.report.composition_sound);
        CHECK(p.report.identity_ok);
        CHECK(p.report.converse_ok);
        CHECK(p.report.composition_complete == Verdict::pending);
        CHECK(p.report.pending == 20);
        CHECK(p.report.pending_atom_moves == 4);
        CHECK(p.report.injective_ok == Verdict::pending);
        CHECK_FALSE(p.report.all_true());
        CHECK(p.report.acceptable_partial());
    }

    TEST_CASE("soundness holds on every prefix of a play")
    {
        const auto s = fixtures::full3();
        for (std::size_t rounds : {1, 3, 9, 12, 30, 60}) {
            const auto p = pipeline(s, rounds, SchedulerMode::random, rounds);
            CHECK(p.report.identity_ok);
            CHECK(p.report.converse_ok);
            CHECK(p.report.composition_sound);
            CHECK(p.report.acceptable_partial());
        }
    }

    TEST_CASE("saturated plays verify all-true across the catalog")
    {
        for (const auto &u : testing::sampled_catalog(25, 8)) {
            const auto s = build_concrete(u);
            const auto p = pipeline(s, 2000);
            REQUIRE(p.trace.saturated);
            CHECK(p.report.all_true());
            if (s.flags().symmetric)
                CHECK(p.rep.flags_observed.symmetric);
            if (s.flags().reflexive)
                CHECK(p.rep.flags_observed.reflexive);
        }
    }

    TEST_CASE("h is a boolean homomorphism")
    {
        const auto s = fixtures::full3();
        const auto p = pipeline(s, 200);
        const PairSet w(p.rep.unit.begin(), p.rep.unit.end());
        std::mt19937_64 rng{2};
        for (int i = 0; i < 200; ++i) {
            const auto b = testing::random_element(rng, s.size()), c = testing::random_element(rng, s.size());
            PairSet both = p.rep.image(b);
            const auto hc = p.rep.image(c);
            both.insert(hc.begin(), hc.end());
            CHECK(p.rep.image(b | c) == both);
            CHECK(p.rep.image(~b) == re::complement(w, p.rep.image(b)));
            if (p.trace.saturated)
                CHECK(p.rep.image(s.compose(b, c)) == re::compose(w, p.rep.image(b), p.rep.image(c)));
        }
    }

    TEST_CASE("tampered representations are caught")
    {
        auto p = pipeline(fixtures::full2(), 64);
        const auto &s = p.structure;
        // move one pair of h(e01) to h(e10): converse and identity still fine, composition breaks
        auto rep = p.rep;
        const auto moved = *rep.h[s.index("e01")].begin();
        rep.h[s.index("e01")].erase(moved);
        rep.h[s.index("e10")].insert(moved);
        const auto r = verify(rep, s, status_of(p.trace));
        CHECK_FALSE(r.all_true());
        CHECK_FALSE(r.counterexamples.empty());
        CHECK_FALSE(r.converse_ok);

        rep = p.rep;
        rep.h[s.index("e11")].clear();
        CHECK(verify(rep, s, status_of(p.trace)).injective_ok == Verdict::fails);

        rep = p.rep;
        rep.h.pop_back();
        CHECK_THROWS_AS(verify(rep, s, status_of(p.trace)), ValidationError);
    }

    TEST_CASE("isomorphism search")
    {
        const auto full2 = fixtures::full2();
        const auto iso = find_isomorphism(full2, full2);
        REQUIRE(iso);
        const auto shuffled = testing::permute_atoms(full2, {3, 1, 0, 2});
        CHECK(find_isomorphism(full2, shuffled));
        CHECK(find_isomorphism(shuffled, full2));
        CHECK_FALSE(find_isomorphism(full2, fixtures::full2_bad()));
        CHECK_FALSE(find_isomorphism(fixtures::sym2(), fixtures::full2()));
        CHECK_FALSE(find_isomorphism(fixtures::arrow(), fixtures::refl1()));
        // SYM2 and the two-atom structure with no converse differ only in converse
        const auto two_arrows = build_concrete(make_unit(4, {{0, 1}, {2, 3}}));
        CHECK_FALSE(find_isomorphism(fixtures::sym2(), two_arrows));

        std::mt19937_64 rng{9};
        for (const auto &u : testing::sampled_catalog(20, 21)) {
            const auto s = build_concrete(u);
            std::vector<AtomIndex> perm(s.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto t = testing::permute_atoms(s, perm);
            const auto f = find_isomorphism(s, t);
            REQUIRE(f);
            for (AtomIndex a = 0; a < s.size(); ++a) {
                CHECK(s.is_identity(a) == t.is_identity((*f)[a]));
                for (AtomIndex b = 0; b < s.size(); ++b)
                    CHECK(s.comp(a, b).count() == t.comp((*f)[a], (*f)[b]).count());
            }
        }
    }

    TEST_CASE("round trips")
    {
        for (const auto &name : {"REFL1", "ARROW", "SYM2", "FULL2"}) {
            const auto &f = fixtures::by_name(name);
            const auto r = roundtrip_check(f.unit, 64);
            CHECK_MESSAGE(r.axioms_passed, name);
            CHECK_MESSAGE(r.saturated, name);
            CHECK_MESSAGE(r.verification.all_true(), name);
            CHECK_MESSAGE(r.isomorphic, name);
            REQUIRE_FALSE(r.components_isomorphic.empty());
            for (bool c : r.components_isomorphic)
                CHECK_MESSAGE(c, name);
        }
    }

    TEST_CASE("induced structure rejects a non-embedding")
    {
        auto p = pipeline(fixtures::full2(), 64);
        auto rep = p.rep;
        rep.h[0].clear();
        CHECK_FALSE(induced_structure(rep));
    }

    TEST_CASE("components are split by connectivity")
    {
        const auto p = pipeline(fixtures::sym2(), 10);
        const auto comps = unit_components(p.rep);
        REQUIRE(comps.size() == 2);
        for (const auto &c : comps) {
            CHECK(c.base.size() == 2);
            CHECK(c.pairs.size() == 2);
        }
    }
}
