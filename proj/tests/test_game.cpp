#include "support.hpp"

#include "relalg/error.hpp"
#include "relalg/fixtures.hpp"
#include "relalg/game.hpp"
#include "relalg/serialization.hpp"

#include <doctest.h>

#include <array>

using namespace relalg;

namespace {

// Queue size after each of the first 80 FIFO rounds on FULL3, from
// tests/oracles/reference_values.py.
constexpr std::array<std::size_t, 80> full3_fifo_pending{10, 13, 16, 19, 20, 23, 26, 29, 30, 32, 34, 36, 35, 34, 33, 35,
    34, 33, 32, 34, 33, 32, 31, 33, 35, 37, 36, 35, 34, 36, 35, 34, 33, 35, 34, 33, 32, 34, 36, 35, 34, 33, 32, 31, 30, 29,
    28, 27, 26, 25, 24, 23, 22, 21, 20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0, 0,
    0};

void check_play_invariants(const ProfiledStructure &p, const PlayTrace &trace)
{
    const auto chain = replay(trace);
    REQUIRE(chain.size() == trace.rounds.size() + 1);
    CHECK(chain.back() == trace.final_network);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const auto v = check_network(chain[k], p);
        CHECK_MESSAGE(!v, "round ", k, ": ", (v ? v->detail : ""));
        CHECK(chain[k - 1].is_subnetwork_of(chain[k]));
    }
    for (const auto &r : trace.rounds) {
        const auto *w = std::get_if<WitnessMove>(&r.move);
        if (!w || r.added_nodes.empty())
            continue;
        // fresh witnesses only ever split through non-identity atoms
        CHECK_FALSE(p.profile(w->b).is_identity);
        CHECK_FALSE(p.profile(w->c).is_identity);
    }
}

std::size_t largest_component(const PreNetwork &n)
{
    std::map<NodeId, NodeId> parent;
    std::function<NodeId(NodeId)> find = [&](NodeId x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto x : n.nodes())
        parent[x] = x;
    for (const auto &[e, a] : n.labels())
        parent[find(e.first)] = find(e.second);
    std::map<NodeId, std::size_t> size;
    std::size_t best = 0;
    for (auto x : n.nodes())
        best = std::max(best, ++size[find(x)]);
    return best;
}

} // namespace

TEST_SUITE("game")
{
    TEST_CASE("atom move on FULL2 adds the initial network on fresh nodes")
    {
        ProfiledStructure p{fixtures::full2()};
        NodeAllocator nodes;
        const auto r = respond_atom_move(p, {}, p.structure().index("e01"), nodes);
        CHECK(r.network.nodes().size() == 2);
        CHECK(r.network.edge_count() == 4);
        CHECK(r.added_edges.size() == 4);
        CHECK(r.extended);
        CHECK_FALSE(check_network(r.network, p));
    }

    TEST_CASE("atom move on ARROW adds one edge")
    {
        ProfiledStructure p{fixtures::arrow()};
        NodeAllocator nodes;
        const auto r = respond_atom_move(p, {}, 0, nodes);
        CHECK(r.network.nodes().size() == 2);
        CHECK(r.network.edge_count() == 1);
    }

    TEST_CASE("atom move leaves the old component alone")
    {
        ProfiledStructure p{fixtures::full2()};
        NodeAllocator nodes;
        const auto first = respond_atom_move(p, {}, 1, nodes);
        const auto second = respond_atom_move(p, first.network, 2, nodes);
        CHECK(first.network.is_subnetwork_of(second.network));
        for (auto x : second.added_nodes)
            CHECK_FALSE(first.network.has_node(x));
        for (const auto &[e, a] : second.added_edges) {
            CHECK_FALSE(first.network.has_node(e.first));
            CHECK_FALSE(first.network.has_node(e.second));
        }
        CHECK_THROWS_AS(respond_atom_move(p, {}, 9, nodes), InvalidMove);
    }

    TEST_CASE("witness move reuses an existing node")
    {
        ProfiledStructure p{fixtures::full2()};
        const auto &s = p.structure();
        NodeAllocator nodes;
        const auto base = respond_atom_move(p, {}, s.index("e01"), nodes).network;
        const WitnessMove m{NodeId{0}, NodeId{1}, s.index("e00"), s.index("e01")};
        const auto r = respond_witness_move(p, base, m, nodes);
        CHECK_FALSE(r.extended);
        CHECK(r.network == base);
        CHECK(r.witness == NodeId{0});
    }

    TEST_CASE("witness move on FULL3 adds a fresh node")
    {
        ProfiledStructure p{fixtures::full3()};
        const auto &s = p.structure();
        NodeAllocator nodes;
        const auto base = respond_atom_move(p, {}, s.index("e01"), nodes).network;
        const NodeId x{0}, y{1};
        const auto r = respond_witness_move(p, base, {x, y, s.index("e02"), s.index("e21")}, nodes);
        REQUIRE(r.witness);
        const auto z = *r.witness;
        CHECK_FALSE(base.has_node(z));
        CHECK(r.network.label(x, z) == s.index("e02"));
        CHECK(r.network.label(z, y) == s.index("e21"));
        CHECK(r.network.label(z, x) == s.index("e20"));
        CHECK(r.network.label(y, z) == s.index("e12"));
        CHECK(r.network.label(z, z) == s.index("e22"));
        CHECK(r.added_edges.size() == 5);
        CHECK_FALSE(check_network(r.network, p));
        // the restrictions to the old nodes, {x,z} and {z,y} are networks too
        CHECK_FALSE(check_network(restrict(r.network, base.nodes()), p));
        CHECK_FALSE(check_network(restrict(r.network, {x, z}), p));
        CHECK_FALSE(check_network(restrict(r.network, {z, y}), p));
    }

    TEST_CASE("invalid witness moves are rejected")
    {
        ProfiledStructure p{fixtures::full3()};
        const auto &s = p.structure();
        NodeAllocator nodes;
        const auto base = respond_atom_move(p, {}, s.index("e01"), nodes).network;
        CHECK_THROWS_AS(respond_witness_move(p, base, {NodeId{0}, NodeId{1}, s.index("e02"), s.index("e20")}, nodes),
            InvalidMove);
        CHECK_THROWS_AS(respond_witness_move(p, base, {NodeId{1}, NodeId{0}, s.index("e00"), s.index("e00")}, nodes),
            InvalidMove);
    }

    TEST_CASE("scheduler opens with the first atom")
    {
        ProfiledStructure p{fixtures::full2()};
        Scheduler sched{p, SchedulerMode::fifo, 0};
        CHECK(sched.pending() == 4);
        CHECK(sched.pending_atom_moves() == 4);
        CHECK(sched.next() == Move{AtomMove{0}});
    }

    TEST_CASE("ARROW saturates after its only atom move")
    {
        ProfiledStructure p{fixtures::arrow()};
        Scheduler sched{p, SchedulerMode::fifo, 0};
        NodeAllocator nodes;
        const auto m = sched.next();
        REQUIRE(m);
        const auto r = respond_atom_move(p, {}, std::get<AtomMove>(*m).atom, nodes);
        sched.observe(r.network, r.added_edges);
        CHECK(sched.saturated());
        CHECK_FALSE(sched.next());
    }

    TEST_CASE("satisfied splittings are not requested")
    {
        ProfiledStructure p{fixtures::full2()};
        const auto &s = p.structure();
        Scheduler sched{p, SchedulerMode::fifo, 0};
        NodeAllocator nodes;
        const auto r = respond_atom_move(p, {}, s.index("e01"), nodes);
        // e01 splits as e00;e01 and e01;e11, both met by the loops
        CHECK(find_witness(r.network, {NodeId{0}, NodeId{1}, s.index("e00"), s.index("e01")}) == NodeId{0});
        CHECK(find_witness(r.network, {NodeId{0}, NodeId{1}, s.index("e01"), s.index("e11")}) == NodeId{1});
        const auto before = sched.pending();
        sched.observe(r.network, r.added_edges);
        CHECK(sched.pending() == before);

        // a lone loop has an unmet splitting e00 = e01;e10
        const auto loop = respond_atom_move(p, {}, s.index("e00"), nodes);
        sched.observe(loop.network, loop.added_edges);
        const auto pending = sched.pending_moves();
        REQUIRE(pending.size() == before + 1);
        const auto x = loop.added_nodes.front();
        CHECK(pending.back() == Move{WitnessMove{x, x, s.index("e01"), s.index("e10")}});
    }

    TEST_CASE("ARROW play")
    {
        PlayOptions o;
        o.rounds = 10;
        const auto t = run_game(fixtures::arrow(), o);
        CHECK(t.saturated);
        CHECK(t.rounds_used() == 1);
        CHECK(t.final_network.nodes().size() == 2);
        CHECK(t.final_network.edge_count() == 1);
    }

    TEST_CASE("FULL2 play saturates with components of at most two nodes")
    {
        const auto t = run_game(fixtures::full2(), {});
        CHECK(t.saturated);
        CHECK(largest_component(t.final_network) <= 2);
        check_play_invariants(ProfiledStructure{fixtures::full2()}, t);
    }

    TEST_CASE("zero budget gives an empty trace")
    {
        PlayOptions o;
        o.rounds = 0;
        const auto t = run_game(fixtures::full2(), o);
        CHECK(t.rounds.empty());
        CHECK(t.final_network.empty());
        CHECK_FALSE(t.saturated);
        CHECK(t.pending.size() == 4);
    }

    TEST_CASE("FIFO queue sizes on FULL3 match the reference")
    {
        const auto setup = prepare_game(fixtures::full3());
        CHECK(setup.axioms.mode == AxiomMode::sampled);
        CHECK(setup.warnings.size() == 1);
        PlayOptions o;
        o.rounds = full3_fifo_pending.size();
        const auto t = run_game(setup, o);
        REQUIRE(t.rounds_used() == 75);
        CHECK(t.saturated);
        for (std::size_t k = 0; k < t.rounds.size(); ++k)
            CHECK(t.rounds[k].pending_after == full3_fifo_pending[k]);
        // a shorter budget is a prefix of the same play
        o.rounds = 5;
        const auto short_play = run_game(setup, o);
        CHECK(short_play.pending.size() == full3_fifo_pending[4]);
        CHECK(short_play.warnings == setup.warnings);
    }

    TEST_CASE("the game refuses structures that fail the axioms")
    {
        CHECK_THROWS_AS(run_game(fixtures::full2_bad(), {}), GameRefused);
        CHECK_THROWS_AS(prepare_game(fixtures::full2_bad()), GameRefused);
    }

    TEST_CASE("randomized plays on FULL3 stay networks")
    {
        const auto setup = prepare_game(fixtures::full3());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            PlayOptions o;
            o.rounds = 500;
            o.mode = SchedulerMode::random;
            o.seed = seed;
            const auto t = run_game(setup, o);
            check_play_invariants(setup.structure, t);
        }
    }

    TEST_CASE("plays are deterministic")
    {
        for (auto mode : {SchedulerMode::fifo, SchedulerMode::random}) {
            PlayOptions o;
            o.rounds = 40;
            o.mode = mode;
            o.seed = 7;
            const auto a = io::dump(io::to_json(run_game(fixtures::full3(), o)));
            const auto b = io::dump(io::to_json(run_game(fixtures::full3(), o)));
            CHECK(a == b);
        }
    }

    TEST_CASE("winning invariant on catalog structures")
    {
        for (const auto &u : testing::sampled_catalog(15, 4)) {
            const auto setup = prepare_game(build_concrete(u));
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                PlayOptions o;
                o.rounds = 200;
                o.mode = seed == 0 ? SchedulerMode::fifo : SchedulerMode::random;
                o.seed = seed;
                check_play_invariants(setup.structure, run_game(setup, o));
            }
        }
    }

    TEST_CASE("saturated plays serve every element-level splitting")
    {
        for (const auto &u : testing::nonempty_catalog(2)) {
            const auto s = build_concrete(u);
            const auto t = run_game(s, {});
            REQUIRE(t.saturated);
            const auto n = s.size();
            for (const auto &[e, a] : t.final_network.labels()) {
                for (std::uint64_t bm = 1; bm < (1u << n); ++bm)
                    for (std::uint64_t cm = 1; cm < (1u << n); ++cm) {
                        const Element b{n, bm}, c{n, cm};
                        if (!s.compose(b, c).contains(a))
                            continue;
                        bool served = false;
                        for (const auto &[xz, lb] : t.final_network.out_edges(e.first))
                            if (b.contains(lb))
                                if (auto lc = t.final_network.label(xz.second, e.second); lc && c.contains(*lc))
                                    served = true;
                        CHECK(served);
                    }
            }
        }
    }
}
