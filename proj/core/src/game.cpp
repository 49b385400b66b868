#include "relalg/game.hpp"

#include "relalg/error.hpp"

#include <algorithm>

namespace relalg {

namespace {

    class Extension {
    public:
        explicit Extension(const PreNetwork &base) { r_.network = base; }

        void node(NodeId x)
        {
            r_.network.add_node(x);
            r_.added_nodes.push_back(x);
        }

        void edge(NodeId x, NodeId y, AtomIndex a, const char *what)
        {
            const bool existed = r_.network.has_edge(x, y);
            if (!r_.network.set_label(x, y, a))
                throw StrategyFailure(std::string{"response would relabel an existing edge: "} + what);
            if (!existed)
                r_.added_edges.push_back({{x, y}, a});
        }

        Response finish(std::optional<NodeId> witness = std::nullopt)
        {
            r_.extended = !r_.added_nodes.empty() || !r_.added_edges.empty();
            // the scheduler sees new edges in (from, to) order
            std::ranges::sort(r_.added_edges);
            r_.witness = witness;
            return std::move(r_);
        }

    private:
        Response r_;
    };

} // namespace

std::optional<NodeId> find_witness(const PreNetwork &n, const WitnessMove &m)
{
    for (const auto &[xz, label] : n.out_edges(m.x)) {
        if (label != m.b)
            continue;
        if (auto zy = n.label(xz.second, m.y); zy && *zy == m.c)
            return xz.second;
    }
    return std::nullopt;
}

Response respond_atom_move(const ProfiledStructure &p, const PreNetwork &n, AtomIndex atom, NodeAllocator &nodes)
{
    if (atom >= p.size())
        throw InvalidMove("atom move with unknown atom index " + std::to_string(atom));
    const auto &pa = p.profile(atom);
    const auto x = nodes.fresh();
    const auto y = pa.is_identity ? x : nodes.fresh();

    Extension ext{n};
    ext.node(x);
    if (y != x)
        ext.node(y);
    const auto init = initial_network(p, atom, x, y);
    for (const auto &[edge, label] : init.labels())
        ext.edge(edge.first, edge.second, label, "initial network");
    return ext.finish();
}

Response respond_witness_move(const ProfiledStructure &p, const PreNetwork &n, const WitnessMove &m, NodeAllocator &nodes)
{
    const auto &s = p.structure();
    const auto a = n.label(m.x, m.y);
    if (!a)
        throw InvalidMove("witness move on a missing edge");
    if (m.b >= s.size() || m.c >= s.size() || !s.comp(m.b, m.c).contains(*a))
        throw InvalidMove("witness move: edge label is not below b;c");

    if (auto z = find_witness(n, m))
        return Extension{n}.finish(z);

    const auto &pb = p.profile(m.b);
    const auto &pc = p.profile(m.c);
    if (pb.is_identity || pc.is_identity)
        throw StrategyFailure("fresh witness requested for an identity atom: " + s.name(pb.is_identity ? m.b : m.c) +
            " (an existing loop should have served)");

    const auto z = nodes.fresh();
    Extension ext{n};
    ext.node(z);
    ext.edge(m.x, z, m.b, "(x,z)");
    ext.edge(z, m.y, m.c, "(z,y)");
    if (pb.conv)
        ext.edge(z, m.x, *pb.conv, "(z,x)");
    if (pc.conv)
        ext.edge(m.y, z, *pc.conv, "(y,z)");
    if (pb.has_end != pc.has_st || pb.e_atom != pc.s_atom)
        throw StrategyFailure("end loop of " + s.name(m.b) + " and start loop of " + s.name(m.c) + " disagree");
    if (pb.has_end)
        ext.edge(z, z, *pb.e_atom, "(z,z)");
    return ext.finish(z);
}

Scheduler::Scheduler(const ProfiledStructure &p, SchedulerMode mode, std::uint64_t seed) : p_(p), mode_(mode), rng_(seed)
{
    for (AtomIndex a = 0; a < p.size(); ++a)
        queue_.push_back(AtomMove{a});
}

void Scheduler::observe(const PreNetwork &n, std::span<const LabeledEdge> added)
{
    for (const auto &[edge, label] : added)
        for (const auto &[b, c] : p_.splittings(label)) {
            WitnessMove m{edge.first, edge.second, b, c};
            if (!find_witness(n, m))
                queue_.push_back(m);
        }
}

std::optional<Move> Scheduler::next()
{
    if (queue_.empty())
        return std::nullopt;
    std::size_t pick = 0;
    if (mode_ == SchedulerMode::random)
        pick = static_cast<std::size_t>(rng_() % queue_.size());
    Move m = queue_[pick];
    queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(pick));
    return m;
}

std::size_t Scheduler::pending_atom_moves() const
{
    return static_cast<std::size_t>(
        std::ranges::count_if(queue_, [](const Move &m) { return std::holds_alternative<AtomMove>(m); }));
}

GameSetup prepare_game(const AtomStructure &s, AxiomOptions options)
{
    options.fallback_to_sampling = true;
    auto report = check_axioms(s, options);
    if (!report.passed()) {
        std::string failed;
        for (const auto &v : report.verdicts)
            if (v.required && !v.holds)
                failed += (failed.empty() ? "" : ", ") + v.axiom;
        throw GameRefused("structure fails " + failed + "; the game is only defined on axiom-passing structures");
    }
    std::vector<std::string> warnings;
    if (report.mode == AxiomMode::sampled)
        warnings.push_back("axioms were checked on " + std::to_string(report.samples) +
            " sampled assignments per clause (seed " + std::to_string(report.seed) + "), not exhaustively");
    try {
        return GameSetup{ProfiledStructure{s}, std::move(report), std::move(warnings)};
    }
    catch (const ProfileError &e) {
        throw GameRefused(std::string{"atom profiles are inconsistent: "} + e.what());
    }
}

PlayTrace run_game(const GameSetup &setup, const PlayOptions &options)
{
    const auto &p = setup.structure;
    PlayTrace trace;
    trace.structure = p.structure();
    trace.options = options;
    trace.axiom_mode = setup.axioms.mode;
    trace.warnings = setup.warnings;

    Scheduler scheduler{p, options.mode, options.seed};
    NodeAllocator nodes;
    PreNetwork network;
    std::size_t version = 0;

    for (std::size_t round = 1; round <= options.rounds; ++round) {
        auto move = scheduler.next();
        if (!move)
            break;
        auto response = std::visit(
            [&](const auto &m) {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, AtomMove>)
                    return respond_atom_move(p, network, m.atom, nodes);
                else
                    return respond_witness_move(p, network, m, nodes);
            },
            *move);

        if (options.check_rounds) {
            if (auto v = check_network(response.network, p))
                throw StrategyFailure("round " + std::to_string(round) + " (" + describe(*move, p.structure()) +
                    ") broke " + to_string(v->condition) + ": " + v->detail);
            if (!network.is_subnetwork_of(response.network))
                throw StrategyFailure("round " + std::to_string(round) + " does not extend the previous network");
        }

        scheduler.observe(response.network, response.added_edges);
        if (response.extended)
            ++version;

        RoundRecord rec;
        rec.round = round;
        rec.move = *move;
        rec.extended = response.extended;
        rec.witness = response.witness;
        rec.added_nodes = std::move(response.added_nodes);
        rec.added_edges = std::move(response.added_edges);
        rec.pending_after = scheduler.pending();
        rec.version = version;
        trace.rounds.push_back(std::move(rec));
        network = std::move(response.network);
    }

    trace.saturated = scheduler.saturated();
    trace.pending = scheduler.pending_moves();
    trace.pending_atom_moves = scheduler.pending_atom_moves();
    trace.final_network = std::move(network);
    return trace;
}

PlayTrace run_game(const AtomStructure &s, const PlayOptions &options, AxiomOptions axiom_options)
{
    return run_game(prepare_game(s, axiom_options), options);
}

std::vector<PreNetwork> replay(const PlayTrace &trace)
{
    std::vector<PreNetwork> chain(1);
    for (const auto &rec : trace.rounds) {
        auto next = chain.back();
        for (auto x : rec.added_nodes)
            next.add_node(x);
        for (const auto &[edge, label] : rec.added_edges)
            if (!next.set_label(edge.first, edge.second, label))
                throw ChainError("trace relabels an edge in round " + std::to_string(rec.round));
        chain.push_back(std::move(next));
    }
    return chain;
}

std::string describe(const Move &m, const AtomStructure &s)
{
    return std::visit(
        [&](const auto &mv) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(mv)>, AtomMove>)
                return "atom " + s.name(mv.atom);
            else
                return "witness (" + std::to_string(to_underlying(mv.x)) + "," + std::to_string(to_underlying(mv.y)) +
                    ") " + s.name(mv.b) + ";" + s.name(mv.c);
        },
        m);
}

} // namespace relalg
