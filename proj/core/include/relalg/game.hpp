#pragma once

#include "relalg/axioms.hpp"
#include "relalg/network.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace relalg {

/// The adversary asks for an edge labelled below `atom`.
struct AtomMove {
    AtomIndex atom = 0;
    friend bool operator==(const AtomMove &, const AtomMove &) = default;
};

/// The adversary asks for a node z splitting edge (x,y) into (x,z) labelled b
/// and (z,y) labelled c, where label(x,y) <= b;c.
struct WitnessMove {
    NodeId x{};
    NodeId y{};
    AtomIndex b = 0;
    AtomIndex c = 0;
    friend bool operator==(const WitnessMove &, const WitnessMove &) = default;
};

using Move = std::variant<AtomMove, WitnessMove>;

enum class SchedulerMode { fifo, random };

class NodeAllocator {
public:
    NodeId fresh() { return NodeId{next_++}; }
    std::uint32_t peek() const { return next_; }

private:
    std::uint32_t next_ = 0;
};

struct Response {
    PreNetwork network;
    bool extended = false;
    /// Witness move only: the node z that splits the edge.
    std::optional<NodeId> witness;
    std::vector<NodeId> added_nodes;
    std::vector<LabeledEdge> added_edges;
};

/// Existing node z with label(x,z) = b and label(z,y) = c, lowest id first.
std::optional<NodeId> find_witness(const PreNetwork &n, const WitnessMove &m);

/// Adds a disjoint copy of the initial network of atom a on fresh nodes.
Response respond_atom_move(const ProfiledStructure &p, const PreNetwork &n, AtomIndex atom, NodeAllocator &nodes);

/// Reuses an existing witness if there is one; otherwise adds a fresh node z
/// with (x,z)=b, (z,y)=c and the converse edges and end loop they require.
Response respond_witness_move(const ProfiledStructure &p, const PreNetwork &n, const WitnessMove &m, NodeAllocator &nodes);

/// Fair adversary: one atom move per atom, then one witness request for every
/// (edge, atom pair) that is not already satisfied when the edge appears.
class Scheduler {
public:
    Scheduler(const ProfiledStructure &p, SchedulerMode mode, std::uint64_t seed);

    /// Enqueues witness requests for newly added edges of n.
    void observe(const PreNetwork &n, std::span<const LabeledEdge> added);
    /// Next move, or nullopt once saturated.
    std::optional<Move> next();

    bool saturated() const { return queue_.empty(); }
    std::size_t pending() const { return queue_.size(); }
    std::size_t pending_atom_moves() const;
    std::vector<Move> pending_moves() const { return {queue_.begin(), queue_.end()}; }

private:
    const ProfiledStructure &p_;
    SchedulerMode mode_;
    std::mt19937_64 rng_;
    std::deque<Move> queue_;
};

struct GameSetup {
    ProfiledStructure structure;
    AxiomReport axioms;
    std::vector<std::string> warnings;
};

/// Checks the axioms (exhaustive when within budget, else sampled with a
/// warning) and profiles the atoms. Throws GameRefused when either fails.
GameSetup prepare_game(const AtomStructure &s, AxiomOptions options = {});

struct PlayOptions {
    std::size_t rounds = 64;
    std::uint64_t seed = 0;
    SchedulerMode mode = SchedulerMode::fifo;
    /// Check N1-N3 and the chain property after every round.
    bool check_rounds = true;
};

struct RoundRecord {
    std::size_t round = 0;  ///< 1-based
    Move move;
    bool extended = false;
    std::optional<NodeId> witness;
    std::vector<NodeId> added_nodes;
    std::vector<LabeledEdge> added_edges;
    std::size_t pending_after = 0;
    std::size_t version = 0;  ///< network version after the round
};

struct PlayTrace {
    AtomStructure structure;
    PlayOptions options;
    AxiomMode axiom_mode = AxiomMode::exhaustive;
    std::vector<std::string> warnings;
    std::vector<RoundRecord> rounds;
    std::vector<Move> pending;
    std::size_t pending_atom_moves = 0;
    PreNetwork final_network;
    bool saturated = false;

    std::size_t rounds_used() const { return rounds.size(); }
};

/// Plays until saturation or until the round budget is spent. Throws
/// StrategyFailure if any round produces a pre-network that is not a network.
PlayTrace run_game(const GameSetup &setup, const PlayOptions &options);
PlayTrace run_game(const AtomStructure &s, const PlayOptions &options, AxiomOptions axiom_options = {});

/// Rebuilds the chain from the recorded deltas; element 0 is the empty network.
std::vector<PreNetwork> replay(const PlayTrace &trace);

std::string describe(const Move &m, const AtomStructure &s);

} // namespace relalg
