#pragma once

#include "relalg/atom_calculus.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ranges>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace relalg {

/// Opaque node id. Within a play ids come from a counter and are never reused.
enum class NodeId : std::uint32_t {};

constexpr std::uint32_t to_underlying(NodeId n) { return static_cast<std::uint32_t>(n); }

using Edge = std::pair<NodeId, NodeId>;
using LabeledEdge = std::pair<Edge, AtomIndex>;

/// Finite node set with a partial atom-valued labelling of node pairs.
class PreNetwork {
public:
    const std::set<NodeId> &nodes() const { return nodes_; }
    const std::map<Edge, AtomIndex> &labels() const { return labels_; }
    std::size_t edge_count() const { return labels_.size(); }
    bool empty() const { return nodes_.empty(); }

    bool has_node(NodeId x) const { return nodes_.contains(x); }
    bool has_edge(NodeId x, NodeId y) const { return labels_.contains({x, y}); }
    std::optional<AtomIndex> label(NodeId x, NodeId y) const;

    void add_node(NodeId x) { nodes_.insert(x); }
    /// Adds both endpoints if needed. Relabelling an existing edge to a
    /// different atom is refused (returns false) so extensions stay chains.
    bool set_label(NodeId x, NodeId y, AtomIndex a);

    /// Edges leaving x, in target order.
    auto out_edges(NodeId x) const
    {
        auto lo = labels_.lower_bound({x, NodeId{0}});
        auto hi = to_underlying(x) == UINT32_MAX ? labels_.end() : labels_.lower_bound({NodeId{to_underlying(x) + 1}, NodeId{0}});
        return std::ranges::subrange(lo, hi);
    }

    /// this is a sub-pre-network of other: nodes and edges contained, labels agree.
    bool is_subnetwork_of(const PreNetwork &other) const;

    friend bool operator==(const PreNetwork &, const PreNetwork &) = default;

private:
    std::set<NodeId> nodes_;
    std::map<Edge, AtomIndex> labels_;
};

enum class NetworkCondition { N1a, N1b, N1c, N1d, N2, N3 };

std::string to_string(NetworkCondition c);

struct NetworkViolation {
    NetworkCondition condition;
    std::vector<NodeId> nodes;   ///< (x, y) or (x, z, y) for N3
    std::vector<AtomIndex> atoms;
    std::string detail;

    friend bool operator==(const NetworkViolation &, const NetworkViolation &) = default;
};

/// First violation of the network conditions in canonical order: every edge
/// (ordered by (x, y)) is checked for N1a-d and N2, then every triangle
/// (x, z, y) of present edges for N3. Throws ValidationError on labels that
/// are not atoms of the structure.
std::optional<NetworkViolation> check_network(const PreNetwork &n, const ProfiledStructure &p);

/// Two-node network for atom a: (x,y)=a, plus the start loop, end loop and
/// converse edge whenever they are non-zero. Requires x = y iff a <= 1'.
PreNetwork initial_network(const ProfiledStructure &p, AtomIndex a, NodeId x, NodeId y);

PreNetwork restrict(const PreNetwork &n, const std::set<NodeId> &v);

/// Union of a chain N0 <= N1 <= ...; throws ChainError if it is not a chain.
PreNetwork union_chain(std::span<const PreNetwork> chain);

} // namespace relalg
