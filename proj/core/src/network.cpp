#include "relalg/network.hpp"

#include "relalg/error.hpp"

#include <algorithm>

namespace relalg {

std::optional<AtomIndex> PreNetwork::label(NodeId x, NodeId y) const
{
    auto it = labels_.find({x, y});
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

bool PreNetwork::set_label(NodeId x, NodeId y, AtomIndex a)
{
    auto [it, inserted] = labels_.try_emplace({x, y}, a);
    if (!inserted && it->second != a)
        return false;
    nodes_.insert(x);
    nodes_.insert(y);
    return true;
}

bool PreNetwork::is_subnetwork_of(const PreNetwork &other) const
{
    if (!std::ranges::includes(other.nodes_, nodes_))
        return false;
    return std::ranges::all_of(labels_, [&](const auto &kv) {
        auto l = other.label(kv.first.first, kv.first.second);
        return l && *l == kv.second;
    });
}

std::string to_string(NetworkCondition c)
{
    switch (c) {
    case NetworkCondition::N1a: return "N1a";
    case NetworkCondition::N1b: return "N1b";
    case NetworkCondition::N1c: return "N1c";
    case NetworkCondition::N1d: return "N1d";
    case NetworkCondition::N2: return "N2";
    case NetworkCondition::N3: return "N3";
    }
    return "?";
}

std::optional<NetworkViolation> check_network(const PreNetwork &n, const ProfiledStructure &p)
{
    const auto &s = p.structure();
    for (const auto &[edge, a] : n.labels())
        if (a >= s.size())
            throw ValidationError("network edge labelled with unknown atom index " + std::to_string(a));

    for (const auto &[edge, a] : n.labels()) {
        const auto [x, y] = edge;
        const auto &pa = p.profile(a);
        auto violation = [&](NetworkCondition c, std::string detail) {
            return NetworkViolation{c, {x, y}, {a}, std::move(detail)};
        };
        if (pa.is_identity != (x == y))
            return violation(NetworkCondition::N1a, x == y ? "loop labelled with a non-identity atom"
                                                          : "identity atom on an edge between distinct nodes");
        if (pa.has_st != n.has_edge(x, x))
            return violation(NetworkCondition::N1b, pa.has_st ? "st(label) is non-zero but (x,x) is missing"
                                                              : "st(label) is zero but (x,x) is present");
        if (pa.has_end != n.has_edge(y, y))
            return violation(NetworkCondition::N1c, pa.has_end ? "end(label) is non-zero but (y,y) is missing"
                                                               : "end(label) is zero but (y,y) is present");
        const auto back = n.label(y, x);
        if (pa.conv.has_value() != back.has_value())
            return violation(NetworkCondition::N1d, pa.conv ? "converse of label is non-zero but (y,x) is missing"
                                                            : "converse of label is zero but (y,x) is present");
        // N(x,y) . ~N(y,x) != 0, atom level: ~N(y,x) = N(x,y)
        if (back) {
            const auto conv_back = p.profile(*back).conv;
            if (!conv_back || *conv_back != a) {
                auto v = violation(NetworkCondition::N2, "label is not the converse of the reverse edge's label");
                v.atoms.push_back(*back);
                return v;
            }
        }
    }

    for (const auto &[edge, a] : n.labels()) {
        const auto [x, y] = edge;
        for (const auto &[xz, b] : n.out_edges(x)) {
            const auto z = xz.second;
            if (auto c = n.label(z, y)) {
                if (!s.comp(b, *c).contains(a))
                    return NetworkViolation{NetworkCondition::N3, {x, z, y}, {a, b, *c},
                        "N(x,y) is not below N(x,z);N(z,y)"};
            }
        }
    }
    return std::nullopt;
}

PreNetwork initial_network(const ProfiledStructure &p, AtomIndex a, NodeId x, NodeId y)
{
    const auto &pa = p.profile(a);
    if (pa.is_identity != (x == y))
        throw InvalidMove(pa.is_identity ? "identity atom needs x = y" : "non-identity atom needs distinct nodes");
    PreNetwork n;
    n.set_label(x, y, a);
    if (pa.has_st)
        n.set_label(x, x, *pa.s_atom);
    if (pa.has_end && !n.set_label(y, y, *pa.e_atom))
        throw StrategyFailure("initial network: start and end loops clash");
    if (pa.conv && !n.set_label(y, x, *pa.conv))
        throw StrategyFailure("initial network: converse label clashes");
    return n;
}

PreNetwork restrict(const PreNetwork &n, const std::set<NodeId> &v)
{
    if (!std::ranges::includes(n.nodes(), v))
        throw ValidationError("restriction set is not a subset of the network's nodes");
    PreNetwork out;
    for (auto x : v)
        out.add_node(x);
    for (const auto &[edge, a] : n.labels())
        if (v.contains(edge.first) && v.contains(edge.second))
            out.set_label(edge.first, edge.second, a);
    return out;
}

PreNetwork union_chain(std::span<const PreNetwork> chain)
{
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!chain[i - 1].is_subnetwork_of(chain[i]))
            throw ChainError("pre-network " + std::to_string(i - 1) + " is not contained in pre-network " +
                std::to_string(i));
    PreNetwork out;
    for (const auto &n : chain) {
        for (auto x : n.nodes())
            out.add_node(x);
        for (const auto &[edge, a] : n.labels())
            if (!out.set_label(edge.first, edge.second, a))
                throw ChainError("chain members disagree on a shared edge label");
    }
    return out;
}

} // namespace relalg
