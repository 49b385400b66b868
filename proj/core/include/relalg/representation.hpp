#pragma once

#include "relalg/concrete.hpp"
#include "relalg/game.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace relalg {

using PairSet = std::set<Edge>;

/// Base, unit and atom map read off the final network of a play.
struct Representation {
    std::vector<NodeId> base;
    std::vector<Edge> unit;
    std::vector<PairSet> h;  ///< h[a] = pairs labelled a
    HFlags flags_observed;

    std::size_t atom_count() const { return h.size(); }
    /// h extended to elements by union.
    PairSet image(const Element &x) const;
};

/// Operations of the full relativized set algebra on a unit W.
namespace re {
    PairSet compose(const PairSet &w, const PairSet &r, const PairSet &s);
    PairSet converse(const PairSet &w, const PairSet &r);
    PairSet diagonal(const PairSet &w);
    PairSet complement(const PairSet &w, const PairSet &r);
}

Representation extract(const PlayTrace &trace);

enum class Verdict { holds, fails, pending };

std::string to_string(Verdict v);

struct PlayStatus {
    bool saturated = false;
    std::size_t pending = 0;
    std::size_t pending_atom_moves = 0;
};

PlayStatus status_of(const PlayTrace &trace);

struct VerificationWitness {
    std::string field;
    std::string detail;
};

struct VerificationReport {
    bool identity_ok = true;
    bool converse_ok = true;
    bool composition_sound = true;
    Verdict composition_complete = Verdict::holds;
    Verdict injective_ok = Verdict::holds;
    std::size_t pending = 0;
    std::size_t pending_atom_moves = 0;
    /// Present only for flags the structure claims.
    std::optional<bool> reflexive_ok;
    std::optional<bool> symmetric_ok;
    std::vector<VerificationWitness> counterexamples;

    bool all_true() const;
    /// all_true, or everything true except pending completeness/injectivity.
    bool acceptable_partial() const;
};

/// Checks that h embeds the complex algebra into Re(W). Completeness of
/// composition needs a saturated play and injectivity needs every atom move
/// to have been played; otherwise those fields are pending.
VerificationReport verify(const Representation &rep, const AtomStructure &s, const PlayStatus &status);

/// Bijection f on atoms with f(identity) = identity, f(~a) = ~f(a) and
/// f(comp(a,b)) = comp(f(a), f(b)); found by backtracking.
std::optional<std::vector<AtomIndex>> find_isomorphism(const AtomStructure &from, const AtomStructure &to);

/// The atom structure that h induces inside Re(W): atoms h(a), identity
/// where h(a) lies in the diagonal, converse and composition by evaluating
/// the set operations and decomposing into h-atoms. Nullopt when some set
/// operation leaves the image of h or an atom has an empty image.
std::optional<AtomStructure> induced_structure(const Representation &rep);

/// Connected components of the unit (ignoring direction), each as a unit of
/// its own over node names "n<id>".
std::vector<ConcreteUnit> unit_components(const Representation &rep);

struct RoundtripReport {
    bool axioms_passed = false;
    bool saturated = false;
    std::size_t rounds_used = 0;
    VerificationReport verification;
    /// Induced structure of the whole representation is isomorphic to the input.
    bool isomorphic = false;
    std::optional<std::vector<AtomIndex>> isomorphism;
    /// Per connected component: its concrete algebra is isomorphic to the input.
    std::vector<bool> components_isomorphic;
};

/// build_concrete -> play -> extract -> verify -> isomorphism check.
RoundtripReport roundtrip_check(const ConcreteUnit &u, std::size_t budget);

std::string node_name(NodeId n);

} // namespace relalg
