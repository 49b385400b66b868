#pragma once

#include "relalg/atom_structure.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relalg {

/// Per-atom derived data. st(a) = 1';a and end(a) = a;1'. The start atom is
/// the unique identity atom i with a in i;a, the end atom the unique identity
/// atom j with a in a;j.
struct AtomProfile {
    AtomIndex atom = 0;
    bool is_identity = false;
    std::optional<AtomIndex> conv;
    bool has_st = false;
    bool has_end = false;
    std::optional<AtomIndex> s_atom;
    std::optional<AtomIndex> e_atom;

    friend bool operator==(const AtomProfile &, const AtomProfile &) = default;
};

/// Throws ProfileError when a start/end identity atom is missing or not unique.
std::vector<AtomProfile> profile_atoms(const AtomStructure &s);

/// An atom structure bundled with its profiles and, for each atom a, the
/// atom pairs (b, c) with a in comp(b, c) in lexicographic order.
class ProfiledStructure {
public:
    explicit ProfiledStructure(AtomStructure s);

    const AtomStructure &structure() const { return structure_; }
    std::size_t size() const { return structure_.size(); }
    const AtomProfile &profile(AtomIndex a) const { return profiles_.at(a); }
    std::span<const AtomProfile> profiles() const { return profiles_; }
    std::span<const std::pair<AtomIndex, AtomIndex>> splittings(AtomIndex a) const { return splittings_.at(a); }

private:
    AtomStructure structure_;
    std::vector<AtomProfile> profiles_;
    std::vector<std::vector<std::pair<AtomIndex, AtomIndex>>> splittings_;
};

struct LemmaClause {
    std::string name;
    bool holds = true;
    std::vector<AtomIndex> witness;  ///< atoms of the first violation (a, b, c as applicable)
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaClause> clauses;

    bool passed() const;
    /// First violated clause, if any.
    const LemmaClause *first_failure() const;
};

/// Checks the atom-level consequences of the axioms over all atoms and all
/// triples a <= b;c. Meaningful only for structures that pass check_axioms.
LemmaReport validate_lemmas(const AtomStructure &s);

} // namespace relalg
