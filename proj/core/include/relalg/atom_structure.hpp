#pragma once

#include "relalg/element.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

/// Which properties a relativized unit is claimed to have: reflexive (r) and
/// symmetric (s).
struct HFlags {
    bool reflexive = false;
    bool symmetric = false;

    friend bool operator==(const HFlags &, const HFlags &) = default;
};

/// Finite presentation of an atomic algebra of relation type.
///
/// Atom order is significant: it is the canonical order used for iteration,
/// tie-breaking and reporting everywhere else. Instances are immutable; use
/// AtomStructureBuilder to make one.
class AtomStructure {
public:
    AtomStructure() = default;

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    const std::string &name(AtomIndex a) const { return names_.at(a); }
    std::optional<AtomIndex> find(std::string_view name) const;
    AtomIndex index(std::string_view name) const;

    const Element &identity() const { return identity_; }
    bool is_identity(AtomIndex a) const { return identity_.contains(a); }

    /// Converse of an atom, absent when it is zero.
    std::optional<AtomIndex> converse_of(AtomIndex a) const { return converse_.at(a); }
    /// Atoms below a;b.
    const Element &comp(AtomIndex a, AtomIndex b) const { return comp_.at(a * size() + b); }

    const HFlags &flags() const { return flags_; }

    Element zero() const { return Element::zero(size()); }
    Element top() const { return Element::top(size()); }
    Element atom(AtomIndex a) const { return Element::singleton(size(), a); }
    Element element(const std::vector<std::string> &atom_names) const;

    /// Complex-algebra composition: union of comp(a, b) over a in x, b in y.
    Element compose(const Element &x, const Element &y) const;
    /// Complex-algebra converse: union of the defined atom converses.
    Element converse(const Element &x) const;

    friend bool operator==(const AtomStructure &, const AtomStructure &) = default;

private:
    friend class AtomStructureBuilder;

    std::vector<std::string> names_;
    Element identity_;
    std::vector<std::optional<AtomIndex>> converse_;
    std::vector<Element> comp_;
    HFlags flags_;
};

class AtomStructureBuilder {
public:
    explicit AtomStructureBuilder(std::vector<std::string> names);
    /// Start from an existing structure, e.g. to derive a mutated copy.
    explicit AtomStructureBuilder(const AtomStructure &base);

    AtomIndex index(std::string_view name) const;

    AtomStructureBuilder &identity(AtomIndex a);
    AtomStructureBuilder &converse(AtomIndex a, AtomIndex image);
    AtomStructureBuilder &clear_converse(AtomIndex a);
    AtomStructureBuilder &comp(AtomIndex a, AtomIndex b, AtomIndex c);
    AtomStructureBuilder &set_comp(AtomIndex a, AtomIndex b, Element value);
    AtomStructureBuilder &flags(HFlags flags);
    AtomStructureBuilder &rename(std::vector<std::string> names);

    AtomStructure build() const;

private:
    void check_index(AtomIndex a) const;

    AtomStructure s_;
};

} // namespace relalg
