#pragma once

#include "relalg/atom_structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace relalg {

using PointIndex = std::size_t;
using PointPair = std::pair<PointIndex, PointIndex>;

/// An explicit unit W over a finite set of named points. Pairs are kept in
/// the given order, which becomes the atom order of build_concrete.
struct ConcreteUnit {
    std::vector<std::string> base;
    std::vector<PointPair> pairs;
    /// Optional atom names, one per pair. Empty means "e" + x + y naming.
    std::vector<std::string> atom_names;

    friend bool operator==(const ConcreteUnit &, const ConcreteUnit &) = default;
};

/// Throws ValidationError on dangling or duplicate pairs, or duplicate points.
void validate(const ConcreteUnit &u);

/// Points that occur in some pair, in base order.
std::vector<PointIndex> minimal_base(const ConcreteUnit &u);

/// H-properties of W on its minimal base.
HFlags unit_flags(const ConcreteUnit &u);

/// Atom structure of the full relativized set algebra on the unit: one atom
/// per pair, with identity, converse and composition obtained by direct set
/// evaluation on singletons.
AtomStructure build_concrete(const ConcreteUnit &u);

/// Convenience for tests and fixtures: base "0".."k-1".
ConcreteUnit make_unit(std::size_t base_size, std::vector<PointPair> pairs, std::vector<std::string> names = {});

/// Full square U x U over "0".."k-1" in lexicographic pair order.
ConcreteUnit full_unit(std::size_t base_size);

} // namespace relalg
