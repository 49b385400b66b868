#pragma once

#include "relalg/concrete.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace relalg {

struct OracleLimits {
    std::size_t max_atoms = 6;
    std::size_t max_base = 4;
};

/// A unit plus the atom labelling each of its pairs; h(a) is the set of
/// pairs labelled a.
struct RepresentationWitness {
    ConcreteUnit unit;
    std::vector<AtomIndex> assignment;
};

struct SearchResult {
    bool found = false;
    std::optional<RepresentationWitness> witness;
    std::size_t bases_tried = 0;  ///< candidate units examined
    std::size_t max_base = 0;
};

/// Every unit W over a base of at most max_base points (max_base <= 3), up to
/// renaming points, each over its minimal base. Ordered by base size, then
/// by canonical pair mask.
std::vector<ConcreteUnit> unit_catalog(std::size_t max_base);

/// Canonical units of exactly k points (every point used), as k*k-bit masks
/// with bit x*k+y standing for (x,y). Shared by the catalog and the search.
std::vector<std::uint32_t> canonical_unit_masks(std::size_t k);
ConcreteUnit unit_from_mask(std::size_t k, std::uint32_t mask);

/// Searches all canonical units up to max_base for a labelling that maps the
/// atoms to disjoint non-empty sets covering W and preserves identity,
/// converse, composition and the claimed H flags. A negative answer means
/// "none up to bound", not non-representability.
SearchResult brute_force_representation(const AtomStructure &s, std::size_t max_base, const OracleLimits &limits = {});

/// Set-theoretic check of a witness, independent of the search.
bool is_representation(const AtomStructure &s, const RepresentationWitness &w);

} // namespace relalg
