#pragma once

#include "relalg/atom_structure.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

enum class AxiomMode { exhaustive, sampled };

struct AxiomOptions {
    AxiomMode mode = AxiomMode::exhaustive;
    /// Exhaustive mode over budget: sample instead of throwing BudgetExceeded.
    bool fallback_to_sampling = false;
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0;
    /// Maximum number of assignments of a three-variable clause, i.e. a bound
    /// on 2^(3 * atoms).
    std::uint64_t budget = std::uint64_t{1} << 24;
};

struct Counterexample {
    std::string clause;               ///< clause id, e.g. "Ax 6a"
    std::string equation;             ///< human-readable form
    std::vector<Element> assignment;  ///< values of x, y, z (as many as the clause uses)
};

struct AxiomVerdict {
    std::string axiom;  ///< "Ax 1" .. "Ax 9", "Ax s", "Ax r"
    bool holds = true;
    /// Ax 1-9 always; Ax s / Ax r only when the structure claims the flag.
    bool required = true;
    std::optional<Counterexample> counterexample;
};

struct AxiomReport {
    AxiomMode mode = AxiomMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::vector<AxiomVerdict> verdicts;

    /// Every required axiom holds.
    bool passed() const;
    const AxiomVerdict &verdict(std::string_view axiom) const;
};

/// Evaluates Ax 1-9, Ax s and Ax r as equations over complex-algebra
/// elements. Exhaustive mode walks every assignment in canonical order
/// (x outermost, elements ordered by bitmask) so the reported counterexample
/// is the first one in that order.
AxiomReport check_axioms(const AtomStructure &s, const AxiomOptions &options = {});

struct ClauseInfo {
    std::string id;
    std::string axiom;
    std::string equation;
    std::size_t arity;
};

const std::vector<ClauseInfo> &axiom_clauses();

/// Re-evaluates one clause through AtomStructure::compose / converse rather
/// than the lookup tables used while scanning.
bool clause_holds(const AtomStructure &s, std::string_view clause_id, std::span<const Element> assignment);

} // namespace relalg
