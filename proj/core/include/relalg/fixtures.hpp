#pragma once

#include "relalg/concrete.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace relalg::fixtures {

// Every fixture is produced by build_concrete from an explicit unit; only
// FULL2_BAD is a deliberate mutation of a concrete table.

ConcreteUnit refl1_unit();  ///< {(0,0)}, atom "e"
ConcreteUnit arrow_unit();  ///< {(0,1)}, atom "a"
ConcreteUnit sym2_unit();   ///< {(0,1),(1,0)}, atoms "p", "q"
ConcreteUnit full2_unit();  ///< 2x2 square
ConcreteUnit full3_unit();  ///< 3x3 square

AtomStructure refl1();
AtomStructure arrow();
AtomStructure sym2();
AtomStructure full2();
AtomStructure full3();
/// FULL2 with comp(e00, e01) widened to {e00, e01}.
AtomStructure full2_bad();

struct Fixture {
    std::string name;
    AtomStructure structure;
    bool has_unit = false;
    ConcreteUnit unit;
};

/// The whole catalog in a fixed order: REFL1, ARROW, SYM2, FULL2, FULL2_BAD, FULL3.
std::vector<Fixture> all();
const Fixture &by_name(std::string_view name);

} // namespace relalg::fixtures
