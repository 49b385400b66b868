#include "relalg/fixtures.hpp"

#include "relalg/error.hpp"

namespace relalg::fixtures {

ConcreteUnit refl1_unit() { return make_unit(1, {{0, 0}}, {"e"}); }
ConcreteUnit arrow_unit() { return make_unit(2, {{0, 1}}, {"a"}); }
ConcreteUnit sym2_unit() { return make_unit(2, {{0, 1}, {1, 0}}, {"p", "q"}); }
ConcreteUnit full2_unit() { return full_unit(2); }
ConcreteUnit full3_unit() { return full_unit(3); }

AtomStructure refl1() { return build_concrete(refl1_unit()); }
AtomStructure arrow() { return build_concrete(arrow_unit()); }
AtomStructure sym2() { return build_concrete(sym2_unit()); }
AtomStructure full2() { return build_concrete(full2_unit()); }
AtomStructure full3() { return build_concrete(full3_unit()); }

AtomStructure full2_bad()
{
    const auto good = full2();
    AtomStructureBuilder b{good};
    const auto e00 = good.index("e00");
    const auto e01 = good.index("e01");
    Element widened = good.comp(e00, e01);
    widened.insert(e00);
    b.set_comp(e00, e01, widened);
    return b.build();
}

std::vector<Fixture> all()
{
    return {
        {"REFL1", refl1(), true, refl1_unit()},
        {"ARROW", arrow(), true, arrow_unit()},
        {"SYM2", sym2(), true, sym2_unit()},
        {"FULL2", full2(), true, full2_unit()},
        {"FULL2_BAD", full2_bad(), false, {}},
        {"FULL3", full3(), true, full3_unit()},
    };
}

const Fixture &by_name(std::string_view name)
{
    static const std::vector<Fixture> catalog = all();
    for (const auto &f : catalog)
        if (f.name == name)
            return f;
    throw ValidationError("unknown fixture: " + std::string(name));
}

} // namespace relalg::fixtures
