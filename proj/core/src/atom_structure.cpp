#include "relalg/atom_structure.hpp"

#include "relalg/error.hpp"

#include <set>

namespace relalg {

std::optional<AtomIndex> AtomStructure::find(std::string_view name) const
{
    for (AtomIndex a = 0; a < names_.size(); ++a)
        if (names_[a] == name)
            return a;
    return std::nullopt;
}

AtomIndex AtomStructure::index(std::string_view name) const
{
    if (auto a = find(name))
        return *a;
    throw ValidationError("unknown atom '" + std::string{name} + "'");
}

Element AtomStructure::element(const std::vector<std::string> &atom_names) const
{
    auto x = zero();
    for (const auto &n : atom_names)
        x.insert(index(n));
    return x;
}

Element AtomStructure::compose(const Element &x, const Element &y) const
{
    if (x.width() != size() || y.width() != size())
        throw WidthMismatch("compose: element width does not match structure");
    auto out = zero().bits();
    for (auto a : x.atoms())
        for (auto b : y.atoms())
            out |= comp(a, b).bits();
    return Element{size(), out};
}

Element AtomStructure::converse(const Element &x) const
{
    if (x.width() != size())
        throw WidthMismatch("converse: element width does not match structure");
    auto out = zero();
    for (auto a : x.atoms())
        if (auto c = converse_[a])
            out.insert(*c);
    return out;
}

AtomStructureBuilder::AtomStructureBuilder(std::vector<std::string> names)
{
    if (names.size() > Element::max_width)
        throw ValidationError("at most 64 atoms are supported, got " + std::to_string(names.size()));
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty())
            throw ValidationError("atom names must be non-empty");
        if (!seen.insert(n).second)
            throw ValidationError("duplicate atom name '" + n + "'");
    }
    auto n = names.size();
    s_.names_ = std::move(names);
    s_.identity_ = Element::zero(n);
    s_.converse_.assign(n, std::nullopt);
    s_.comp_.assign(n * n, Element::zero(n));
}

AtomStructureBuilder::AtomStructureBuilder(const AtomStructure &base) : s_(base) {}

AtomIndex AtomStructureBuilder::index(std::string_view name) const { return s_.index(name); }

void AtomStructureBuilder::check_index(AtomIndex a) const
{
    if (a >= s_.size())
        throw ValidationError("atom index " + std::to_string(a) + " out of range");
}

AtomStructureBuilder &AtomStructureBuilder::identity(AtomIndex a)
{
    check_index(a);
    s_.identity_.insert(a);
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::converse(AtomIndex a, AtomIndex image)
{
    check_index(a);
    check_index(image);
    if (s_.converse_[a] && *s_.converse_[a] != image)
        throw ValidationError("converse of '" + s_.names_[a] + "' given two images");
    s_.converse_[a] = image;
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::clear_converse(AtomIndex a)
{
    check_index(a);
    s_.converse_[a].reset();
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::comp(AtomIndex a, AtomIndex b, AtomIndex c)
{
    check_index(a);
    check_index(b);
    check_index(c);
    s_.comp_[a * s_.size() + b].insert(c);
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::set_comp(AtomIndex a, AtomIndex b, Element value)
{
    check_index(a);
    check_index(b);
    if (value.width() != s_.size())
        throw WidthMismatch("composition entry width does not match structure");
    s_.comp_[a * s_.size() + b] = value;
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::flags(HFlags flags)
{
    s_.flags_ = flags;
    return *this;
}

AtomStructureBuilder &AtomStructureBuilder::rename(std::vector<std::string> names)
{
    if (names.size() != s_.size())
        throw ValidationError("rename: expected " + std::to_string(s_.size()) + " names");
    AtomStructureBuilder check{names};
    s_.names_ = std::move(names);
    return *this;
}

AtomStructure AtomStructureBuilder::build() const { return s_; }

} // namespace relalg
