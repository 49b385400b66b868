#include "relalg/element.hpp"

#include "relalg/error.hpp"

#include <bit>
#include <string>

namespace relalg {

std::uint64_t full_mask(std::size_t width)
{
    if (width > Element::max_width)
        throw WidthMismatch("element width " + std::to_string(width) + " exceeds 64 atoms");
    return width == Element::max_width ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

Element::Element(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits)
{
    if ((bits & ~full_mask(width)) != 0)
        throw WidthMismatch("element has bits outside its width");
}

Element Element::top(std::size_t width) { return Element{width, full_mask(width)}; }

Element Element::singleton(std::size_t width, AtomIndex atom)
{
    if (atom >= width)
        throw WidthMismatch("atom index " + std::to_string(atom) + " outside width " + std::to_string(width));
    return Element{width, std::uint64_t{1} << atom};
}

std::size_t Element::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<AtomIndex> Element::atoms() const
{
    std::vector<AtomIndex> out;
    for (auto rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(static_cast<AtomIndex>(std::countr_zero(rest)));
    return out;
}

void Element::insert(AtomIndex atom)
{
    if (atom >= width_)
        throw WidthMismatch("atom index " + std::to_string(atom) + " outside width " + std::to_string(width_));
    bits_ |= std::uint64_t{1} << atom;
}

namespace {
    void require_same_width(const Element &x, const Element &y)
    {
        if (x.width() != y.width())
            throw WidthMismatch(
                "element widths differ: " + std::to_string(x.width()) + " vs " + std::to_string(y.width()));
    }
}

Element join(const Element &x, const Element &y)
{
    require_same_width(x, y);
    return Element{x.width(), x.bits() | y.bits()};
}

Element meet(const Element &x, const Element &y)
{
    require_same_width(x, y);
    return Element{x.width(), x.bits() & y.bits()};
}

Element complement(const Element &x) { return Element{x.width(), ~x.bits() & full_mask(x.width())}; }

bool leq(const Element &x, const Element &y)
{
    require_same_width(x, y);
    return (x.bits() & ~y.bits()) == 0;
}

} // namespace relalg
