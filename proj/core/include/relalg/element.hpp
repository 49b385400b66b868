#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace relalg {

using AtomIndex = std::size_t;

/// A set of atoms, i.e. an element of the complex algebra of a finite atom
/// structure. Bit i stands for atom i; the width is the number of atoms.
class Element {
public:
    static constexpr std::size_t max_width = 64;

    Element() = default;
    Element(std::size_t width, std::uint64_t bits);

    static Element zero(std::size_t width) { return Element{width, 0}; }
    static Element top(std::size_t width);
    static Element singleton(std::size_t width, AtomIndex atom);

    std::size_t width() const { return width_; }
    std::uint64_t bits() const { return bits_; }

    bool empty() const { return bits_ == 0; }
    bool contains(AtomIndex atom) const { return atom < width_ && ((bits_ >> atom) & 1U) != 0; }
    std::size_t count() const;
    std::vector<AtomIndex> atoms() const;

    void insert(AtomIndex atom);

    friend bool operator==(const Element &, const Element &) = default;

private:
    std::size_t width_ = 0;
    std::uint64_t bits_ = 0;
};

std::uint64_t full_mask(std::size_t width);

Element join(const Element &x, const Element &y);
Element meet(const Element &x, const Element &y);
Element complement(const Element &x);
bool leq(const Element &x, const Element &y);

inline Element operator|(const Element &x, const Element &y) { return join(x, y); }
inline Element operator&(const Element &x, const Element &y) { return meet(x, y); }
inline Element operator~(const Element &x) { return complement(x); }

} // namespace relalg
