#include "relalg/concrete.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <set>

namespace relalg {

void validate(const ConcreteUnit &u)
{
    std::set<std::string> points;
    for (const auto &p : u.base)
        if (!points.insert(p).second)
            throw ValidationError("duplicate base point '" + p + "'");
    std::set<PointPair> seen;
    for (const auto &pr : u.pairs) {
        if (pr.first >= u.base.size() || pr.second >= u.base.size())
            throw ValidationError("unit pair refers to a point outside the base");
        if (!seen.insert(pr).second)
            throw ValidationError("duplicate unit pair (" + u.base[pr.first] + "," + u.base[pr.second] + ")");
    }
    if (!u.atom_names.empty() && u.atom_names.size() != u.pairs.size())
        throw ValidationError("unit: number of atom names differs from number of pairs");
    if (u.pairs.size() > Element::max_width)
        throw ValidationError("unit has more than 64 pairs");
}

std::vector<PointIndex> minimal_base(const ConcreteUnit &u)
{
    std::vector<bool> used(u.base.size(), false);
    for (const auto &[x, y] : u.pairs)
        used.at(x) = used.at(y) = true;
    std::vector<PointIndex> out;
    for (PointIndex p = 0; p < used.size(); ++p)
        if (used[p])
            out.push_back(p);
    return out;
}

HFlags unit_flags(const ConcreteUnit &u)
{
    std::set<PointPair> w(u.pairs.begin(), u.pairs.end());
    HFlags f;
    f.reflexive = std::ranges::all_of(minimal_base(u), [&](PointIndex p) { return w.contains({p, p}); });
    f.symmetric = std::ranges::all_of(u.pairs, [&](const PointPair &pr) { return w.contains({pr.second, pr.first}); });
    return f;
}

namespace {
    std::string default_name(const ConcreteUnit &u, const PointPair &pr)
    {
        const auto &x = u.base[pr.first];
        const auto &y = u.base[pr.second];
        if (x.size() == 1 && y.size() == 1)
            return "e" + x + y;
        return "e(" + x + "," + y + ")";
    }
}

AtomStructure build_concrete(const ConcreteUnit &u)
{
    validate(u);
    const auto n = u.pairs.size();

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(u.atom_names.empty() ? default_name(u, u.pairs[i]) : u.atom_names[i]);
    AtomStructureBuilder b{std::move(names)};

    auto in_w = [&](const std::vector<PointPair> &rel, PointIndex x, PointIndex y) {
        return std::ranges::find(rel, PointPair{x, y}) != rel.end();
    };

    // delta = {(x,y) in W : x = y}
    for (AtomIndex a = 0; a < n; ++a)
        if (u.pairs[a].first == u.pairs[a].second)
            b.identity(a);

    // converse of R = {(x,y) in W : (y,x) in R}, evaluated on R = {pair a}
    for (AtomIndex a = 0; a < n; ++a) {
        const std::vector<PointPair> r{u.pairs[a]};
        for (AtomIndex c = 0; c < n; ++c) {
            auto [x, y] = u.pairs[c];
            if (in_w(r, y, x))
                b.converse(a, c);
        }
    }

    // R o S = {(x,y) in W : exists z in U, (x,z) in R and (z,y) in S}
    for (AtomIndex a = 0; a < n; ++a) {
        const std::vector<PointPair> r{u.pairs[a]};
        for (AtomIndex c = 0; c < n; ++c) {
            const std::vector<PointPair> s{u.pairs[c]};
            for (AtomIndex d = 0; d < n; ++d) {
                auto [x, y] = u.pairs[d];
                for (PointIndex z = 0; z < u.base.size(); ++z)
                    if (in_w(r, x, z) && in_w(s, z, y)) {
                        b.comp(a, c, d);
                        break;
                    }
            }
        }
    }

    b.flags(unit_flags(u));
    return b.build();
}

ConcreteUnit make_unit(std::size_t base_size, std::vector<PointPair> pairs, std::vector<std::string> names)
{
    ConcreteUnit u;
    for (std::size_t i = 0; i < base_size; ++i)
        u.base.push_back(std::to_string(i));
    u.pairs = std::move(pairs);
    u.atom_names = std::move(names);
    validate(u);
    return u;
}

ConcreteUnit full_unit(std::size_t base_size)
{
    std::vector<PointPair> pairs;
    for (PointIndex x = 0; x < base_size; ++x)
        for (PointIndex y = 0; y < base_size; ++y)
            pairs.emplace_back(x, y);
    return make_unit(base_size, std::move(pairs));
}

} // namespace relalg
