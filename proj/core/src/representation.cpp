#include "relalg/representation.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace relalg {

std::string node_name(NodeId n) { return "n" + std::to_string(to_underlying(n)); }

PairSet Representation::image(const Element &x) const
{
    if (x.width() != h.size())
        throw WidthMismatch("element width does not match representation");
    PairSet out;
    for (auto a : x.atoms())
        out.insert(h[a].begin(), h[a].end());
    return out;
}

namespace re {

    PairSet compose(const PairSet &w, const PairSet &r, const PairSet &s)
    {
        std::multimap<NodeId, NodeId> s_by_source;
        for (const auto &[z, y] : s)
            s_by_source.emplace(z, y);
        PairSet out;
        for (const auto &[x, z] : r) {
            auto [lo, hi] = s_by_source.equal_range(z);
            for (auto it = lo; it != hi; ++it)
                if (w.contains({x, it->second}))
                    out.insert({x, it->second});
        }
        return out;
    }

    PairSet converse(const PairSet &w, const PairSet &r)
    {
        PairSet out;
        for (const auto &[x, y] : w)
            if (r.contains({y, x}))
                out.insert({x, y});
        return out;
    }

    PairSet diagonal(const PairSet &w)
    {
        PairSet out;
        for (const auto &pr : w)
            if (pr.first == pr.second)
                out.insert(pr);
        return out;
    }

    PairSet complement(const PairSet &w, const PairSet &r)
    {
        PairSet out;
        std::ranges::set_difference(w, r, std::inserter(out, out.end()));
        return out;
    }

} // namespace re

Representation extract(const PlayTrace &trace)
{
    const auto &net = trace.final_network;
    Representation rep;
    rep.base.assign(net.nodes().begin(), net.nodes().end());
    rep.h.resize(trace.structure.size());
    for (const auto &[edge, a] : net.labels()) {
        rep.unit.push_back(edge);
        rep.h.at(a).insert(edge);
    }
    rep.flags_observed.reflexive = std::ranges::all_of(rep.base, [&](NodeId x) { return net.has_edge(x, x); });
    rep.flags_observed.symmetric =
        std::ranges::all_of(rep.unit, [&](const Edge &e) { return net.has_edge(e.second, e.first); });
    return rep;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::pending: return "pending";
    }
    return "?";
}

PlayStatus status_of(const PlayTrace &trace)
{
    return {trace.saturated, trace.pending.size(), trace.pending_atom_moves};
}

bool VerificationReport::all_true() const
{
    return identity_ok && converse_ok && composition_sound && composition_complete == Verdict::holds &&
        injective_ok == Verdict::holds && reflexive_ok.value_or(true) && symmetric_ok.value_or(true);
}

bool VerificationReport::acceptable_partial() const
{
    return identity_ok && converse_ok && composition_sound && composition_complete != Verdict::fails &&
        injective_ok != Verdict::fails && reflexive_ok.value_or(true) && symmetric_ok.value_or(true);
}

namespace {
    std::string show(const Edge &e) { return "(" + node_name(e.first) + "," + node_name(e.second) + ")"; }
}

VerificationReport verify(const Representation &rep, const AtomStructure &s, const PlayStatus &status)
{
    if (rep.atom_count() != s.size())
        throw ValidationError("representation has " + std::to_string(rep.atom_count()) + " atoms, structure has " +
            std::to_string(s.size()));
    const PairSet w(rep.unit.begin(), rep.unit.end());
    for (const auto &ha : rep.h)
        if (!std::ranges::includes(w, ha))
            throw ValidationError("representation maps an atom outside its unit");

    VerificationReport out;
    out.pending = status.pending;
    out.pending_atom_moves = status.pending_atom_moves;
    auto witness = [&](std::string field, std::string detail) {
        out.counterexamples.push_back({std::move(field), std::move(detail)});
    };

    // h(1') = delta
    {
        const auto lhs = rep.image(s.identity());
        const auto rhs = re::diagonal(w);
        if (lhs != rhs) {
            out.identity_ok = false;
            PairSet diff;
            std::ranges::set_symmetric_difference(lhs, rhs, std::inserter(diff, diff.end()));
            witness("identity_ok", "h(1') and the diagonal differ at " + show(*diff.begin()));
        }
    }

    // h(~b) = converse of h(b) inside Re(W)
    for (AtomIndex b = 0; b < s.size() && out.converse_ok; ++b) {
        const auto lhs = rep.image(s.converse(s.atom(b)));
        const auto rhs = re::converse(w, rep.h[b]);
        if (lhs != rhs) {
            out.converse_ok = false;
            witness("converse_ok", "h(~" + s.name(b) + ") differs from the converse of h(" + s.name(b) + ")");
        }
    }

    // h(b) o h(c) against h(b;c)
    bool complete = true;
    for (AtomIndex b = 0; b < s.size(); ++b)
        for (AtomIndex c = 0; c < s.size(); ++c) {
            const auto composed = re::compose(w, rep.h[b], rep.h[c]);
            const auto target = rep.image(s.comp(b, c));
            if (out.composition_sound && !std::ranges::includes(target, composed)) {
                out.composition_sound = false;
                PairSet extra;
                std::ranges::set_difference(composed, target, std::inserter(extra, extra.end()));
                witness("composition_sound", show(*extra.begin()) + " is in h(" + s.name(b) + ")oh(" + s.name(c) +
                        ") but not in h(" + s.name(b) + ";" + s.name(c) + ")");
            }
            if (complete && !std::ranges::includes(composed, target)) {
                complete = false;
                if (status.saturated) {
                    PairSet missing;
                    std::ranges::set_difference(target, composed, std::inserter(missing, missing.end()));
                    witness("composition_complete", show(*missing.begin()) + " is in h(" + s.name(b) + ";" +
                            s.name(c) + ") but has no splitting point");
                }
            }
        }
    if (!status.saturated)
        out.composition_complete = Verdict::pending;
    else
        out.composition_complete = complete ? Verdict::holds : Verdict::fails;

    // every atom has a non-empty image, so distinct elements have distinct images
    std::optional<AtomIndex> unused;
    for (AtomIndex a = 0; a < s.size() && !unused; ++a)
        if (rep.h[a].empty())
            unused = a;
    if (!unused)
        out.injective_ok = Verdict::holds;
    else if (status.pending_atom_moves > 0)
        out.injective_ok = Verdict::pending;
    else {
        out.injective_ok = Verdict::fails;
        witness("injective_ok", "atom " + s.name(*unused) + " labels no edge");
    }

    if (s.flags().reflexive) {
        out.reflexive_ok = rep.flags_observed.reflexive;
        if (!*out.reflexive_ok)
            witness("h_flag_ok", "structure claims r but W is not reflexive on its base");
    }
    if (s.flags().symmetric) {
        out.symmetric_ok = rep.flags_observed.symmetric;
        if (!*out.symmetric_ok)
            witness("h_flag_ok", "structure claims s but W is not symmetric");
    }
    return out;
}

std::optional<std::vector<AtomIndex>> find_isomorphism(const AtomStructure &from, const AtomStructure &to)
{
    const auto n = from.size();
    if (to.size() != n || from.identity().count() != to.identity().count())
        return std::nullopt;

    std::vector<AtomIndex> f(n);
    std::vector<bool> used(n, false);

    // Every identity, converse and composition fact whose atoms are all in
    // 0..k must be preserved; each fact is checked at the step of its largest atom.
    auto consistent = [&](AtomIndex k) {
        if (from.is_identity(k) != to.is_identity(f[k]))
            return false;
        const auto ck = from.converse_of(k);
        if (ck.has_value() != to.converse_of(f[k]).has_value())
            return false;
        if (ck && *ck <= k && to.converse_of(f[k]) != f[*ck])
            return false;
        for (AtomIndex i = 0; i < k; ++i)
            if (from.converse_of(i) == k && to.converse_of(f[i]) != f[k])
                return false;
        for (AtomIndex i = 0; i <= k; ++i)
            for (auto [a, b] : {std::pair{i, k}, std::pair{k, i}}) {
                const auto &src = from.comp(a, b);
                const auto &dst = to.comp(f[a], f[b]);
                if (src.count() != dst.count())
                    return false;
                for (AtomIndex j = 0; j <= k; ++j)
                    if (src.contains(j) != dst.contains(f[j]))
                        return false;
            }
        for (AtomIndex a = 0; a < k; ++a)
            for (AtomIndex b = 0; b < k; ++b)
                if (from.comp(a, b).contains(k) != to.comp(f[a], f[b]).contains(f[k]))
                    return false;
        return true;
    };

    std::function<bool(AtomIndex)> extend = [&](AtomIndex k) {
        if (k == n)
            return true;
        for (AtomIndex t = 0; t < n; ++t) {
            if (used[t])
                continue;
            f[k] = t;
            used[t] = true;
            if (consistent(k) && extend(k + 1))
                return true;
            used[t] = false;
        }
        return false;
    };

    if (!extend(0))
        return std::nullopt;
    return f;
}

std::optional<AtomStructure> induced_structure(const Representation &rep)
{
    const auto n = rep.atom_count();
    const PairSet w(rep.unit.begin(), rep.unit.end());
    std::map<Edge, AtomIndex> owner;
    for (AtomIndex a = 0; a < n; ++a) {
        if (rep.h[a].empty())
            return std::nullopt;
        for (const auto &e : rep.h[a])
            owner[e] = a;
    }
    // a set in the image of h decomposes into whole h-atoms
    auto decompose = [&](const PairSet &x) -> std::optional<Element> {
        auto el = Element::zero(n);
        for (const auto &e : x) {
            auto it = owner.find(e);
            if (it == owner.end())
                return std::nullopt;
            el.insert(it->second);
        }
        for (auto a : el.atoms())
            if (!std::ranges::includes(x, rep.h[a]))
                return std::nullopt;
        return el;
    };

    std::vector<std::string> names;
    for (AtomIndex a = 0; a < n; ++a)
        names.push_back("h" + std::to_string(a));
    AtomStructureBuilder b{names};
    const auto delta = re::diagonal(w);
    for (AtomIndex a = 0; a < n; ++a) {
        if (std::ranges::includes(delta, rep.h[a]))
            b.identity(a);
        auto conv = decompose(re::converse(w, rep.h[a]));
        if (!conv || conv->count() > 1)
            return std::nullopt;
        if (conv->count() == 1)
            b.converse(a, conv->atoms().front());
        for (AtomIndex c = 0; c < n; ++c) {
            auto comp = decompose(re::compose(w, rep.h[a], rep.h[c]));
            if (!comp)
                return std::nullopt;
            b.set_comp(a, c, *comp);
        }
    }
    b.flags(rep.flags_observed);
    return b.build();
}

std::vector<ConcreteUnit> unit_components(const Representation &rep)
{
    std::map<NodeId, NodeId> parent;
    for (auto x : rep.base)
        parent[x] = x;
    std::function<NodeId(NodeId)> root = [&](NodeId x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto &[x, y] : rep.unit)
        parent[root(x)] = root(y);

    std::map<NodeId, ConcreteUnit> by_root;
    std::map<NodeId, PointIndex> local;
    for (auto x : rep.base) {
        auto &u = by_root[root(x)];
        local[x] = u.base.size();
        u.base.push_back(node_name(x));
    }
    for (const auto &[x, y] : rep.unit)
        by_root[root(x)].pairs.emplace_back(local[x], local[y]);

    std::vector<ConcreteUnit> out;
    for (auto &[r, u] : by_root)
        out.push_back(std::move(u));
    return out;
}

RoundtripReport roundtrip_check(const ConcreteUnit &u, std::size_t budget)
{
    const auto a = build_concrete(u);
    RoundtripReport out;
    const auto setup = prepare_game(a);
    out.axioms_passed = setup.axioms.passed();

    PlayOptions opts;
    opts.rounds = budget;
    const auto trace = run_game(setup, opts);
    out.saturated = trace.saturated;
    out.rounds_used = trace.rounds_used();

    const auto rep = extract(trace);
    out.verification = verify(rep, a, status_of(trace));
    if (auto induced = induced_structure(rep)) {
        out.isomorphism = find_isomorphism(*induced, a);
        out.isomorphic = out.isomorphism.has_value();
    }
    for (const auto &component : unit_components(rep))
        out.components_isomorphic.push_back(find_isomorphism(build_concrete(component), a).has_value());
    return out;
}

} // namespace relalg
