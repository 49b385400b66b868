#include "relalg/atom_calculus.hpp"

#include "relalg/error.hpp"

#include <algorithm>
#include <functional>

namespace relalg {

namespace {

    // Identity atoms i with a in comp(i, a) (start) or comp(a, i) (end).
    std::vector<AtomIndex> loop_candidates(const AtomStructure &s, AtomIndex a, bool start)
    {
        std::vector<AtomIndex> out;
        for (auto i : s.identity().atoms())
            if ((start ? s.comp(i, a) : s.comp(a, i)).contains(a))
                out.push_back(i);
        return out;
    }

    std::optional<AtomIndex> unique_loop(const AtomStructure &s, AtomIndex a, bool start)
    {
        const char *which = start ? "start" : "end";
        const auto candidates = loop_candidates(s, a, start);
        if (candidates.empty())
            throw ProfileError(std::string{which} + "(" + s.name(a) + ") is non-zero but no identity atom i has " +
                s.name(a) + (start ? " <= i;" : " <= ;i") + s.name(a));
        if (candidates.size() > 1)
            throw ProfileError(std::string{which} + " identity atom of " + s.name(a) + " is not unique: " +
                s.name(candidates[0]) + " and " + s.name(candidates[1]));
        return candidates.front();
    }

} // namespace

std::vector<AtomProfile> profile_atoms(const AtomStructure &s)
{
    std::vector<AtomProfile> out;
    out.reserve(s.size());
    const auto &idt = s.identity();
    for (AtomIndex a = 0; a < s.size(); ++a) {
        AtomProfile p;
        p.atom = a;
        p.is_identity = s.is_identity(a);
        p.conv = s.converse_of(a);
        p.has_st = !s.compose(idt, s.atom(a)).empty();
        p.has_end = !s.compose(s.atom(a), idt).empty();
        if (p.has_st)
            p.s_atom = unique_loop(s, a, true);
        if (p.has_end)
            p.e_atom = unique_loop(s, a, false);
        out.push_back(p);
    }
    return out;
}

ProfiledStructure::ProfiledStructure(AtomStructure s) : structure_(std::move(s)), profiles_(profile_atoms(structure_))
{
    splittings_.resize(structure_.size());
    for (AtomIndex b = 0; b < structure_.size(); ++b)
        for (AtomIndex c = 0; c < structure_.size(); ++c)
            for (auto a : structure_.comp(b, c).atoms())
                splittings_[a].emplace_back(b, c);
}

bool LemmaReport::passed() const
{
    return std::ranges::all_of(clauses, [](const LemmaClause &c) { return c.holds; });
}

const LemmaClause *LemmaReport::first_failure() const
{
    auto it = std::ranges::find_if(clauses, [](const LemmaClause &c) { return !c.holds; });
    return it == clauses.end() ? nullptr : &*it;
}

LemmaReport validate_lemmas(const AtomStructure &s)
{
    LemmaReport report;
    std::vector<AtomProfile> prof;
    try {
        prof = profile_atoms(s);
        report.clauses.push_back({"loops.exist_unique", true, {}, {}});
    }
    catch (const ProfileError &e) {
        report.clauses.push_back({"loops.exist_unique", false, {}, e.what()});
        return report;
    }
    const auto n = s.size();
    auto in_comp = [&](std::optional<AtomIndex> a, std::optional<AtomIndex> b, std::optional<AtomIndex> c) {
        return a && b && c && s.comp(*b, *c).contains(*a);
    };

    // Per-atom clauses: the predicate returns an empty string on success.
    auto per_atom = [&](std::string name, const std::function<std::string(const AtomProfile &)> &bad) {
        LemmaClause clause{std::move(name), true, {}, {}};
        for (const auto &p : prof) {
            if (auto why = bad(p); !why.empty()) {
                clause.holds = false;
                clause.witness = {p.atom};
                clause.detail = why;
                break;
            }
        }
        report.clauses.push_back(std::move(clause));
    };

    per_atom("converse.involution", [&](const AtomProfile &p) -> std::string {
        if (!p.conv)
            return {};
        const auto back = prof[*p.conv].conv;
        if (!back)
            return "converse of converse is zero";
        return *back == p.atom ? "" : "converse of converse is " + s.name(*back);
    });

    {
        LemmaClause clause{"converse.injective", true, {}, {}};
        for (AtomIndex a = 0; a < n && clause.holds; ++a)
            for (AtomIndex b = a + 1; b < n; ++b)
                if (prof[a].conv && prof[b].conv && *prof[a].conv == *prof[b].conv) {
                    clause.holds = false;
                    clause.witness = {a, b};
                    clause.detail = "distinct atoms share the converse " + s.name(*prof[a].conv);
                    break;
                }
        report.clauses.push_back(std::move(clause));
    }

    per_atom("loops.start_unit", [&](const AtomProfile &p) -> std::string {
        if (!p.has_st)
            return {};
        return s.comp(*p.s_atom, p.atom) == s.atom(p.atom) ? "" : "S(a);a differs from a";
    });
    per_atom("loops.end_unit", [&](const AtomProfile &p) -> std::string {
        if (!p.has_end)
            return {};
        return s.comp(p.atom, *p.e_atom) == s.atom(p.atom) ? "" : "a;E(a) differs from a";
    });

    per_atom("converse_loops.start", [&](const AtomProfile &p) -> std::string {
        if (!p.conv || !p.has_st)
            return {};
        const auto &q = prof[*p.conv];
        return q.has_end && q.e_atom == p.s_atom ? "" : "end(~a) is zero or E(~a) differs from S(a)";
    });
    per_atom("converse_loops.end", [&](const AtomProfile &p) -> std::string {
        if (!p.conv || !p.has_end)
            return {};
        const auto &q = prof[*p.conv];
        return q.has_st && q.s_atom == p.e_atom ? "" : "st(~a) is zero or S(~a) differs from E(a)";
    });
    per_atom("converse_loops.start_in_cycle", [&](const AtomProfile &p) -> std::string {
        if (!p.conv || !p.has_st)
            return {};
        return in_comp(p.s_atom, p.atom, p.conv) ? "" : "S(a) is not below a;~a";
    });
    per_atom("converse_loops.end_in_cycle", [&](const AtomProfile &p) -> std::string {
        if (!p.conv || !p.has_end)
            return {};
        return in_comp(p.e_atom, p.conv, p.atom) ? "" : "E(a) is not below ~a;a";
    });

    per_atom("identity_atoms.self", [&](const AtomProfile &p) -> std::string {
        if (!p.is_identity)
            return {};
        if (!p.conv || !p.has_st || !p.has_end)
            return "identity atom with zero converse, start or end";
        return *p.conv == p.atom && *p.s_atom == p.atom && *p.e_atom == p.atom ? "" : "a, ~a, S(a), E(a) not all equal";
    });

    {
        LemmaClause clause{"identity_atoms.pairs", true, {}, {}};
        const auto ids = s.identity().atoms();
        for (auto i : ids) {
            for (auto j : ids) {
                const bool ok = i == j ? s.comp(i, i).contains(i) : s.comp(i, j).empty();
                if (!ok) {
                    clause.holds = false;
                    clause.witness = {i, j};
                    clause.detail = i == j ? "i is not below i;i" : "i;j is non-zero for distinct identity atoms";
                    break;
                }
            }
            if (!clause.holds)
                break;
        }
        report.clauses.push_back(std::move(clause));
    }

    // Triple clauses over a <= b;c, scanned in (b, c, a) canonical order.
    using TripleCheck = std::function<std::string(const AtomProfile &, const AtomProfile &, const AtomProfile &)>;
    auto per_triple = [&](std::string name, const TripleCheck &bad) {
        LemmaClause clause{std::move(name), true, {}, {}};
        for (AtomIndex b = 0; b < n && clause.holds; ++b)
            for (AtomIndex c = 0; c < n && clause.holds; ++c)
                for (auto a : s.comp(b, c).atoms())
                    if (auto why = bad(prof[a], prof[b], prof[c]); !why.empty()) {
                        clause.holds = false;
                        clause.witness = {a, b, c};
                        clause.detail = why;
                        break;
                    }
        report.clauses.push_back(std::move(clause));
    };

    per_triple("composition.start", [](const AtomProfile &a, const AtomProfile &b, const AtomProfile &) -> std::string {
        if (a.has_st != b.has_st)
            return "st(a) and st(b) disagree on being zero";
        return a.s_atom == b.s_atom ? "" : "S(a) differs from S(b)";
    });
    per_triple("composition.end", [](const AtomProfile &a, const AtomProfile &, const AtomProfile &c) -> std::string {
        if (a.has_end != c.has_end)
            return "end(a) and end(c) disagree on being zero";
        return a.e_atom == c.e_atom ? "" : "E(a) differs from E(c)";
    });
    per_triple("composition.middle", [](const AtomProfile &, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (b.has_end != c.has_st)
            return "end(b) and st(c) disagree on being zero";
        return b.e_atom == c.s_atom ? "" : "E(b) differs from S(c)";
    });

    per_triple("cycles.identity", [](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!a.is_identity)
            return {};
        return b.conv == c.atom && c.conv == b.atom ? "" : "a is an identity atom but b, c are not mutual converses";
    });
    per_triple("cycles.left_converse", [&](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!b.conv)
            return {};
        return in_comp(c.atom, b.conv, a.atom) ? "" : "c is not below ~b;a";
    });
    per_triple("cycles.right_converse", [&](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!c.conv)
            return {};
        return in_comp(b.atom, a.atom, c.conv) ? "" : "b is not below a;~c";
    });
    per_triple("cycles.converse_of_left", [&](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!a.conv || !b.conv)
            return {};
        return in_comp(b.conv, c.atom, a.conv) ? "" : "~b is not below c;~a";
    });
    per_triple("cycles.converse_of_right", [&](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!a.conv || !c.conv)
            return {};
        return in_comp(c.conv, a.conv, b.atom) ? "" : "~c is not below ~a;b";
    });
    per_triple("cycles.full_converse", [&](const AtomProfile &a, const AtomProfile &b, const AtomProfile &c) -> std::string {
        if (!a.conv || !b.conv || !c.conv)
            return {};
        return in_comp(a.conv, c.conv, b.conv) ? "" : "~a is not below ~c;~b";
    });

    return report;
}

} // namespace relalg
