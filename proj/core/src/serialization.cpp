#include "relalg/serialization.hpp"

#include "relalg/error.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace relalg::io {

namespace {

    const Json &member(const Json &obj, const char *key, const char *where)
    {
        auto it = obj.find(key);
        if (it == obj.end())
            throw ParseError(std::string(where) + ": missing \"" + key + "\"");
        return *it;
    }

    void expect(bool ok, const std::string &what)
    {
        if (!ok)
            throw ParseError(what);
    }

    void only_keys(const Json &obj, std::initializer_list<std::string_view> keys, const char *where)
    {
        for (const auto &[k, v] : obj.items()) {
            bool known = false;
            for (auto key : keys)
                known = known || key == k;
            if (!known)
                throw ParseError(std::string(where) + ": unknown key \"" + k + "\"");
        }
    }

    std::string as_string(const Json &j, const std::string &where)
    {
        expect(j.is_string(), where + ": expected a string");
        return j.get<std::string>();
    }

    AtomIndex atom_ref(const AtomStructure &s, const Json &j, const std::string &where)
    {
        auto name = as_string(j, where);
        auto a = s.find(name);
        if (!a)
            throw ValidationError(where + ": unknown atom \"" + name + "\"");
        return *a;
    }

    AtomIndex atom_ref(const std::vector<std::string> &names, const std::string &name, const std::string &where)
    {
        for (AtomIndex a = 0; a < names.size(); ++a)
            if (names[a] == name)
                return a;
        throw ValidationError(where + ": dangling reference to atom \"" + name + "\"");
    }

    Json atom_names(const AtomStructure &s, const Element &x)
    {
        Json out = Json::array();
        for (auto a : x.atoms())
            out.push_back(s.name(a));
        return out;
    }

    Json flags_json(const HFlags &f)
    {
        Json out = Json::array();
        if (f.reflexive)
            out.push_back("r");
        if (f.symmetric)
            out.push_back("s");
        return out;
    }

    Json verdict_json(Verdict v) { return to_string(v); }

    Json labeled_edge_json(const LabeledEdge &e, const AtomStructure &s)
    {
        return Json{{"from", to_underlying(e.first.first)}, {"to", to_underlying(e.first.second)}, {"atom", s.name(e.second)}};
    }

    NodeId node_ref(const Json &j, const std::string &where)
    {
        expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0), where + ": expected a node id");
        auto v = j.get<std::uint64_t>();
        expect(v <= UINT32_MAX, where + ": node id out of range");
        return NodeId{static_cast<std::uint32_t>(v)};
    }

} // namespace

Json parse_json(std::string_view text)
{
    std::vector<std::set<std::string>> keys;
    Json::parser_callback_t cb = [&keys](int, nlohmann::json::parse_event_t event, Json &parsed) {
        using E = nlohmann::json::parse_event_t;
        switch (event) {
        case E::object_start:
            keys.emplace_back();
            break;
        case E::object_end:
            keys.pop_back();
            break;
        case E::key:
            if (!keys.back().insert(parsed.get<std::string>()).second)
                throw ParseError("duplicate key \"" + parsed.get<std::string>() + "\"");
            break;
        default:
            break;
        }
        return true;
    };
    try {
        return Json::parse(text.begin(), text.end(), cb);
    }
    catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path &path, std::string_view text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << text;
    if (!out)
        throw IoError("cannot write " + path.string());
}

std::string to_string(AxiomMode m) { return m == AxiomMode::exhaustive ? "exhaustive" : "sampled"; }
std::string to_string(SchedulerMode m) { return m == SchedulerMode::fifo ? "fifo" : "random"; }

// ---- structures

AtomStructure structure_from_json(const Json &j)
{
    expect(j.is_object(), "structure: expected an object");
    only_keys(j, {"atoms", "identity", "converse", "composition", "h"}, "structure");
    const auto &atoms = member(j, "atoms", "structure");
    expect(atoms.is_array(), "structure: \"atoms\" must be an array");
    std::vector<std::string> names;
    for (const auto &a : atoms)
        names.push_back(as_string(a, "structure.atoms"));
    AtomStructureBuilder b{names};

    if (auto it = j.find("identity"); it != j.end()) {
        expect(it->is_array(), "structure: \"identity\" must be an array");
        for (const auto &a : *it)
            b.identity(atom_ref(names, as_string(a, "structure.identity"), "identity"));
    }
    if (auto it = j.find("converse"); it != j.end()) {
        expect(it->is_object(), "structure: \"converse\" must be an object");
        for (const auto &[k, v] : it->items()) {
            const auto a = atom_ref(names, k, "converse");
            if (v.is_array()) {
                if (v.size() > 1)
                    throw ValidationError("converse of \"" + k + "\" has " + std::to_string(v.size()) +
                        " images; it must be a partial function");
                for (const auto &img : v)
                    b.converse(a, atom_ref(names, as_string(img, "structure.converse"), "converse"));
            }
            else if (!v.is_null()) {
                b.converse(a, atom_ref(names, as_string(v, "structure.converse"), "converse"));
            }
        }
    }
    if (auto it = j.find("composition"); it != j.end()) {
        expect(it->is_object(), "structure: \"composition\" must be an object");
        for (const auto &[ka, row] : it->items()) {
            const auto a = atom_ref(names, ka, "composition");
            expect(row.is_object(), "structure.composition." + ka + ": expected an object");
            for (const auto &[kb, cell] : row.items()) {
                const auto bi = atom_ref(names, kb, "composition");
                expect(cell.is_array(), "structure.composition." + ka + "." + kb + ": expected an array");
                for (const auto &c : cell)
                    b.comp(a, bi, atom_ref(names, as_string(c, "structure.composition"), "composition"));
            }
        }
    }
    HFlags flags;
    if (auto it = j.find("h"); it != j.end()) {
        expect(it->is_array(), "structure: \"h\" must be an array");
        for (const auto &f : *it) {
            auto v = as_string(f, "structure.h");
            if (v == "r")
                flags.reflexive = true;
            else if (v == "s")
                flags.symmetric = true;
            else
                throw ValidationError("structure.h: unknown flag \"" + v + "\"");
        }
    }
    b.flags(flags);
    return b.build();
}

Json to_json(const AtomStructure &s)
{
    Json j;
    j["atoms"] = s.names();
    j["identity"] = atom_names(s, s.identity());
    Json conv = Json::object();
    for (AtomIndex a = 0; a < s.size(); ++a)
        if (auto c = s.converse_of(a))
            conv[s.name(a)] = s.name(*c);
    j["converse"] = conv;
    Json comp = Json::object();
    for (AtomIndex a = 0; a < s.size(); ++a) {
        Json row = Json::object();
        for (AtomIndex b = 0; b < s.size(); ++b)
            if (s.comp(a, b).count() > 0)
                row[s.name(b)] = atom_names(s, s.comp(a, b));
        if (!row.empty())
            comp[s.name(a)] = row;
    }
    j["composition"] = comp;
    j["h"] = flags_json(s.flags());
    return j;
}

AtomStructure load_structure(std::string_view text) { return structure_from_json(parse_json(text)); }

// ---- units

ConcreteUnit unit_from_json(const Json &j)
{
    expect(j.is_object(), "unit file: expected an object");
    only_keys(j, {"base", "unit", "names"}, "unit file");
    ConcreteUnit u;
    const auto &base = member(j, "base", "unit file");
    expect(base.is_array(), "unit file: \"base\" must be an array");
    for (const auto &p : base)
        u.base.push_back(as_string(p, "unit file.base"));
    auto point = [&](const Json &p) {
        auto name = as_string(p, "unit file.unit");
        for (PointIndex i = 0; i < u.base.size(); ++i)
            if (u.base[i] == name)
                return i;
        throw ValidationError("unit file: point \"" + name + "\" is not in the base");
    };
    const auto &pairs = member(j, "unit", "unit file");
    expect(pairs.is_array(), "unit file: \"unit\" must be an array");
    for (const auto &pr : pairs) {
        expect(pr.is_array() && pr.size() == 2, "unit file: each pair must be a two-element array");
        u.pairs.emplace_back(point(pr[0]), point(pr[1]));
    }
    if (auto it = j.find("names"); it != j.end()) {
        expect(it->is_array(), "unit file: \"names\" must be an array");
        for (const auto &n : *it)
            u.atom_names.push_back(as_string(n, "unit file.names"));
        if (u.atom_names.size() != u.pairs.size())
            throw ValidationError("unit file: \"names\" must name every pair");
    }
    validate(u);
    return u;
}

Json to_json(const ConcreteUnit &u)
{
    Json j;
    j["base"] = u.base;
    Json pairs = Json::array();
    for (auto [x, y] : u.pairs)
        pairs.push_back(Json::array({u.base.at(x), u.base.at(y)}));
    j["unit"] = pairs;
    if (!u.atom_names.empty())
        j["names"] = u.atom_names;
    return j;
}

ConcreteUnit load_unit(std::string_view text) { return unit_from_json(parse_json(text)); }

// ---- networks

PreNetwork network_from_json(const Json &j, const AtomStructure &s)
{
    expect(j.is_object(), "network: expected an object");
    only_keys(j, {"nodes", "edges"}, "network");
    PreNetwork n;
    const auto &nodes = member(j, "nodes", "network");
    expect(nodes.is_array(), "network: \"nodes\" must be an array");
    for (const auto &x : nodes) {
        auto id = node_ref(x, "network.nodes");
        if (n.has_node(id))
            throw ValidationError("network: duplicate node " + std::to_string(to_underlying(id)));
        n.add_node(id);
    }
    const auto &edges = member(j, "edges", "network");
    expect(edges.is_array(), "network: \"edges\" must be an array");
    for (const auto &e : edges) {
        expect(e.is_object(), "network.edges: expected objects");
        only_keys(e, {"from", "to", "atom"}, "network edge");
        auto x = node_ref(member(e, "from", "network edge"), "network edge");
        auto y = node_ref(member(e, "to", "network edge"), "network edge");
        auto a = atom_ref(s, member(e, "atom", "network edge"), "network edge");
        if (!n.has_node(x) || !n.has_node(y))
            throw ValidationError("network: edge (" + std::to_string(to_underlying(x)) + "," +
                std::to_string(to_underlying(y)) + ") uses an undeclared node");
        if (n.has_edge(x, y))
            throw ValidationError("network: edge (" + std::to_string(to_underlying(x)) + "," +
                std::to_string(to_underlying(y)) + ") is labelled twice");
        n.set_label(x, y, a);
    }
    return n;
}

Json to_json(const PreNetwork &n, const AtomStructure &s)
{
    Json nodes = Json::array();
    for (auto x : n.nodes())
        nodes.push_back(to_underlying(x));
    Json edges = Json::array();
    for (const auto &e : n.labels())
        edges.push_back(labeled_edge_json(e, s));
    return Json{{"nodes", nodes}, {"edges", edges}};
}

// ---- plays

Json to_json(const Move &m, const AtomStructure &s)
{
    if (const auto *am = std::get_if<AtomMove>(&m))
        return Json{{"type", "atom"}, {"atom", s.name(am->atom)}};
    const auto &w = std::get<WitnessMove>(m);
    return Json{{"type", "witness"}, {"x", to_underlying(w.x)}, {"y", to_underlying(w.y)}, {"b", s.name(w.b)},
        {"c", s.name(w.c)}};
}

Json to_json(const PlayTrace &t)
{
    const auto &s = t.structure;
    Json j;
    j["schema"] = trace_schema;
    j["structure"] = to_json(s);
    j["options"] = Json{{"rounds", t.options.rounds}, {"seed", t.options.seed}, {"mode", to_string(t.options.mode)}};
    j["axiom_mode"] = to_string(t.axiom_mode);
    j["warnings"] = t.warnings;
    Json rounds = Json::array();
    for (const auto &r : t.rounds) {
        Json rj;
        rj["round"] = r.round;
        rj["move"] = to_json(r.move, s);
        rj["extended"] = r.extended;
        rj["witness"] = r.witness ? Json(to_underlying(*r.witness)) : Json(nullptr);
        Json added_nodes = Json::array();
        for (auto x : r.added_nodes)
            added_nodes.push_back(to_underlying(x));
        rj["added_nodes"] = added_nodes;
        Json added_edges = Json::array();
        for (const auto &e : r.added_edges)
            added_edges.push_back(labeled_edge_json(e, s));
        rj["added_edges"] = added_edges;
        rj["pending_after"] = r.pending_after;
        rj["version"] = r.version;
        rounds.push_back(rj);
    }
    j["rounds"] = rounds;
    Json pending = Json::array();
    for (const auto &m : t.pending)
        pending.push_back(to_json(m, s));
    j["pending"] = pending;
    j["pending_count"] = t.pending.size();
    j["pending_atom_moves"] = t.pending_atom_moves;
    j["final_network"] = to_json(t.final_network, s);
    j["saturated"] = t.saturated;
    j["rounds_used"] = t.rounds_used();
    return j;
}

Json to_json(const Representation &rep, const AtomStructure &s)
{
    auto pair_json = [](const Edge &e) { return Json::array({node_name(e.first), node_name(e.second)}); };
    Json base = Json::array();
    for (auto x : rep.base)
        base.push_back(node_name(x));
    Json unit = Json::array();
    for (const auto &e : rep.unit)
        unit.push_back(pair_json(e));
    Json h = Json::object();
    for (AtomIndex a = 0; a < rep.h.size(); ++a) {
        Json pairs = Json::array();
        for (const auto &e : rep.h[a])
            pairs.push_back(pair_json(e));
        h[s.name(a)] = pairs;
    }
    return Json{{"base", base}, {"unit", unit}, {"h", h}, {"flags_observed", flags_json(rep.flags_observed)}};
}

Json to_json(const VerificationReport &r)
{
    Json j;
    j["saturated"] = r.pending == 0;
    j["identity_ok"] = r.identity_ok;
    j["converse_ok"] = r.converse_ok;
    j["composition_sound"] = r.composition_sound;
    j["composition_complete"] = verdict_json(r.composition_complete);
    j["injective_ok"] = verdict_json(r.injective_ok);
    j["pending"] = r.pending;
    j["pending_atom_moves"] = r.pending_atom_moves;
    Json flags = Json::object();
    if (r.reflexive_ok)
        flags["r"] = *r.reflexive_ok;
    if (r.symmetric_ok)
        flags["s"] = *r.symmetric_ok;
    j["h_flag_ok"] = flags;
    j["all_true"] = r.all_true();
    Json cex = Json::array();
    for (const auto &w : r.counterexamples)
        cex.push_back(Json{{"field", w.field}, {"detail", w.detail}});
    j["counterexamples"] = cex;
    return j;
}

Json to_json(const AxiomReport &r, const AtomStructure &s)
{
    Json j;
    j["passed"] = r.passed();
    j["mode"] = to_string(r.mode);
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["evaluations"] = r.evaluations;
    Json verdicts = Json::array();
    for (const auto &v : r.verdicts) {
        Json vj{{"axiom", v.axiom}, {"holds", v.holds}, {"required", v.required}};
        if (v.counterexample) {
            static constexpr const char *vars[] = {"x", "y", "z"};
            Json assignment = Json::object();
            for (std::size_t i = 0; i < v.counterexample->assignment.size() && i < 3; ++i)
                assignment[vars[i]] = atom_names(s, v.counterexample->assignment[i]);
            vj["counterexample"] = Json{{"clause", v.counterexample->clause}, {"equation", v.counterexample->equation},
                {"assignment", assignment}};
        }
        verdicts.push_back(vj);
    }
    j["axioms"] = verdicts;
    return j;
}

Json to_json(const LemmaReport &r, const AtomStructure &s)
{
    Json clauses = Json::array();
    for (const auto &c : r.clauses) {
        Json w = Json::array();
        for (auto a : c.witness)
            w.push_back(s.name(a));
        Json cj{{"name", c.name}, {"holds", c.holds}, {"witness", w}};
        if (!c.detail.empty())
            cj["detail"] = c.detail;
        clauses.push_back(cj);
    }
    return Json{{"passed", r.passed()}, {"clauses", clauses}};
}

Json to_json(const NetworkViolation &v, const AtomStructure &s)
{
    Json nodes = Json::array();
    for (auto x : v.nodes)
        nodes.push_back(to_underlying(x));
    Json atoms = Json::array();
    for (auto a : v.atoms)
        atoms.push_back(s.name(a));
    return Json{{"condition", to_string(v.condition)}, {"nodes", nodes}, {"atoms", atoms}, {"detail", v.detail}};
}

Json to_json(const SearchResult &r, const AtomStructure &s)
{
    Json j;
    j["found"] = r.found;
    j["max_base"] = r.max_base;
    j["bases_tried"] = r.bases_tried;
    if (r.witness) {
        const auto &u = r.witness->unit;
        Json h = Json::object();
        for (AtomIndex a = 0; a < s.size(); ++a)
            h[s.name(a)] = Json::array();
        for (std::size_t p = 0; p < u.pairs.size(); ++p)
            h[s.name(r.witness->assignment.at(p))].push_back(
                Json::array({u.base.at(u.pairs[p].first), u.base.at(u.pairs[p].second)}));
        auto uj = to_json(ConcreteUnit{u.base, u.pairs, {}});
        j["witness"] = Json{{"base", uj["base"]}, {"unit", uj["unit"]}, {"h", h}};
    }
    else {
        j["witness"] = nullptr;
        j["result"] = "none up to bound";
    }
    return j;
}

} // namespace relalg::io
