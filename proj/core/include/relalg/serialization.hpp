#pragma once

#include "relalg/atom_calculus.hpp"
#include "relalg/axioms.hpp"
#include "relalg/concrete.hpp"
#include "relalg/game.hpp"
#include "relalg/network.hpp"
#include "relalg/oracle.hpp"
#include "relalg/representation.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace relalg::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view trace_schema = "relalg.trace/1";

/// Parses JSON, rejecting duplicate object keys. Throws ParseError.
Json parse_json(std::string_view text);
/// Two-space indented text with a trailing newline.
std::string dump(const Json &j);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view text);

AtomStructure structure_from_json(const Json &j);
Json to_json(const AtomStructure &s);
AtomStructure load_structure(std::string_view text);

ConcreteUnit unit_from_json(const Json &j);
Json to_json(const ConcreteUnit &u);
ConcreteUnit load_unit(std::string_view text);

PreNetwork network_from_json(const Json &j, const AtomStructure &s);
Json to_json(const PreNetwork &n, const AtomStructure &s);

Json to_json(const Move &m, const AtomStructure &s);
Json to_json(const PlayTrace &t);
Json to_json(const Representation &rep, const AtomStructure &s);
Json to_json(const VerificationReport &r);
Json to_json(const AxiomReport &r, const AtomStructure &s);
Json to_json(const LemmaReport &r, const AtomStructure &s);
Json to_json(const NetworkViolation &v, const AtomStructure &s);
Json to_json(const SearchResult &r, const AtomStructure &s);

std::string to_string(AxiomMode m);
std::string to_string(SchedulerMode m);

} // namespace relalg::io
