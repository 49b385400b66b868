#include "commands.hpp"

#include "relalg/atom_calculus.hpp"
#include "relalg/axioms.hpp"
#include "relalg/concrete.hpp"
#include "relalg/dot.hpp"
#include "relalg/error.hpp"
#include "relalg/fixtures.hpp"
#include "relalg/game.hpp"
#include "relalg/network.hpp"
#include "relalg/oracle.hpp"
#include "relalg/representation.hpp"
#include "relalg/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace relalg::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

    // Writes to a file when a path is given, else to out.
    void emit(const Json &j, const std::string &path, std::ostream &out)
    {
        if (path.empty())
            out << io::dump(j);
        else
            io::write_file(path, io::dump(j));
    }

    AtomStructure read_structure(const std::string &path) { return io::load_structure(io::read_file(path)); }

    struct AxiomFlags {
        std::string mode = "auto";
        std::uint64_t samples = AxiomOptions{}.samples;
        std::uint64_t seed = 0;
        std::uint64_t budget = AxiomOptions{}.budget;

        void add_to(CLI::App &cmd)
        {
            cmd.add_option("--mode", mode, "exhaustive, sampled, or auto (exhaustive within budget)")
                ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
                ->capture_default_str();
            cmd.add_option("--samples", samples, "assignments per clause in sampled mode")->capture_default_str();
            cmd.add_option("--seed", seed, "sampling seed")->capture_default_str();
            cmd.add_option("--budget", budget, "largest exhaustive assignment count per clause")->capture_default_str();
        }

        AxiomOptions options() const
        {
            AxiomOptions o;
            o.mode = mode == "sampled" ? AxiomMode::sampled : AxiomMode::exhaustive;
            o.fallback_to_sampling = mode == "auto";
            o.samples = samples;
            o.seed = seed;
            o.budget = budget;
            return o;
        }
    };

    struct PlayFlags {
        std::size_t rounds = 64;
        std::uint64_t seed = 0;
        std::string mode = "fifo";

        void add_to(CLI::App &cmd)
        {
            cmd.add_option("--rounds", rounds, "round budget")->capture_default_str();
            cmd.add_option("--seed", seed, "seed for the random scheduler")->capture_default_str();
            cmd.add_option("--mode", mode, "scheduler: fifo or random")
                ->check(CLI::IsMember({"fifo", "random"}))
                ->capture_default_str();
        }

        PlayOptions options() const
        {
            PlayOptions o;
            o.rounds = rounds;
            o.seed = seed;
            o.mode = mode == "random" ? SchedulerMode::random : SchedulerMode::fifo;
            return o;
        }
    };

    void report_failed_axioms(const AxiomReport &r, std::ostream &err)
    {
        for (const auto &v : r.verdicts) {
            if (!v.required || v.holds)
                continue;
            err << v.axiom << " fails";
            if (v.counterexample)
                err << " (" << v.counterexample->clause << ": " << v.counterexample->equation << ")";
            err << "\n";
        }
    }

    int check_axioms_cmd(const std::string &path, const AxiomFlags &flags, const std::string &output, std::ostream &out,
        std::ostream &err)
    {
        const auto s = read_structure(path);
        const auto report = check_axioms(s, flags.options());
        emit(io::to_json(report, s), output, out);
        if (report.passed())
            return exit_ok;
        report_failed_axioms(report, err);
        return exit_failed;
    }

    int validate_lemmas_cmd(const std::string &path, const std::string &output, std::ostream &out, std::ostream &err)
    {
        const auto s = read_structure(path);
        AxiomOptions ao;
        ao.fallback_to_sampling = true;
        const auto axioms = check_axioms(s, ao);
        if (!axioms.passed()) {
            Json j{{"passed", false}, {"precondition", "structure fails the axioms"}, {"axioms", io::to_json(axioms, s)}};
            emit(j, output, out);
            report_failed_axioms(axioms, err);
            return exit_failed;
        }
        const auto report = validate_lemmas(s);
        emit(io::to_json(report, s), output, out);
        if (const auto *f = report.first_failure()) {
            err << "lemma " << f->name << " fails";
            if (!f->detail.empty())
                err << ": " << f->detail;
            err << "\n";
            return exit_failed;
        }
        return exit_ok;
    }

    int from_unit_cmd(const std::string &path, const std::string &output, std::ostream &out)
    {
        const auto u = io::load_unit(io::read_file(path));
        emit(io::to_json(build_concrete(u)), output, out);
        return exit_ok;
    }

    int play_cmd(const std::string &path, const PlayFlags &flags, const std::string &output, std::ostream &out,
        std::ostream &err)
    {
        const auto s = read_structure(path);
        PlayTrace trace;
        try {
            trace = run_game(s, flags.options());
        }
        catch (const GameRefused &e) {
            err << "game refused: " << e.what() << "\n";
            return exit_failed;
        }
        emit(io::to_json(trace), output, out);
        for (const auto &w : trace.warnings)
            err << "warning: " << w << "\n";
        return exit_ok;
    }

    int represent_cmd(const std::string &path, const PlayFlags &flags, const std::string &dir, bool allow_partial,
        std::ostream &out, std::ostream &err)
    {
        const auto s = read_structure(path);
        PlayTrace trace;
        try {
            trace = run_game(s, flags.options());
        }
        catch (const GameRefused &e) {
            err << "game refused: " << e.what() << "\n";
            return exit_failed;
        }
        const auto rep = extract(trace);
        const auto report = verify(rep, s, status_of(trace));
        const auto verification = io::to_json(report);

        if (!dir.empty()) {
            const fs::path d{dir};
            io::write_file(d / "trace.json", io::dump(io::to_json(trace)));
            io::write_file(d / "representation.json", io::dump(io::to_json(rep, s)));
            io::write_file(d / "verification.json", io::dump(verification));
            io::write_file(d / "network.dot", to_dot(trace.final_network, s));
        }
        out << io::dump(verification);
        for (const auto &w : trace.warnings)
            err << "warning: " << w << "\n";

        if (report.all_true())
            return exit_ok;
        if (report.acceptable_partial()) {
            err << "play not saturated after " << trace.rounds_used() << " rounds; " << report.pending
                << " requests pending\n";
            return allow_partial ? exit_ok : exit_failed;
        }
        for (const auto &c : report.counterexamples)
            err << c.field << ": " << c.detail << "\n";
        return exit_failed;
    }

    int brute_force_cmd(const std::string &path, std::size_t max_base, const std::string &output, std::ostream &out,
        std::ostream &err)
    {
        const auto s = read_structure(path);
        const auto result = brute_force_representation(s, max_base);
        emit(io::to_json(result, s), output, out);
        if (result.found)
            return exit_ok;
        err << "none up to bound: no representation on bases of at most " << max_base << " points\n";
        return exit_failed;
    }

    int network_check_cmd(const std::string &net_path, const std::string &structure_path, std::ostream &out,
        std::ostream &err)
    {
        const auto s = read_structure(structure_path);
        ProfiledStructure p{s};
        const auto n = io::network_from_json(io::parse_json(io::read_file(net_path)), s);
        const auto v = check_network(n, p);
        Json j{{"network", v ? false : true}};
        if (v)
            j["violation"] = io::to_json(*v, s);
        out << io::dump(j);
        if (!v)
            return exit_ok;
        err << to_string(v->condition) << " violated: " << v->detail << "\n";
        return exit_failed;
    }

    std::string unit_file_name(std::size_t index, const ConcreteUnit &u)
    {
        std::ostringstream name;
        name << "b" << u.base.size() << "_" << std::setw(3) << std::setfill('0') << index << ".json";
        return name.str();
    }

    int catalog_cmd(std::size_t max_base, const std::string &dir, std::ostream &out)
    {
        const auto units = unit_catalog(max_base);
        Json listing = Json::array();
        std::map<std::size_t, std::size_t> per_size;
        for (const auto &u : units) {
            const auto name = unit_file_name(per_size[u.base.size()]++, u);
            if (!dir.empty())
                io::write_file(fs::path{dir} / name, io::dump(io::to_json(u)));
            auto entry = io::to_json(u);
            entry["file"] = name;
            listing.push_back(entry);
        }
        out << io::dump(Json{{"max_base", max_base}, {"count", units.size()}, {"units", listing}});
        return exit_ok;
    }

    int fixtures_cmd(const std::string &dir, std::ostream &out)
    {
        const fs::path d{dir};
        for (const auto &f : fixtures::all()) {
            io::write_file(d / "structures" / (f.name + ".json"), io::dump(io::to_json(f.structure)));
            if (f.has_unit)
                io::write_file(d / "units" / (f.name + ".json"), io::dump(io::to_json(f.unit)));
            out << f.name << "\n";
        }
        return exit_ok;
    }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Axiom checking, network games and relativized representations for finite atom structures", "relalg"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string input, second, output, dir;
    AxiomFlags axiom_flags;
    PlayFlags play_flags;
    bool allow_partial = false;
    std::size_t max_base = 3;

    auto *cmd = app.add_subcommand("check-axioms", "evaluate the axioms on a structure file");
    cmd->add_option("structure", input, "structure JSON")->required();
    axiom_flags.add_to(*cmd);
    cmd->add_option("-o,--output", output, "write the report here instead of stdout");
    cmd->callback([&] { action = [&] { return check_axioms_cmd(input, axiom_flags, output, out, err); }; });

    cmd = app.add_subcommand("validate-lemmas", "check the atom-level consequences of the axioms");
    cmd->add_option("structure", input, "structure JSON")->required();
    cmd->add_option("-o,--output", output, "write the report here instead of stdout");
    cmd->callback([&] { action = [&] { return validate_lemmas_cmd(input, output, out, err); }; });

    cmd = app.add_subcommand("from-unit", "build the atom structure of a concrete unit");
    cmd->add_option("unit", input, "unit JSON")->required();
    cmd->add_option("-o,--output", output, "write the structure here instead of stdout");
    cmd->callback([&] { action = [&] { return from_unit_cmd(input, output, out); }; });

    cmd = app.add_subcommand("play", "play the network game and print the trace");
    cmd->add_option("structure", input, "structure JSON")->required();
    play_flags.add_to(*cmd);
    cmd->add_option("-o,--output", output, "write the trace here instead of stdout");
    cmd->callback([&] { action = [&] { return play_cmd(input, play_flags, output, out, err); }; });

    cmd = app.add_subcommand("represent", "play, extract a representation and verify it");
    cmd->add_option("structure", input, "structure JSON")->required();
    play_flags.add_to(*cmd);
    cmd->add_option("--out", dir, "directory for trace.json, representation.json, verification.json, network.dot");
    cmd->add_flag("--allow-partial", allow_partial, "accept an unsaturated play whose checks are otherwise true");
    cmd->callback([&] { action = [&] { return represent_cmd(input, play_flags, dir, allow_partial, out, err); }; });

    cmd = app.add_subcommand("brute-force", "search small units for a representation");
    cmd->add_option("structure", input, "structure JSON")->required();
    cmd->add_option("--max-base", max_base, "largest base size tried")->capture_default_str();
    cmd->add_option("-o,--output", output, "write the result here instead of stdout");
    cmd->callback([&] { action = [&] { return brute_force_cmd(input, max_base, output, out, err); }; });

    cmd = app.add_subcommand("network-check", "check a network file against the network conditions");
    cmd->add_option("network", input, "network JSON")->required();
    cmd->add_option("structure", second, "structure JSON")->required();
    cmd->callback([&] { action = [&] { return network_check_cmd(input, second, out, err); }; });

    cmd = app.add_subcommand("catalog", "list all units up to renaming of points");
    cmd->add_option("--max-base", max_base, "largest base size")->capture_default_str();
    cmd->add_option("--out", dir, "also write one unit file per entry into this directory");
    cmd->callback([&] { action = [&] { return catalog_cmd(max_base, dir, out); }; });

    cmd = app.add_subcommand("fixtures", "write the built-in fixture structures and units");
    cmd->add_option("--out", dir, "target directory")->required();
    cmd->callback([&] { action = [&] { return fixtures_cmd(dir, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        return action();
    }
    catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const GuardExceeded &e) {
        err << "bound exceeded: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << " (use --mode sampled or a larger --budget)\n";
        return exit_input_error;
    }
    catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
}

} // namespace relalg::cli
