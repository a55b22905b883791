#include "ehrspec/ehrspec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum ExitCode { ok = 0, validation = 1, overflow = 2, inconsistency = 3 };

std::string read_input(const std::string &path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) throw ehrspec::InvalidInput("cannot open input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

ehrspec::ToricFamily parse_family(const std::vector<std::string> &args) {
    if (args.empty()) throw ehrspec::InvalidInput("toric needs a family: 'box a1 a2 ...' or 'reeve h'");
    ehrspec::ToricFamily t;
    std::vector<std::int64_t> params;
    for (std::size_t i = 1; i < args.size(); ++i) {
        try {
            std::size_t used = 0;
            params.push_back(std::stoll(args[i], &used));
            if (used != args[i].size()) throw std::invalid_argument(args[i]);
        } catch (const std::exception &) {
            throw ehrspec::InvalidInput("toric parameter '" + args[i] + "' is not an integer");
        }
    }
    if (args[0] == "box") {
        if (params.empty()) throw ehrspec::InvalidInput("toric box needs at least one exponent");
        t.kind = ehrspec::ToricFamily::Kind::box;
        t.exponents = params;
    } else if (args[0] == "reeve") {
        if (params.size() != 1) throw ehrspec::InvalidInput("toric reeve takes exactly one parameter h");
        t.kind = ehrspec::ToricFamily::Kind::reeve;
        t.h = params[0];
    } else {
        throw ehrspec::InvalidInput("unknown toric family '" + args[0] + "'");
    }
    return t;
}

void emit_warnings(const ehrspec::PipelineReport &r) {
    for (const auto &w : r.warnings) std::cerr << "warning: " << w << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Newton spectra, delta-vectors and Ehrhart polynomials of lattice polytopes"};
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "text";
    std::uint64_t cap = ehrspec::EnumerationOptions{}.cap;
    unsigned jobs = 1;
    std::vector<std::string> family;
    std::string counts_csv_path;
    ehrspec::BenchOptions bench;

    auto add_common = [&](CLI::App *sub, bool needs_input) {
        if (needs_input)
            sub->add_option("-i,--input", input_path, "JSON polytope description ('-' for stdin)")
                ->envname("EHRSPEC_INPUT");
        sub->add_option("-f,--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->envname("EHRSPEC_FORMAT");
        sub->add_option("--cap", cap, "Maximum candidate points per enumeration box")->envname("EHRSPEC_CAP");
        sub->add_option("-j,--jobs", jobs, "Threads for lattice point enumeration")
            ->check(CLI::PositiveNumber)
            ->envname("EHRSPEC_JOBS");
    };

    const std::vector<std::pair<std::string, ehrspec::Command>> polytope_commands{
        {"weight", ehrspec::Command::weight},   {"spectrum", ehrspec::Command::spectrum},
        {"delta", ehrspec::Command::delta},     {"ehrhart", ehrspec::Command::ehrhart},
        {"weighted", ehrspec::Command::weighted}, {"reflexive", ehrspec::Command::reflexive},
    };
    const std::map<std::string, std::string> descriptions{
        {"weight", "Weight vector, reducedness, Milnor number"},
        {"spectrum", "Newton spectrum and its statistics"},
        {"delta", "delta-vector from the spectrum"},
        {"ehrhart", "Ehrhart polynomial"},
        {"weighted", "Weighted delta-vectors and weighted Ehrhart polynomials"},
        {"reflexive", "Polar vertices and reflexivity tests"},
    };
    std::map<CLI::App *, ehrspec::Command> subs;
    for (const auto &[name, cmd] : polytope_commands) {
        auto *sub = app.add_subcommand(name, descriptions.at(name));
        add_common(sub, true);
        subs[sub] = cmd;
    }

    auto *toric = app.add_subcommand("toric", "Toric spectrum families: 'box a1 a2 ...' or 'reeve h'");
    toric->add_option("family", family, "Family name followed by its integer parameters")->required();
    add_common(toric, false);

    auto *verify = app.add_subcommand("verify", "Cross-check every closed form against enumeration");
    add_common(verify, true);
    verify->add_option("--toric", family, "Verify a toric family instead of a polytope file")->expected(2, -1);
    verify->add_option("--counts-csv", counts_csv_path, "Write dilate counts as CSV m,count,boundary,interior");

    auto *bench_cmd = app.add_subcommand("bench", "Time closed-form vs enumeration spectra (CSV on stdout)");
    bench_cmd->add_option("--count", bench.count, "Number of random simplices");
    bench_cmd->add_option("--dim", bench.dim, "Dimension")->check(CLI::Range(1, 6));
    bench_cmd->add_option("--max-coord", bench.max_coord, "Coordinate bound")->check(CLI::Range(1, 100));
    bench_cmd->add_option("--seed", bench.seed, "RNG seed");
    add_common(bench_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return validation;
    }

    const ehrspec::OutputFormat fmt = format == "json" ? ehrspec::OutputFormat::json : ehrspec::OutputFormat::text;
    const ehrspec::EnumerationOptions enumeration{cap, jobs};

    try {
        for (const auto &[sub, cmd] : subs) {
            if (!sub->parsed()) continue;
            ehrspec::JobSpec job{cmd, ehrspec::parse_polytope_text(read_input(input_path)), fmt, enumeration};
            const auto report = ehrspec::run_pipeline(job);
            emit_warnings(report);
            if (fmt == ehrspec::OutputFormat::json)
                std::cout << ehrspec::select_for(ehrspec::to_json(report), cmd).dump(2) << "\n";
            else
                std::cout << ehrspec::to_text(report, cmd);
            return ok;
        }
        if (toric->parsed()) {
            ehrspec::JobSpec job{ehrspec::Command::toric, parse_family(family), fmt, enumeration};
            const auto report = ehrspec::run_pipeline(job);
            if (fmt == ehrspec::OutputFormat::json)
                std::cout << ehrspec::to_json(report).dump(2) << "\n";
            else
                std::cout << ehrspec::to_text(report, ehrspec::Command::toric);
            return ok;
        }
        if (verify->parsed()) {
            ehrspec::JobSpec job{ehrspec::Command::verify, {}, fmt, enumeration};
            if (!family.empty())
                job.input = parse_family(family);
            else
                job.input = ehrspec::parse_polytope_text(read_input(input_path));
            if (const auto *in = std::get_if<ehrspec::PolytopeInput>(&job.input)) {
                const auto report = ehrspec::run_pipeline(ehrspec::resolve(*in), enumeration);
                emit_warnings(report);
            }
            const auto result = ehrspec::run_verify(job);
            if (!counts_csv_path.empty()) {
                std::ofstream out(counts_csv_path);
                if (!out) throw ehrspec::InvalidInput("cannot write '" + counts_csv_path + "'");
                out << ehrspec::counts_csv(result.counts);
            }
            if (fmt == ehrspec::OutputFormat::json)
                std::cout << ehrspec::to_json(result).dump(2) << "\n";
            else
                std::cout << ehrspec::to_text(result);
            return result.passed() ? ok : inconsistency;
        }
        if (bench_cmd->parsed()) {
            bench.enumeration = enumeration;
            std::cout << ehrspec::run_bench(bench);
            return ok;
        }
    } catch (const ehrspec::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return validation;
    } catch (const ehrspec::EnumerationTooLarge &e) {
        std::cerr << "error: " << e.what() << "\n";
        return overflow;
    } catch (const ehrspec::InternalInconsistency &e) {
        std::cerr << "error: " << e.what() << "\n";
        return inconsistency;
    }
    return ok;
}
