// surfhom: homology of surface bundles over surfaces from holonomy data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "CLI11.hpp"

#include "surfhom/commands.hpp"

namespace {

bool read_file(const std::string& path, std::string& out)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(const surfhom::CommandResult& r)
{
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace surfhom;

    CLI::App app{"Homology of surface bundles over surfaces, computed exactly from holonomy data"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json}, {"table", OutputFormat::table}};
    OutputFormat format = OutputFormat::json;
    std::string file;

    auto* check = app.add_subcommand("check", "Parse and validate a problem file");
    check->add_option("FILE", file, "Problem file (JSON)")->required();

    auto* homology = app.add_subcommand("homology", "Betti numbers, generators and validation verdicts");
    homology->add_option("FILE", file, "Problem file (JSON)")->required();
    homology->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search", "Search words in the holonomy for eigenvalue-1 products");
    search_cmd->add_option("FILE", file, "Problem file (JSON)")->required();
    search_cmd->add_option("--max-len", search.max_len, "Maximum word length")->required()->check(
        CLI::PositiveNumber);
    search_cmd->add_option("--max-states", search.max_states, "Abort after storing this many search states")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--threads", search.threads, "Worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));

    int fiber_genus = 0;
    int base_genus = 0;
    std::string base_name;
    auto* oracle = app.add_subcommand("oracle", "Compare trivial holonomy against the Kunneth formula");
    oracle->add_option("--fiber-genus", fiber_genus, "Fiber genus h >= 2")->required();
    oracle->add_option("--base-genus", base_genus, "Base genus g >= 1")->required();
    oracle->add_option("--base", base_name, "Base type")->required()->check(CLI::IsMember({"closed", "one_boundary"}));
    oracle->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code::malformed;
    }

    const RenderOptions render{format, isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr};

    if (*oracle)
        return emit(run_oracle(fiber_genus, base_genus,
                               base_name == "closed" ? BaseType::closed : BaseType::one_boundary, render));

    std::string text;
    if (!read_file(file, text)) {
        std::cerr << "error: cannot read " << file << "\n";
        return exit_code::malformed;
    }
    if (*check)
        return emit(run_check(text));
    if (*homology)
        return emit(run_homology(text, render));
    return emit(run_search(text, search, render));
}
