#include "tiltlab/app/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <optional>
#include <iostream>
#include <unistd.h>

namespace {

const char* describe(const std::string& name) {
    static const std::map<std::string, const char*> text{
        {"roots", "positive roots of a Dynkin quiver"},
        {"catalog", "exceptional modules with Hom and Ext tables"},
        {"homext", "dim Hom and dim Ext^1 of two modules"},
        {"tilting", "tilting modules, optionally of a Serre subcategory"},
        {"complements", "complements of an almost complete tilting module"},
        {"volume", "sum of tilting volumes"},
        {"complex", "the complex of partial tilting modules"},
        {"fan", "cone forms and fan checks"},
        {"clusters", "cluster variables and clusters by mutation"},
        {"mutate", "apply a mutation sequence to the initial seed"},
        {"cta", "cluster tilted algebra dimensions or quiver"},
        {"check", "run the invariant checks"},
    };
    const auto it = text.find(name);
    return it == text.end() ? "" : it->second;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tiltlab::app;
    CLI::App cli{"Exact computations with representations of acyclic quivers"};
    cli.require_subcommand(1);

    CommandRequest req;
    std::string quiver, output, format, presentation;
    std::vector<std::string> modules, sequence;
    std::optional<std::int64_t> cap, max_length;
    std::optional<std::vector<std::string>> support_ids;
    bool no_cache = false;

    for (const auto& name : subcommands()) {
        CLI::App* sub = cli.add_subcommand(name, describe(name));
        sub->add_option("--quiver,-q", quiver, "quiver JSON file");
        sub->add_option("--cap", cap, "length bound for catalogs of non-Dynkin quivers")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output,-o", output, "write the result to a file");
        sub->add_flag("--no-cache", no_cache, "do not read or write the catalog cache");
        if (name == "tilting") sub->add_option("--support", support_ids, "vertex ids of a Serre subcategory")->delimiter(',');
        if (name == "homext") sub->add_option("modules", modules, "two dimension vectors or representation files")->expected(2);
        if (name == "complements") sub->add_option("summands", modules, "dimension vectors of an almost complete module");
        if (name == "cta") {
            sub->add_option("summands", modules, "dimension vectors of a tilting module");
            sub->add_option("--presentation", presentation, "presentation JSON of an algebra with relations");
        }
        if (name == "volume") sub->add_option("--max-length", max_length, "sum over preprojective summands of bounded length");
        if (name == "complex") sub->add_flag("--prime", req.prime, "add the negative simple vertices");
        if (name == "fan") sub->add_option("--radius", req.radius, "half-width of the sampled integer box");
        if (name == "clusters") sub->add_option("--depth", req.depth, "mutation depth bound");
        if (name == "mutate") sub->add_option("--sequence", sequence, "vertex ids to mutate at, in order")->delimiter(',');
        if (name == "check") sub->add_option("--seed", req.seed, "seed of the randomized checks");
    }

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return exit_usage;
    }

    req.subcommand = cli.get_subcommands().front()->get_name();
    if (!quiver.empty()) req.quiver_path = quiver;
    req.cap = cap;
    if (!output.empty()) req.output_path = output;
    if (!presentation.empty()) req.presentation_path = presentation;
    req.support = support_ids;
    req.max_length = max_length;
    req.modules = modules;
    req.sequence = sequence;
    req.use_cache = !no_cache;
    if (format.empty())
        req.format = (!req.output_path && isatty(fileno(stdout))) ? OutputFormat::table : OutputFormat::json;
    else
        req.format = format == "json" ? OutputFormat::json : OutputFormat::table;
    return run(req, std::cout, std::cerr);
}
