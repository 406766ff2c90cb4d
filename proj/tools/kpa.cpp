#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kpa/commands.hpp"
#include "kpa/corpus.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kpa::Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kumjian-Pask algebras of finite higher-rank graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));

    std::string file, ring_text = "Q", bound_text, expression, output, corpus_name;
    kpa::GeneratorConfig gen;

    auto* validate = app.add_subcommand("validate", "Check a graph spec");
    validate->add_option("file", file, "Graph spec")->required();

    auto* analyze = app.add_subcommand("analyze", "Lattice, cofinality, cycles and aperiodicity");
    analyze->add_option("file", file, "Graph spec")->required();
    analyze->add_option("--bound", bound_text, "Search bound v1,..,vk");

    auto* classify = app.add_subcommand("classify", "Simplicity and pure infiniteness verdict");
    classify->add_option("file", file, "Graph spec")->required();
    classify->add_option("--ring", ring_text, "Q, Z or Zmod:<m>");
    classify->add_option("--bound", bound_text, "Search bound v1,..,vk");

    auto* eval = app.add_subcommand("eval", "Normal form of an element literal");
    eval->add_option("file", file, "Graph spec")->required();
    eval->add_option("expression", expression, "Element, e.g. 's(a)*t(a) - s(v)'")->required();
    eval->add_option("--ring", ring_text, "Q, Z or Zmod:<m>");

    auto* generate = app.add_subcommand("generate", "Seeded random graph spec");
    generate->add_option("--rank", gen.rank, "k")->check(CLI::Range(1, 8));
    generate->add_option("--vertices", gen.vertices, "Vertex count")->check(CLI::Range(1, 64));
    generate->add_option("--min-edges", gen.min_edges, "Fewest edges per color");
    generate->add_option("--max-edges", gen.max_edges, "Most edges per color");
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("-o,--output", output, "Write the spec here instead of stdout");

    auto* corpus = app.add_subcommand("corpus", "Print a named example graph");
    corpus->add_option("name", corpus_name, "Example name; 'list' for all")->required();

    CLI11_PARSE(app, argc, argv);

    const kpa::Format fmt = format == "structured" ? kpa::Format::Structured : kpa::Format::Text;
    const auto start = std::chrono::steady_clock::now();
    kpa::CommandResult result;
    std::string spec_out;

    auto load = [&]() -> std::optional<std::string> {
        try {
            return slurp(file);
        } catch (const std::exception& e) {
            result = kpa::error_result(app.get_subcommands().front()->get_name(), e);
            return std::nullopt;
        }
    };
    auto bound = [&]() -> std::optional<kpa::DegreeVector> {
        if (bound_text.empty()) return std::nullopt;
        return kpa::parse_degree(bound_text);
    };
    auto ring = [&]() { return kpa::parse_ring(ring_text); };

    try {
        if (*validate) {
            if (auto s = load()) result = kpa::run_validate(*s);
        } else if (*analyze) {
            if (auto s = load()) result = kpa::run_analyze(*s, bound());
        } else if (*classify) {
            if (auto s = load()) result = kpa::run_classify(*s, ring(), bound());
        } else if (*eval) {
            if (auto s = load()) result = kpa::run_eval(*s, ring(), expression);
        } else if (*generate) {
            result = kpa::run_generate(gen, spec_out);
            if (result.exit_code == 0) {
                if (output.empty()) {
                    std::cout << spec_out;
                    return 0;
                }
                std::ofstream out(output);
                if (!out) throw kpa::Error("cannot write " + output);
                out << spec_out;
            }
        } else if (*corpus) {
            if (corpus_name == "list") {
                for (const auto& n : kpa::corpus::all()) std::cout << n.name << '\n';
                return 0;
            }
            for (const auto& n : kpa::corpus::all())
                if (n.name == corpus_name) {
                    std::cout << kpa::write_graph_spec(n.graph);
                    return 0;
                }
            throw kpa::Error("no example named '" + corpus_name + "'");
        }
    } catch (const std::exception& e) {
        result = kpa::error_result(app.get_subcommands().front()->get_name(), e);
    }

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << result.report.render(fmt, fmt == kpa::Format::Text ? std::optional<double>(ms) : std::nullopt);
    return result.exit_code;
}
