// locol: locating-chromatic numbers of graphs and corona products.
//
// stdout carries the primary artifact, stderr diagnostics. Exit codes:
//   0 resolved / valid, 1 not locating, 2 budget exhausted,
//   64 usage, 65 malformed input data, 70 internal error, 74 I/O.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "locol/bounds.hpp"
#include "locol/coloring.hpp"
#include "locol/constructions.hpp"
#include "locol/corona.hpp"
#include "locol/error.hpp"
#include "locol/graph.hpp"
#include "locol/graph_io.hpp"
#include "locol/json_io.hpp"
#include "locol/solver.hpp"

namespace {

using namespace locol;

enum ExitCode : int {
    kOk = 0,
    kInvalid = 1,
    kIndeterminate = 2,
    kUsage = 64,
    kDataError = 65,
    kInternal = 70,
    kIoError = 74,
};

enum class Format { kHuman, kJson };

struct CommandConfig {
    Format format = Format::kHuman;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    std::string output;  // empty: stdout
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const CommandConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        write_text_file(cfg.output, text);
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

Graph random_connected_graph(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("random graph needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Graph generate_family(const std::string& family, const std::vector<int>& params, std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw UsageError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
        }
    };
    try {
        if (family == "path") return need(1), path_graph(params[0]);
        if (family == "cycle") return need(1), cycle_graph(params[0]);
        if (family == "star") return need(1), star_graph(params[0]);
        if (family == "complete") return need(1), complete_graph(params[0]);
        if (family == "empty") return need(1), empty_graph(params[0]);
        if (family == "double-star" || family == "double_star") return need(2), double_star_graph(params[0], params[1]);
        if (family == "random") return need(1), random_connected_graph(params[0], seed);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + family + "'");
}

int run_gen(const CommandConfig& cfg, const std::string& family, const std::vector<int>& params) {
    const Graph g = generate_family(family, params, cfg.seed);
    if (cfg.format == Format::kJson) {
        emit(cfg, dump(Json{{"graph", serialize_graph(g)}}));
    } else {
        emit(cfg, serialize_graph(g));
    }
    return kOk;
}

int run_corona(const CommandConfig& cfg, const std::string& gfile, const std::string& hfile,
               const std::string& map_out) {
    const Graph g = read_graph_file(gfile);
    const Graph h = read_graph_file(hfile);
    const Corona product = corona(g, h);
    const Json map = to_json(product.map);
    if (!map_out.empty()) write_text_file(map_out, dump(map));
    if (cfg.format == Format::kJson) {
        emit(cfg, dump(Json{{"graph", serialize_graph(product.graph)}, {"corona_map", map}}));
    } else {
        emit(cfg, serialize_graph(product.graph));
    }
    return kOk;
}

void require_connected(const Graph& g, const std::string& path) {
    if (g.order() < 2) throw DomainError(path + ": need at least two vertices");
    if (!is_connected(g)) throw DomainError(path + ": graph is disconnected; locating colorings need a connected graph");
}

int run_chil(const CommandConfig& cfg, const std::string& gfile) {
    const Graph g = read_graph_file(gfile);
    require_connected(g, gfile);
    const ChiResult r = chi_L(g, cfg.budget);
    if (cfg.format == Format::kJson) {
        emit(cfg, dump(to_json(r)));
    } else if (r.resolved) {
        emit(cfg, "chi_L = " + std::to_string(r.value) + "\ncertificate: " + join_ints(r.certificate->colors()) +
                      "\nnodes: " + std::to_string(r.nodes) + "\n");
    } else {
        emit(cfg, "budget exhausted: chi_L in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) +
                      "]\nnodes: " + std::to_string(r.nodes) + "\n");
    }
    return r.resolved ? kOk : kIndeterminate;
}

int run_verify(const CommandConfig& cfg, const std::string& gfile, const std::string& cfile) {
    const Graph g = read_graph_file(gfile);
    require_connected(g, gfile);
    const Coloring c = parse_coloring(read_text_file(cfile));
    const VerificationReport report = verify(g, c);
    if (cfg.format == Format::kJson) {
        emit(cfg, dump(to_json(report)));
    } else {
        std::string text = std::string("proper: ") + (report.proper ? "yes" : "no") +
                           "\nlocating: " + (report.locating ? "yes" : "no") + "\n";
        if (report.witness) {
            if (const auto* e = std::get_if<MonochromaticEdge>(&*report.witness)) {
                text += "witness: edge " + std::to_string(e->u) + "-" + std::to_string(e->v) + " has color " +
                        std::to_string(e->color) + " at both ends\n";
            } else {
                const auto& col = std::get<CodeCollision>(*report.witness);
                text += "witness: vertices " + std::to_string(col.u) + " and " + std::to_string(col.v) +
                        " share code (" + join_ints(col.code) + ")\n";
            }
        }
        emit(cfg, text);
    }
    return report.locating ? kOk : kInvalid;
}

int run_bounds(const CommandConfig& cfg, const std::string& gfile, const std::string& hfile) {
    const Graph g = read_graph_file(gfile);
    require_connected(g, gfile);
    const Graph h = read_graph_file(hfile);
    const BoundsReport report = auto_corona_bounds(g, h, cfg.budget);
    if (cfg.format == Format::kJson) {
        emit(cfg, dump(to_json(report)));
    } else {
        std::string text = "lower: " + std::to_string(report.lower.value) + " (" +
                           std::string(to_string(report.lower.tag)) + ")\nupper: " +
                           std::to_string(report.upper.value) + " (" + std::string(to_string(report.upper.tag)) +
                           ")\n";
        for (const auto& e : report.evidence) {
            text += "  " + std::string(e.side == BoundSide::kLower ? "lower " : "upper ") +
                    std::string(to_string(e.bound.tag)) + " = " + std::to_string(e.bound.value) + "\n";
        }
        if (report.indeterminate) text += "indeterminate: a sub-solve ran out of budget\n";
        emit(cfg, text);
    }
    return report.indeterminate ? kIndeterminate : kOk;
}

int run_fixture(const CommandConfig& cfg, const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("fixture needs a name: theorem2 | star N | empty-corona N K");
    auto int_arg = [&](std::size_t i) {
        try {
            return std::stoi(args.at(i));
        } catch (const std::exception&) {
            throw UsageError("fixture '" + args[0] + "' expects integer parameters");
        }
    };
    auto wrong_arity = [&](std::size_t n) {
        if (args.size() != n) throw UsageError("wrong number of parameters for fixture '" + args[0] + "'");
    };

    Json bundle;
    std::string human;
    if (args[0] == "theorem2") {
        wrong_arity(1);
        const auto fx = p3_corona_p2_c4_fixture();
        const auto codes = color_codes(fx.product.graph, fx.result.coloring);
        bundle = to_json(fx.result);
        bundle["graph"] = serialize_graph(fx.product.graph);
        bundle["corona_map"] = to_json(fx.product.map);
        bundle["names"] = fx.names;
        bundle["codes"] = to_json(codes);
        bool matches = true;
        for (Vertex v = 0; v < codes.order(); ++v) {
            auto row = codes.code(v);
            matches = matches && std::vector<int>(row.begin(), row.end()) == fx.expected_codes[v];
            human += fx.names[v] + " color " + std::to_string(fx.result.coloring[v]) + " code (" +
                     join_ints(std::vector<int>(row.begin(), row.end())) + ")\n";
        }
        bundle["matches_table"] = matches;
        human += std::string("verified: yes\ncode table matches: ") + (matches ? "yes" : "no") + "\n";
    } else if (args[0] == "star") {
        wrong_arity(2);
        const int n = int_arg(1);
        if (n < 4) throw UsageError("fixture star needs n >= 4");
        const auto result = star_corona_coloring(n);
        bundle = to_json(result);
        bundle["n"] = n;
        bundle["graph"] = serialize_graph(corona(star_graph(n), empty_graph(1)).graph);
        human = "S_" + std::to_string(n) + " corona K1: " + std::to_string(result.colors_used) +
                " colors, verified\ncolors: " + join_ints(result.coloring.colors()) + "\n";
    } else if (args[0] == "empty-corona") {
        wrong_arity(3);
        const int n = int_arg(1);
        const int k = int_arg(2);
        if (n < 2 || k < 2 || n > k + 1) throw UsageError("fixture empty-corona needs k >= 2 and 2 <= n <= k + 1");
        const Graph g = path_graph(n);
        const auto result = empty_corona_coloring(g, k);
        const Graph product = corona(g, empty_graph(k)).graph;
        bundle = to_json(result);
        bundle["n"] = n;
        bundle["m"] = k;
        bundle["graph"] = serialize_graph(product);
        bundle["lower_bound"] = locating_lower_bound(product).value;
        human = "P_" + std::to_string(n) + " corona empty_" + std::to_string(k) + ": " +
                std::to_string(result.colors_used) + " colors, verified; lower bound " +
                std::to_string(locating_lower_bound(product).value) + "\ncolors: " +
                join_ints(result.coloring.colors()) + "\n";
    } else {
        throw UsageError("unknown fixture '" + args[0] + "'");
    }
    emit(cfg, cfg.format == Format::kJson ? dump(bundle) : human);
    return kOk;
}

int run_classify_pendant(const CommandConfig& cfg, const std::string& tfile, const std::string& g3file) {
    const Graph t = read_graph_file(tfile);
    const Graph g3 = read_graph_file(g3file);
    const auto r = pendant_tree_classifier(t, g3, cfg.budget);
    const char* check = r.cross_check == CrossCheck::kAgrees      ? "agrees"
                        : r.cross_check == CrossCheck::kDisagrees ? "disagrees"
                                                                  : "not-checked";
    if (cfg.format == Format::kJson) {
        Json j{{"value", r.value}, {"in_path6", r.in_path6}, {"in_g3", r.in_g3}, {"cross_check", check}};
        j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
        emit(cfg, dump(j));
    } else {
        emit(cfg, "chi_L(T corona K1) = " + std::to_string(r.value) + "\ncross-check: " + check + "\n");
    }
    return r.cross_check == CrossCheck::kDisagrees ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locating-chromatic numbers of graphs and corona products"};
    app.require_subcommand(1);

    CommandConfig cfg;
    std::string format = "human";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--budget", cfg.budget, "Search-node budget for exact solves")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for random graph generation");
    app.add_option("-o,--output", cfg.output, "Write the primary artifact here instead of stdout");

    std::string family;
    std::vector<int> params;
    auto* gen = app.add_subcommand("gen", "Generate a graph: path|cycle|star|complete|empty N, double-star A B, random N");
    gen->add_option("family", family)->required();
    gen->add_option("params", params)->required();

    std::string gfile;
    std::string hfile;
    std::string map_out;
    auto* cor = app.add_subcommand("corona", "Build G corona H");
    cor->add_option("G", gfile)->required();
    cor->add_option("H", hfile)->required();
    cor->add_option("--map-out", map_out, "Write the corona map JSON here");

    auto* chil = app.add_subcommand("chil", "Exact locating-chromatic number with certificate");
    chil->add_option("G", gfile)->required();

    std::string cfile;
    auto* ver = app.add_subcommand("verify", "Check whether a coloring is locating");
    ver->add_option("G", gfile)->required();
    ver->add_option("COLORING", cfile)->required();

    auto* bnd = app.add_subcommand("bounds", "Bounds on chi_L(G corona H)");
    bnd->add_option("G", gfile)->required();
    bnd->add_option("H", hfile)->required();

    std::vector<std::string> fixture_args;
    auto* fix = app.add_subcommand("fixture", "Certified constructions: theorem2 | star N | empty-corona N K");
    fix->add_option("name", fixture_args)->required();

    auto* pend = app.add_subcommand("classify-pendant", "chi_L(T corona K1) for a tree T with chi_L(T) = 3");
    pend->add_option("T", gfile)->required();
    pend->add_option("G3", hfile)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    cfg.format = format == "json" ? Format::kJson : Format::kHuman;

    try {
        if (*gen) return run_gen(cfg, family, params);
        if (*cor) return run_corona(cfg, gfile, hfile, map_out);
        if (*chil) return run_chil(cfg, gfile);
        if (*ver) return run_verify(cfg, gfile, cfile);
        if (*bnd) return run_bounds(cfg, gfile, hfile);
        if (*fix) return run_fixture(cfg, fixture_args);
        if (*pend) return run_classify_pendant(cfg, gfile, hfile);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::system_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kDataError;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDataError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kDataError;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return kDataError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
