// symgraph: batch front-end over graph files.
//
// One command per invocation; the report goes to stdout as a single JSON
// line (or as aligned text with --format text), diagnostics go to stderr.
// Exit codes: 0 success, 1 domain error, 2 usage error. Reports are
// byte-identical across repeated runs on the same input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/homology.hpp"
#include "symgraph/json_io.hpp"
#include "symgraph/stability.hpp"
#include "symgraph/sym_product.hpp"

namespace {

using nlohmann::json;
using namespace symgraph;

struct RunConfig {
    std::string input;
    int n = 0;
    std::string set_arg;        // comma list, 1-based members of [n+1]
    std::vector<std::string> weight_args;  // vertex=int pairs
    std::string format = "json";
    bool dump_cells = false;
    std::uint64_t max_cells = kDefaultMaxCells;
    unsigned threads = 0;  // 0 = all cores
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IndexSet parse_set(const RunConfig& cfg) {
    if (cfg.set_arg.empty()) throw UsageError("--set is required for this command");
    std::vector<int> members;
    std::stringstream ss(cfg.set_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            members.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--set: '" + item + "' is not an integer");
        }
    }
    try {
        return IndexSet(cfg.n, std::move(members));
    } catch (const error& e) {
        throw UsageError(std::string("--set: ") + e.what());
    }
}

VertexWeights parse_weights(const RunConfig& cfg) {
    if (cfg.weight_args.empty()) throw UsageError("--weights is required for this command");
    VertexWeights w;
    for (const auto& arg : cfg.weight_args) {
        std::stringstream ss(arg);
        std::string pair;
        while (std::getline(ss, pair, ',')) {
            auto eq = pair.find('=');
            if (eq == std::string::npos)
                throw UsageError("--weights: expected vertex=int, got '" + pair + "'");
            try {
                size_t pos = 0;
                long long v = std::stoll(pair.substr(eq + 1), &pos);
                if (pos != pair.size() - eq - 1) throw std::invalid_argument(pair);
                w[pair.substr(0, eq)] = v;
            } catch (const std::exception&) {
                throw UsageError("--weights: bad integer in '" + pair + "'");
            }
        }
    }
    return w;
}

// ---- text rendering ------------------------------------------------------

std::string join_row(const json& arr) {
    std::string out;
    for (const auto& x : arr) {
        if (!out.empty()) out += ' ';
        out += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return out;
}

void render_text(const json& report, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (report.is_object()) {
        std::size_t width = 0;
        for (auto it = report.begin(); it != report.end(); ++it)
            width = std::max(width, it.key().size());
        for (auto it = report.begin(); it != report.end(); ++it) {
            const json& v = it.value();
            if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() ||
                                                                 v.front().is_array()))) {
                os << pad << it.key() << ":\n";
                render_text(v, os, indent + 2);
            } else if (v.is_array()) {
                os << pad << it.key() << std::string(width - it.key().size(), ' ') << " : "
                   << join_row(v) << '\n';
            } else {
                os << pad << it.key() << std::string(width - it.key().size(), ' ') << " : "
                   << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
    } else if (report.is_array()) {
        for (std::size_t i = 0; i < report.size(); ++i) {
            const json& v = report[i];
            if (v.is_object() || v.is_array()) {
                os << pad << "- [" << i << "]\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << "- " << v.dump() << '\n';
            }
        }
    } else {
        os << pad << report.dump() << '\n';
    }
}

void emit(const RunConfig& cfg, const json& report) {
    if (cfg.format == "text")
        render_text(report, std::cout);
    else
        std::cout << report.dump() << '\n';
}

// ---- reports -------------------------------------------------------------

json complex_report(const RunConfig& cfg, const DeltaComplex& dc) {
    json rep;
    rep["f_vector"] = f_vector(dc);
    rep["euler"] = euler_characteristic(dc);
    HomologyResult h = homology(dc, cfg.threads);
    rep["betti"] = h.betti;
    rep["torsion"] = torsion_to_json(h.torsion);
    rep["simplicial"] = is_simplicial(dc);
    if (cfg.dump_cells) rep["complex"] = complex_to_json(dc);
    return rep;
}

int run_check(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    json rep;
    rep["bipartite"] = is_bipartitely_oriented(g);
    rep["directed_cycle"] = has_directed_cycle(g);
    rep["tree"] = is_tree(g);
    emit(cfg, rep);
    return 0;
}

int run_expand(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    ExpandedGraph ex = expand(g, parse_set(cfg));
    if (cfg.format == "text") {
        std::cout << ex.to_graph().to_text();
        return 0;
    }
    json blacks = json::array(), whites = json::array(), arrows = json::array();
    for (int v = 0; v < ex.black_count(); ++v) blacks.push_back(ex.node_name(ex.black_node(v)));
    for (int node = ex.black_count(); node < ex.node_count(); ++node)
        whites.push_back(ex.node_name(node));
    for (const auto& arc : ex.arcs())
        arrows.push_back(json{{"label", ex.arc_label(arc)},
                              {"stage", arc.stage},
                              {"from", ex.node_name(arc.from)},
                              {"to", ex.node_name(arc.to)}});
    emit(cfg, json{{"black_nodes", blacks}, {"white_nodes", whites}, {"arrows", arrows}});
    return 0;
}

int run_strata(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    IndexSet I = parse_set(cfg);
    auto strata = enumerate_strata(g, I);
    json list = json::array();
    for (const auto& idx : strata) list.push_back(stratum_to_json(g, idx));
    emit(cfg, json{{"set", I.members}, {"count", strata.size()}, {"strata", list}});
    return 0;
}

int run_tuples(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    IndexSet I = parse_set(cfg);
    ExpandedGraph ex = expand(g, I);
    auto tuples = enumerate_tuples(g, I, cfg.max_cells);
    json list = json::array();
    for (const auto& z : tuples) list.push_back(tuple_to_json(ex, z));
    emit(cfg, json{{"set", I.members}, {"count", tuples.size()}, {"tuples", list}});
    return 0;
}

int run_facets(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    IndexSet J = parse_set(cfg);
    if (J.size() < 2) throw UsageError("--set: facets need |J| >= 2");
    ExpandedGraph exJ = expand(g, J);

    json strata_out = json::array();
    for (const auto& idx : enumerate_strata(g, J)) {
        json facets = json::array();
        for (int k = 1; k <= J.size(); ++k) {
            auto [I, out] = stratum_facet(g, J, idx, k);
            facets.push_back(
                json{{"k", k}, {"set", I.members}, {"index", stratum_to_json(g, out)}});
        }
        strata_out.push_back(json{{"index", stratum_to_json(g, idx)}, {"facets", facets}});
    }
    json tuples_out = json::array();
    for (const auto& z : enumerate_tuples(g, J, cfg.max_cells)) {
        json facets = json::array();
        for (int k = 1; k <= J.size(); ++k) {
            TupleIndex zk = tuple_facet(g, J, z, k);
            ExpandedGraph exI = expand(g, J.drop(k));
            facets.push_back(
                json{{"k", k}, {"set", J.drop(k).members}, {"tuple", tuple_to_json(exI, zk)}});
        }
        tuples_out.push_back(json{{"tuple", tuple_to_json(exJ, z)}, {"facets", facets}});
    }
    emit(cfg, json{{"set", J.members}, {"strata", strata_out}, {"tuples", tuples_out}});
    return 0;
}

int run_sym(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    SymComplex sc = sym_complex(g, cfg.n, cfg.max_cells);
    emit(cfg, complex_report(cfg, sc.complex));
    return 0;
}

int run_product(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    ProductComplex pc = product_complex(g, cfg.n, cfg.max_cells);
    emit(cfg, complex_report(cfg, pc.complex));
    return 0;
}

int run_compare(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    SymComplex direct = sym_complex(g, cfg.n, cfg.max_cells);
    SymQuotient quot = quotient_sym(g, cfg.n, cfg.max_cells);

    bool match = true;
    // bijection on cells via the canonical labels, then face commutation
    if (f_vector(direct.complex) != f_vector(quot.complex)) match = false;
    for (int dim = 0; match && dim <= direct.complex.top_dimension(); ++dim) {
        for (std::size_t c = 0; match && c < direct.complex.size(dim); ++c) {
            auto ref = quot.complex.find(direct.complex.key(dim, c));
            if (!ref || ref->first != dim) {
                match = false;
                break;
            }
            if (dim > 0)
                for (int i = 0; i <= dim; ++i)
                    if (quot.complex.key(dim - 1, quot.complex.face(dim, ref->second, i)) !=
                        direct.complex.key(dim - 1, direct.complex.face(dim, c, i))) {
                        match = false;
                        break;
                    }
        }
    }
    json rep;
    rep["match"] = match;
    if (match) {
        rep["f_vector"] = f_vector(direct.complex);
    } else {
        rep["f_vector_sym"] = f_vector(direct.complex);
        rep["f_vector_quotient"] = f_vector(quot.complex);
    }
    emit(cfg, rep);
    return match ? 0 : 1;
}

int run_skeleton(const RunConfig& cfg) {
    OrientedGraph g = parse_graph(read_file(cfg.input));
    VertexWeights w = parse_weights(cfg);
    SkeletonResult sk = skeleton_complex(g, w, cfg.n, cfg.max_cells);
    json rep = complex_report(cfg, sk.skeleton.complex);
    rep["min_weight"] = sk.min_weight;
    rep["span"] = sk.span.vertices();
    rep["induced_weights"] = sk.induced_weights;
    emit(cfg, rep);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symgraph: expanded dual graphs, stable strata and symmetric products"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format (json|text)")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", cfg.threads, "Worker threads (default: all cores)");
    app.add_option("--max-cells", cfg.max_cells,
                   "Budget for complex builders and tuple scans (predicted cells)");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", cfg.input, "Graph file")->required();
    };
    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("-n", cfg.n, "Number of points (n >= 0)")->required();
    };

    CLI::App* check = app.add_subcommand("check", "Orientation, cycle and tree analysis");
    add_input(check);

    CLI::App* expand_cmd = app.add_subcommand("expand", "Expanded graph for an index set");
    add_input(expand_cmd);
    expand_cmd->add_option("-n", cfg.n, "Number of points")->required();
    expand_cmd->add_option("--set", cfg.set_arg, "Index set, comma list inside [n+1]")->required();

    CLI::App* strata = app.add_subcommand("strata", "Stable stratum indices");
    add_input(strata);
    add_n(strata);
    strata->add_option("--set", cfg.set_arg, "Index set")->required();

    CLI::App* tuples = app.add_subcommand("tuples", "Stable tuples");
    add_input(tuples);
    add_n(tuples);
    tuples->add_option("--set", cfg.set_arg, "Index set")->required();

    CLI::App* facets = app.add_subcommand("facets", "All stratum and tuple facets");
    add_input(facets);
    add_n(facets);
    facets->add_option("--set", cfg.set_arg, "Index set J")->required();

    CLI::App* sym = app.add_subcommand("sym", "Symmetric product complex report");
    add_input(sym);
    add_n(sym);
    sym->add_flag("--cells", cfg.dump_cells, "Include the full cell dump");

    CLI::App* product = app.add_subcommand("product", "Product complex report");
    add_input(product);
    add_n(product);
    product->add_flag("--cells", cfg.dump_cells, "Include the full cell dump");

    CLI::App* compare = app.add_subcommand("compare", "Quotient vs direct construction");
    add_input(compare);
    add_n(compare);

    CLI::App* skeleton = app.add_subcommand("skeleton", "Weight-minimal subcomplex report");
    add_input(skeleton);
    add_n(skeleton);
    skeleton->add_option("--weights", cfg.weight_args, "vertex=int pairs (comma separable)")
        ->required();
    skeleton->add_flag("--cells", cfg.dump_cells, "Include the full cell dump");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << e.what() << '\n';
        std::cout << nlohmann::json{{"error", std::string(e.what())}}.dump() << '\n';
        return 2;
    }

    try {
        if (cfg.n < 0) throw UsageError("-n must be nonnegative");
        if (check->parsed()) return run_check(cfg);
        if (expand_cmd->parsed()) return run_expand(cfg);
        if (strata->parsed()) return run_strata(cfg);
        if (tuples->parsed()) return run_tuples(cfg);
        if (facets->parsed()) return run_facets(cfg);
        if (sym->parsed()) return run_sym(cfg);
        if (product->parsed()) return run_product(cfg);
        if (compare->parsed()) return run_compare(cfg);
        if (skeleton->parsed()) return run_skeleton(cfg);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        std::cout << nlohmann::json{{"error", std::string(e.what())}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cout << nlohmann::json{{"error", std::string(e.what())}}.dump() << '\n';
        return 1;
    }
}
