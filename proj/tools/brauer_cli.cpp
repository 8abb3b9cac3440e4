// brauer: command line front end.
//
// Exit codes: 0 success, 1 parse or validation error, 2 single-edge or
// unknown edge, 3 nonzero genus, 4 any other failure (search budget,
// infeasible target, size limits).  Diagnostics go to stderr as JSON.

#include "brauer/io.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace brauer;

namespace {

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::fixed_point_in_alpha:
    case ErrorCode::odd_dart_count:
    case ErrorCode::disconnected:
    case ErrorCode::not_an_involution:
    case ErrorCode::not_a_permutation:
    case ErrorCode::bad_multiplicity:
    case ErrorCode::inconsistent_partition:
    case ErrorCode::parse_error: return 1;
    case ErrorCode::unknown_edge:
    case ErrorCode::single_edge_complex: return 2;
    case ErrorCode::nonzero_genus: return 3;
    default: return 4;
    }
}

void report(const Error& e) {
    Json issues = Json::array();
    for (const auto& i : e.issues()) issues.push_back({{"code", std::string(to_string(i.code))}, {"message", i.message}});
    std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"issues", issues}}.dump() << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::parse_error, "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer complexes of symmetric special biserial algebras"};
    app.require_subcommand(1);

    std::string file, file2, out_path, csv_path;
    Dart edge = -1;
    bool witness = false;
    std::size_t budget = 100000;
    int edges = 3, mult = 1;

    auto* inv = app.add_subcommand("invariants", "invariant signature as JSON");
    inv->add_option("file", file)->required();
    auto* tr = app.add_subcommand("transform", "apply the tilting move at an edge");
    tr->add_option("file", file)->required();
    tr->add_option("--edge", edge, "edge id (smaller dart of the edge)")->required();
    tr->add_option("--out", out_path, "write the result here instead of stdout");
    auto* eq = app.add_subcommand("equiv", "decide derived equivalence (genus 0)");
    eq->add_option("file1", file)->required();
    eq->add_option("file2", file2)->required();
    eq->add_flag("--witness", witness, "include move logs to the common canonical form");
    auto* orb = app.add_subcommand("orbit", "explore the move orbit");
    orb->add_option("file", file)->required();
    orb->add_option("--budget", budget, "maximum number of isomorphism classes");
    auto* cen = app.add_subcommand("census", "group all complexes by signature and count orbits");
    cen->add_option("--edges", edges)->required();
    cen->add_option("--mult", mult)->required();
    cen->add_option("--csv", csv_path, "also write the table as CSV");
    auto* ctr = app.add_subcommand("center", "center basis with the computed dimension");
    ctr->add_option("file", file)->required();
    auto* qv = app.add_subcommand("quiver", "extended quiver as JSON");
    qv->add_option("file", file)->required();
    auto* dot = app.add_subcommand("export-dot", "1-skeleton in DOT");
    dot->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*inv) {
            std::cout << dump(to_json(signature(load_complex(file))));
        } else if (*tr) {
            const auto b = load_complex(file);
            const auto text = dump(to_json(apply_move(b, edge)));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                write_text(out_path, text);
            }
        } else if (*eq) {
            const auto v = decide_equivalent(load_complex(file), load_complex(file2), witness);
            std::cout << dump(to_json(v));
        } else if (*orb) {
            std::cout << dump(to_json(explore(load_complex(file), budget)));
        } else if (*cen) {
            if (edges < 1 || mult < 1) throw Error(ErrorCode::parse_error, "--edges and --mult must be positive");
            const auto c = census(edges, mult);
            if (!csv_path.empty()) write_text(csv_path, census_csv(c));
            std::cout << dump(to_json(c));
        } else if (*ctr) {
            const auto b = load_complex(file);
            const AlgebraTable table(b);
            auto j = to_json(center_formula(table.quiver()));
            j["oracle_dim"] = center_oracle(table).size();
            std::cout << dump(j);
        } else if (*qv) {
            std::cout << dump(to_json(derive_quiver(load_complex(file))));
        } else if (*dot) {
            std::cout << to_dot(load_complex(file));
        }
    } catch (const Error& e) {
        report(e);
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"issues", {{{"code", "internal"}, {"message", e.what()}}}}}.dump()
                  << "\n";
        return 4;
    }
    return 0;
}
