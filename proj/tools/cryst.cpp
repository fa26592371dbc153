#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cryst/anneal.hpp"
#include "cryst/catalog.hpp"
#include "cryst/census.hpp"
#include "cryst/complex.hpp"
#include "cryst/invariants.hpp"
#include "cryst/io.hpp"
#include "cryst/surgery.hpp"

using namespace cryst;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path) {
        write_file(*out_path, content);
    } else {
        std::cout << content;
    }
}

bool looks_like_pst(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text.compare(pos, 3, "pst") == 0;
}

ColoredGraph load_catalog(const std::string& name, const std::optional<std::string>& data_path) {
    std::optional<ColoredGraph> data;
    if (data_path) data = parse_gem(slurp(*data_path));
    return catalog(name, data);
}

std::vector<SumTerm> parse_sum_spec(const std::string& spec) {
    std::vector<SumTerm> terms;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        SumTerm t;
        auto x = item.find('x');
        if (x == std::string::npos) fail(errc::parse_error, "sum term needs <count>x<name>");
        try {
            t.count = std::stoi(item.substr(0, x));
        } catch (...) {
            fail(errc::parse_error, "bad count in sum term " + item);
        }
        t.name = item.substr(x + 1);
        if (t.name.size() > 3 && t.name.substr(t.name.size() - 3) == "bar") {
            t.reversed = true;
            t.name = t.name.substr(0, t.name.size() - 3);
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

void print_graph_report(const ColoredGraph& g) {
    std::cout << "colors: " << g.num_colors() << "\n";
    std::cout << "n: " << g.order() << "\n";
    std::cout << "connected: " << (is_connected(g) ? "true" : "false") << "\n";
    std::cout << "bipartite: " << (is_bipartite(g) ? "true" : "false") << "\n";
    std::cout << "contracted: " << (is_contracted(g) ? "true" : "false") << "\n";
    if (g.dim() == 4 && is_contracted(g)) {
        for (int i = 0; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                std::cout << "g" << i << j << ": " << g_count(g, ColorSet::of({i, j})) << "\n";
        auto cert = check_4manifold_crystallization(g);
        std::cout << "crystallization: " << (cert.is_crystallization() ? "true" : "false")
                  << "\n";
        std::cout << "residues: ";
        for (int c = 0; c <= 4; ++c)
            std::cout << (c ? " " : "")
                      << (cert.residue_criteria[c] ? to_string(cert.residue_cert[c].status)
                                                   : "NotCrystallization");
        std::cout << "\n";
        if (cert.all_residues_pass_criteria() && cert.weakest() != SphereStatus::not_sphere) {
            InvariantReport rep = simple_report(g);
            std::cout << "simple: " << (rep.simple_degrees[1] ? "true" : "false") << "\n";
            if (rep.m) std::cout << "m: " << *rep.m << "\n";
            if (rep.beta2) std::cout << "beta2: " << *rep.beta2 << "\n";
            if (rep.euler) std::cout << "chi: " << *rep.euler << "\n";
            if (rep.f_vector) {
                const auto& f = *rep.f_vector;
                std::cout << "f: (" << f[0] << "," << f[1] << "," << f[2] << "," << f[3] << ","
                          << f[4] << ")\n";
            }
        }
    } else if (g.dim() == 3) {
        bool crys = is_contracted(g) && crystallization3_criteria(g);
        std::cout << "crystallization: " << (crys ? "true" : "false") << "\n";
        if (crys) {
            auto cert = check_sphere3(g);
            std::cout << "sphere: " << to_string(cert.status) << "\n";
            if (cert.status == SphereStatus::not_sphere)
                std::cout << "H1: " << cert.witness.to_string() << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystallizations of 4-manifolds: validation, invariants, surgery,\n"
                 "simplification and census"};
    app.require_subcommand(1);

    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check a gem or pst file");
    cmd_validate->add_option("file", validate_file, "input file")->required();

    std::string report_file;
    auto* cmd_report = app.add_subcommand("report", "invariants of a colored graph");
    cmd_report->add_option("file", report_file, "gem file")->required();

    std::string pi1_file, pi1_drop = "0,1";
    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    cmd_pi1->add_option("file", pi1_file, "gem file")->required();
    cmd_pi1->add_option("--drop", pi1_drop, "color pair i,j to drop (default 0,1)");

    std::string sum_a, sum_b, sum_perm = "01234";
    int sum_v1 = -1, sum_v2 = -1;
    bool sum_reverse = false;
    std::optional<std::string> sum_out;
    auto* cmd_sum = app.add_subcommand("sum", "connected sum of two graphs");
    cmd_sum->add_option("fileA", sum_a)->required();
    cmd_sum->add_option("fileB", sum_b)->required();
    cmd_sum->add_option("--v1", sum_v1, "vertex removed from A (default by class)");
    cmd_sum->add_option("--v2", sum_v2, "vertex removed from B (default by class)");
    cmd_sum->add_option("--perm", sum_perm, "color permutation applied to A");
    cmd_sum->add_flag("--reverse", sum_reverse, "sum with reversed orientation");
    cmd_sum->add_option("-o,--output", sum_out, "output gem file");

    std::string iter_spec;
    std::optional<std::string> iter_out, iter_data;
    auto* cmd_iter = app.add_subcommand("iterated-sum", "catalog sums, e.g. 3xcp2,20xcp2bar");
    cmd_iter->add_option("spec", iter_spec)->required();
    cmd_iter->add_option("--data", iter_data, "gem file with the full k3 data");
    cmd_iter->add_option("-o,--output", iter_out, "output gem file");

    std::string realize_in;
    std::optional<std::string> realize_out;
    auto* cmd_realize = app.add_subcommand("realize", "facet-gluing complex of a graph");
    cmd_realize->add_option("gem", realize_in)->required();
    cmd_realize->add_option("-o,--output", realize_out, "output pst file");

    std::string dualize_in;
    std::optional<std::string> dualize_out;
    auto* cmd_dualize = app.add_subcommand("dualize", "colored dual graph of a complex");
    cmd_dualize->add_option("pst", dualize_in)->required();
    cmd_dualize->add_option("-o,--output", dualize_out, "output gem file");

    std::string simplify_in, simplify_weights, simplify_target = "simple";
    std::optional<std::string> simplify_out, simplify_log;
    std::uint64_t simplify_seed = 0;
    long simplify_steps = 10000, simplify_patience = 100;
    auto* cmd_simplify = app.add_subcommand("simplify", "randomized move simplification");
    cmd_simplify->add_option("pst", simplify_in)->required();
    cmd_simplify->add_option("--seed", simplify_seed, "random seed");
    cmd_simplify->add_option("--max-steps", simplify_steps, "step budget");
    cmd_simplify->add_option("--weights", simplify_weights, "six weights w0,w1,w2,w3,w4,wc");
    cmd_simplify->add_option("--plateau", simplify_patience, "plateau patience");
    cmd_simplify->add_option("--target", simplify_target, "simple | facets:<k>");
    cmd_simplify->add_option("-o,--output", simplify_out, "output pst file");
    cmd_simplify->add_option("--log", simplify_log, "move log file");

    int census_dim = 3, census_vertices = 0;
    bool census_simple = false, census_override = false;
    std::string census_out;
    auto* cmd_census = app.add_subcommand("census", "enumerate crystallizations");
    cmd_census->add_option("--dim", census_dim, "3 or 4")->required();
    cmd_census->add_option("--vertices", census_vertices, "vertex count")->required();
    cmd_census->add_flag("--simple", census_simple, "simple 4-manifold census");
    cmd_census->add_flag("--override-guard", census_override, "lift the size guard");
    cmd_census->add_option("-o,--output", census_out, "output directory")->required();

    std::string catalog_name;
    std::optional<std::string> catalog_out, catalog_data;
    auto* cmd_catalog = app.add_subcommand("catalog", "built-in crystallizations");
    cmd_catalog->add_option("name", catalog_name, "s4 | cp2 | s2xs2 | k3")->required();
    cmd_catalog->add_option("--data", catalog_data, "gem file with the full k3 data");
    cmd_catalog->add_option("-o,--output", catalog_out, "output gem file");

    std::string dot_in;
    std::optional<std::string> dot_out;
    auto* cmd_dot = app.add_subcommand("export-dot", "graphviz export");
    cmd_dot->add_option("gem", dot_in)->required();
    cmd_dot->add_option("-o,--output", dot_out, "output dot file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_validate) {
            std::string text = slurp(validate_file);
            if (looks_like_pst(text)) {
                CellComplex c = parse_pst(text);
                ValidationReport rep = validate(c);
                std::cout << "tier: " << rep.tier_name() << "\n";
                if (rep.pseudotriangulation)
                    std::cout << "links: " << to_string(rep.link_status) << "\n";
                if (!rep.failure.empty()) std::cout << "failure: " << rep.failure << "\n";
                return rep.pseudotriangulation ? 0 : 1;
            }
            ColoredGraph g = parse_gem(text);
            std::cout << "valid gem, " << g.num_colors() << " colors, " << g.order()
                      << " vertices\n";
            return 0;
        }
        if (*cmd_report) {
            print_graph_report(parse_gem(slurp(report_file)));
            return 0;
        }
        if (*cmd_pi1) {
            ColoredGraph g = parse_gem(slurp(pi1_file));
            int i = -1, j = -1;
            if (std::sscanf(pi1_drop.c_str(), "%d,%d", &i, &j) != 2)
                fail(errc::parse_error, "--drop expects i,j");
            GroupPresentation p = pi1_presentation(g, i, j);
            std::cout << "presentation: " << to_string(p) << "\n";
            auto tz = tietze_simplify(p);
            std::cout << "simplified: " << to_string(tz.presentation) << "\n";
            std::cout << "H1: " << abelianize(p).to_string() << "\n";
            return 0;
        }
        if (*cmd_sum) {
            ColoredGraph a = parse_gem(slurp(sum_a));
            ColoredGraph b = parse_gem(slurp(sum_b));
            std::vector<int> sigma;
            for (char ch : sum_perm) sigma.push_back(ch - '0');
            int v1 = sum_v1, v2 = sum_v2;
            if (v1 < 0 || v2 < 0) {
                auto ca = is_bipartite(a), cb = is_bipartite(b);
                if (!ca || !cb)
                    fail(errc::validation_failed,
                         "default vertex choice needs bipartite graphs; pass --v1/--v2");
                if (v1 < 0)
                    v1 = static_cast<int>(std::find(ca->begin(), ca->end(), 0) - ca->begin());
                if (v2 < 0) {
                    int want = sum_reverse ? 0 : 1;
                    v2 = static_cast<int>(std::find(cb->begin(), cb->end(), want) - cb->begin());
                }
            }
            emit(sum_out, write_gem(connected_sum(a, v1, b, v2, sigma)));
            return 0;
        }
        if (*cmd_iter) {
            auto terms = parse_sum_spec(iter_spec);
            auto look = [&](const std::string& name) { return load_catalog(name, iter_data); };
            emit(iter_out, write_gem(iterated_sum(terms, look)));
            return 0;
        }
        if (*cmd_realize) {
            emit(realize_out, write_pst(realize(parse_gem(slurp(realize_in)))));
            return 0;
        }
        if (*cmd_dualize) {
            emit(dualize_out, write_gem(dual_graph_coloring(parse_pst(slurp(dualize_in)))));
            return 0;
        }
        if (*cmd_simplify) {
            CellComplex c = parse_pst(slurp(simplify_in));
            AnnealConfig cfg;
            cfg.seed = simplify_seed;
            cfg.max_steps = simplify_steps;
            cfg.plateau_patience = simplify_patience;
            if (!simplify_weights.empty()) {
                std::istringstream ws(simplify_weights);
                std::string tok;
                int k = 0;
                while (std::getline(ws, tok, ',') && k < 6) cfg.weights[k++] = std::stoul(tok);
                if (k != 6) fail(errc::invalid_config, "--weights expects six values");
            }
            if (simplify_target == "simple") {
                cfg.target = AnnealTarget{AnnealTarget::Kind::simple_contracted, 2};
            } else if (simplify_target.rfind("facets:", 0) == 0) {
                cfg.target = AnnealTarget{AnnealTarget::Kind::facet_count,
                                          std::stoi(simplify_target.substr(7))};
            } else {
                fail(errc::invalid_config, "--target expects simple or facets:<k>");
            }
            auto res = simplify(c, cfg);
            std::cout << "outcome: "
                      << (res.outcome == AnnealOutcome::target_reached ? "TargetReached"
                                                                       : "StepsExhausted")
                      << "\n";
            std::cout << "facets: " << res.complex.facet_count() << "\n";
            if (simplify_log) write_file(*simplify_log, res.log.to_string());
            emit(simplify_out, write_pst(res.complex));
            return res.outcome == AnnealOutcome::target_reached ? 0 : 1;
        }
        if (*cmd_census) {
            namespace fs = std::filesystem;
            fs::create_directories(census_out);
            CensusOptions opts;
            opts.override_size_guard = census_override;
            std::ostringstream summary;
            if (census_dim == 3 && !census_simple) {
                auto entries = census_3manifold(census_vertices, opts);
                summary << "classes: " << entries.size() << "\n";
                for (std::size_t k = 0; k < entries.size(); ++k) {
                    char name[32];
                    std::snprintf(name, sizeof name, "class_%03zu.gem", k);
                    write_file((fs::path(census_out) / name).string(),
                               write_gem(entries[k].graph));
                    summary << name << " g=(" << entries[k].g01 << "," << entries[k].g02 << ","
                            << entries[k].g03
                            << ") sphere=" << to_string(entries[k].sphere.status) << "\n";
                }
            } else if (census_dim == 4 && census_simple) {
                auto result = census_simple_4(census_vertices, opts);
                summary << "classes: " << result.classes.size() << "\n";
                summary << "unknown: " << result.unknown.size() << "\n";
                for (std::size_t k = 0; k < result.classes.size(); ++k) {
                    char name[32];
                    std::snprintf(name, sizeof name, "class_%03zu.gem", k);
                    write_file((fs::path(census_out) / name).string(),
                               write_gem(result.classes[k]));
                    summary << name << "\n";
                }
                for (std::size_t k = 0; k < result.unknown.size(); ++k) {
                    char name[32];
                    std::snprintf(name, sizeof name, "unknown_%03zu.gem", k);
                    write_file((fs::path(census_out) / name).string(),
                               write_gem(result.unknown[k]));
                    summary << name << "\n";
                }
            } else {
                fail(errc::invalid_config, "census supports --dim 3 or --dim 4 --simple");
            }
            write_file((fs::path(census_out) / "summary.txt").string(), summary.str());
            std::cout << summary.str();
            return 0;
        }
        if (*cmd_catalog) {
            emit(catalog_out, write_gem(load_catalog(catalog_name, catalog_data)));
            return 0;
        }
        if (*cmd_dot) {
            emit(dot_out, export_dot(parse_gem(slurp(dot_in))));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
