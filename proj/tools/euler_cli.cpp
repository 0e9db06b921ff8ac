// Command-line front end: exact counts, Nystrom spectra, shooting scans, the
// comb / grid2 / classical eigenproblems, and exact-versus-spectral comparison.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "euler/classical.hpp"
#include "euler/comb.hpp"
#include "euler/compare.hpp"
#include "euler/exact.hpp"
#include "euler/geometry.hpp"
#include "euler/graph.hpp"
#include "euler/grid2.hpp"
#include "euler/report.hpp"
#include "euler/trees.hpp"

using namespace euler;

namespace {

BipartiteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void warn_if_not_bipartite(const BipartiteGraph& g) {
    if (!g.is_bipartite()) std::cerr << "warning: graph is not bipartite; its Euler number is 0\n";
}

Metadata eigen_meta(int roots, int steps) {
    return {{"roots", std::to_string(roots)}, {"steps", steps == 0 ? "default" : std::to_string(steps)}};
}

int run_exact(const std::string& family, const std::string& graph_file, const std::string& s_list, int m_max,
              bool json) {
    nlohmann::json rows = nlohmann::json::array();
    auto emit = [&](int m, const BigCount& count) {
        if (json) rows.push_back({{"m", m}, {"count", to_string(count)}});
        else std::cout << m << ',' << to_string(count) << '\n';
    };
    if (!json) std::cout << "m,count\n";
    if (!graph_file.empty()) {
        const BipartiteGraph g = load_graph(graph_file);
        warn_if_not_bipartite(g);
        if (s_list.empty() && m_max <= 1) {
            emit(1, euler_exact(g));
        } else {
            const VertexMask s = parse_vertex_list(s_list, g.size());
            for (int m = 1; m <= m_max; ++m) emit(m, euler_exact(product_with_path({g, s, m})));
        }
    } else if (family == "cycle") {
        for (int m = 2; m <= m_max; ++m) emit(m, euler_exact(families::cycle(2 * m)));
    } else {
        const Family f = parse_family(family);
        for (int m = 1; m <= m_max; ++m) emit(m, euler_exact(family_graph(f, m)));
    }
    if (json) std::cout << rows.dump(2) << '\n';
    return 0;
}

int run_spectrum(const std::string& graph_file, const std::string& s_list, int nodes, std::uint64_t seed, int top) {
    const BipartiteGraph g = load_graph(graph_file);
    const VertexMask s = parse_vertex_list(s_list, g.size());
    const NystromOperator op = build_nystrom(g, s, static_cast<std::size_t>(nodes), seed);
    const auto spectrum = sym_eig(op, top);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : spectrum)
        entries.push_back({{"lambda", e.lambda}, {"c", e.c}, {"stderr", e.std_error}, {"multiplicity", e.multiplicity}});
    const PositivityReport pos = positivity_checks(spectrum);
    nlohmann::json out{{"nodes", nodes},
                       {"seed", seed},
                       {"volume", op.volume.estimate},
                       {"volume_stderr", op.volume.std_error},
                       {"acceptance_rate", op.nodes.acceptance_rate()},
                       {"entries", entries},
                       {"positivity",
                        {{"lambda1_positive", pos.lambda1_positive},
                         {"simple", pos.simple},
                         {"phi_positive", pos.phi_positive},
                         {"min_phi", pos.min_phi}}}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_scan(const std::string& problem, double lmin, double lmax, int points, int steps, bool log_spacing) {
    ShootingProblem prob;
    std::string column = "residual";
    if (problem == "comb") prob = comb_problem();
    else if (problem == "grid2") {
        prob = grid2_problem();
        column = "hprime1";
    } else if (problem == "classical") prob = classical_problem();
    else throw std::invalid_argument("unknown problem '" + problem + "'");
    if (steps == 0) steps = default_steps(prob.system);
    const ScanResult scan = scan_lambda(prob, lmin, lmax, points, steps, log_spacing ? Spacing::Log : Spacing::Linear);
    write_scan_csv(std::cout, scan, column,
                   {{"problem", problem}, {"steps", std::to_string(steps)}, {"brackets", std::to_string(scan.brackets.size())}});
    return 0;
}

template <class Spectrum, class TableWriter, class TableJson>
int run_eigen(Family family, const Spectrum& spectrum, int roots, int steps, int m_max, const std::string& ef_file,
              int stride, bool json, TableWriter write_table, TableJson table_json,
              std::vector<SeriesTerm> terms) {
    const CompareResult table1 = compare_with_terms(family, terms, m_max);
    if (json) {
        std::cout << nlohmann::json{{"table", table_json(spectrum)}, {"table1", compare_json(table1)}}.dump(2) << '\n';
    } else {
        write_table(std::cout, spectrum, eigen_meta(roots, steps));
        std::cout << '\n';
        write_compare_csv(std::cout, table1, {{"family", std::string(family_name(family))}});
    }
    if (!ef_file.empty()) {
        std::ofstream out(ef_file);
        if (!out) throw std::runtime_error("cannot write " + ef_file);
        if constexpr (std::is_same_v<Spectrum, CombSpectrum>)
            write_eigenfunctions_csv(out, &spectrum, nullptr, stride, eigen_meta(roots, steps));
        else
            write_eigenfunctions_csv(out, nullptr, &spectrum, stride, eigen_meta(roots, steps));
    }
    if (!spectrum.complete()) {
        std::cerr << "warning: found " << spectrum.pairs.size() << " of " << spectrum.requested << " eigenvalues\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler numbers of bipartite graphs: exact counts and spectral asymptotics"};
    app.require_subcommand(1);

    bool json = false;

    // exact
    auto* exact = app.add_subcommand("exact", "Exact Euler numbers (CSV m,count)");
    std::string family = "comb", graph_file, s_list;
    int m_max = 10;
    exact->add_option("--family", family, "comb|grid2|path|cycle (cycle m gives C_2m)")
        ->check(CLI::IsMember({"comb", "grid2", "path", "cycle"}));
    exact->add_option("--graph", graph_file, "Graph file: n, then one 'u v' per line");
    exact->add_option("--s", s_list, "Comma-separated S for G x_S P_m");
    exact->add_option("--m-max", m_max, "Largest m");
    exact->add_flag("--json", json);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Monte Carlo Nystrom spectrum of T (JSON)");
    int nodes = 2000, top = 4;
    std::uint64_t seed = 1;
    spectrum->add_option("--graph", graph_file)->required();
    spectrum->add_option("--s", s_list, "Comma-separated S");
    spectrum->add_option("--nodes", nodes)->check(CLI::Range(2, 20000));
    spectrum->add_option("--seed", seed);
    spectrum->add_option("--top", top)->check(CLI::Range(2, 64));

    // scan
    auto* scan = app.add_subcommand("scan", "Shooting residual over a lambda grid (CSV)");
    std::string problem = "comb";
    double lmin = -0.5, lmax = 0.5;
    int points = 1001, steps = 0;
    bool log_spacing = false;
    scan->add_option("--problem", problem)->check(CLI::IsMember({"comb", "grid2", "classical"}));
    scan->add_option("--lmin", lmin);
    scan->add_option("--lmax", lmax);
    scan->add_option("--points", points)->check(CLI::Range(2, 1000000));
    scan->add_option("--steps", steps, "RK4 steps (0 = 2^16 per unit length)");
    scan->add_flag("--log", log_spacing, "Geometric spacing in |lambda| (one-signed interval)");

    // comb / grid2
    int roots = 4, stride = 64;
    std::string ef_file;
    auto* comb = app.add_subcommand("comb", "Comb eigenproblem: eigenpair table and count comparison");
    auto* grid2 = app.add_subcommand("grid2", "2 x m array eigenproblem: eigenpair table and count comparison");
    for (auto* sub : {comb, grid2}) {
        sub->add_option("--roots", roots)->check(CLI::Range(1, 8));
        sub->add_option("--steps", steps);
        sub->add_option("--m-max", m_max)->check(CLI::Range(1, 12));
        sub->add_option("--emit-eigenfunctions", ef_file, "Write x,f1..fk samples");
        sub->add_option("--stride", stride, "Grid stride for --emit-eigenfunctions");
        sub->add_flag("--json", json);
    }

    // classical
    auto* classical = app.add_subcommand("classical", "Classical Euler numbers against 2 m! sum (2/(pi k))^(m+1)");
    int terms = 4;
    classical->add_option("--m-max", m_max)->check(CLI::Range(1, 30));
    classical->add_option("--terms", terms)->check(CLI::Range(1, 1000));

    // compare
    auto* compare = app.add_subcommand("compare", "Exact counts against the spectral approximation");
    compare->add_option("--family", family)->check(CLI::IsMember({"comb", "grid2", "path"}));
    compare->add_option("--m-max", m_max)->check(CLI::Range(1, 12));
    compare->add_option("--roots", roots)->check(CLI::Range(1, 8));
    compare->add_option("--steps", steps);
    compare->add_flag("--json", json);

    // report
    auto* report = app.add_subcommand("report", "Regenerate every table and figure dataset");
    ReportOptions ropts;
    std::string out_dir = "reports", run_name, families_list, manifest_file;
    report->add_option("--out", out_dir, "Base directory");
    report->add_option("--name", run_name, "Run directory name (default: timestamp)");
    report->add_option("--families", families_list, "Comma-separated subset of comb,grid2");
    report->add_option("--manifest", manifest_file, "Reuse the options recorded in a manifest.json");
    report->add_option("--steps", steps);
    report->add_option("--m-max", m_max)->check(CLI::Range(1, 12));

    // extras
    auto* trees = app.add_subcommand("trees", "Check E(T) >= E_n over all trees");
    int max_n = 9;
    trees->add_option("--max-n", max_n)->check(CLI::Range(1, 10));
    auto* ratio = app.add_subcommand("ratio", "Exact E(G x_S C_2m) / E(G x_S P_2m)");
    ratio->add_option("--graph", graph_file)->required();
    ratio->add_option("--s", s_list);
    ratio->add_option("--m-max", m_max);

    CLI11_PARSE(app, argc, argv);

    try {
        if (exact->parsed()) return run_exact(family, graph_file, s_list, m_max, json);
        if (spectrum->parsed()) return run_spectrum(graph_file, s_list, nodes, seed, top);
        if (scan->parsed()) return run_scan(problem, lmin, lmax, points, steps, log_spacing);
        if (comb->parsed()) {
            RootSearch search = comb_default_search();
            search.n_roots = roots;
            search.steps = steps;
            const CombSpectrum s = comb_eigen(search);
            std::vector<SeriesTerm> t;
            for (const auto& p : s.pairs) t.push_back({p.lambda, p.c});
            return run_eigen(Family::Comb, s, roots, steps, m_max, ef_file, stride, json, write_comb_table_csv,
                             comb_table_json, t);
        }
        if (grid2->parsed()) {
            RootSearch search = grid2_default_search();
            search.n_roots = roots;
            search.steps = steps;
            const GridSpectrum s = grid2_eigen(search);
            std::vector<SeriesTerm> t;
            for (const auto& p : s.pairs) t.push_back({p.lambda, p.c_table});
            return run_eigen(Family::Grid2, s, roots, steps, m_max, ef_file, stride, json, write_grid2_table_csv,
                             grid2_table_json, t);
        }
        if (classical->parsed()) {
            std::cout << "# terms=" << terms << "\nm,exact,approx,rel_err\n";
            for (int m = 1; m <= m_max; ++m) {
                const BigCount exact_value = zigzag_number(m);
                const Extended approx = classical_approx(m, terms);
                std::ostringstream rel;
                rel << std::scientific << std::setprecision(3) << static_cast<double>(relative_error(approx, exact_value));
                std::cout << m << ',' << to_string(exact_value) << ',' << format_scientific(approx) << ',' << rel.str()
                          << '\n';
            }
            return 0;
        }
        if (compare->parsed()) {
            const CompareResult result = cmd_compare(parse_family(family), {m_max, roots, steps});
            if (json) std::cout << compare_json(result).dump(2) << '\n';
            else write_compare_csv(std::cout, result, {{"family", family}, {"roots", std::to_string(roots)}});
            return result.passed() ? 0 : 1;
        }
        if (report->parsed()) {
            if (!manifest_file.empty()) {
                std::ifstream in(manifest_file);
                if (!in) throw std::runtime_error("cannot open " + manifest_file);
                ropts = report_options_from_json(nlohmann::json::parse(in));
            } else {
                ropts.steps = steps;
                ropts.m_max = m_max;
                if (!families_list.empty()) {
                    ropts.families.clear();
                    std::stringstream ss(families_list);
                    for (std::string item; std::getline(ss, item, ',');) {
                        const Family f = parse_family(item);
                        if (f == Family::Path) throw std::invalid_argument("report covers comb and grid2 only");
                        ropts.families.insert(f);
                    }
                }
            }
            ropts.out_base = out_dir;
            ropts.run_name = run_name;
            const ReportBundle bundle = cmd_report(ropts);
            std::cout << bundle.dir.string() << '\n';
            for (const auto& f : bundle.files) std::cout << "  " << f << '\n';
            return bundle.passed ? 0 : 1;
        }
        if (trees->parsed()) {
            const TreeScanReport r = tree_conjecture_scan(max_n);
            std::cout << "n,edges,euler,path_euler,is_path\n";
            for (const auto& row : r.rows) {
                std::cout << row.tree.size() << ',';
                for (std::size_t i = 0; i < row.tree.edges().size(); ++i)
                    std::cout << (i ? " " : "") << row.tree.edges()[i].u << '-' << row.tree.edges()[i].v;
                std::cout << ',' << to_string(row.euler) << ',' << to_string(row.path_euler) << ','
                          << (row.is_path ? 1 : 0) << '\n';
            }
            std::cerr << "violations: " << r.violations.size() << ", non-path equalities: "
                      << r.nonpath_equalities.size() << '\n';
            return 0;
        }
        if (ratio->parsed()) {
            const BipartiteGraph g = load_graph(graph_file);
            const auto ratios = cycle_product_ratio(g, parse_vertex_list(s_list, g.size()), m_max);
            std::cout << "m,ratio,approx\n";
            for (std::size_t i = 0; i < ratios.size(); ++i)
                std::cout << i + 1 << ',' << to_string(ratios[i]) << ','
                          << format_double(static_cast<double>(ratios[i])) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
