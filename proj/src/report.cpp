#include "euler/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <boost/version.hpp>

namespace euler {

void write_metadata(std::ostream& out, const Metadata& meta) {
    for (const auto& [key, value] : meta) out << "# " << key << '=' << value << '\n';
}

namespace {

std::string format_rel(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << x;
    return s.str();
}

}  // namespace

void write_compare_csv(std::ostream& out, const CompareResult& result, const Metadata& meta) {
    write_metadata(out, meta);
    out << "m,exact,approx,rel_err\n";
    for (const auto& row : result.rows)
        out << row.m << ',' << to_string(row.exact) << ',' << format_scientific(row.approx) << ','
            << format_rel(row.rel_err) << '\n';
}

nlohmann::json compare_json(const CompareResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : result.rows) {
        nlohmann::json r{{"m", row.m},
                         {"exact", to_string(row.exact)},
                         {"approx", format_scientific(row.approx)},
                         {"rel_err", row.rel_err},
                         {"ok", row.ok()}};
        if (row.threshold) r["threshold"] = *row.threshold;
        rows.push_back(std::move(r));
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : result.terms) terms.push_back({{"lambda", t.lambda}, {"c", t.c}});
    return {{"family", std::string(family_name(result.family))},
            {"terms", terms},
            {"rows", rows},
            {"passed", result.passed()}};
}

void write_comb_table_csv(std::ostream& out, const CombSpectrum& spectrum, const Metadata& meta) {
    write_metadata(out, meta);
    out << "lambda,inner1,norm2,c\n";
    for (const auto& p : spectrum.pairs)
        out << format_double(p.lambda) << ',' << format_double(p.inner_1) << ',' << format_double(p.norm2) << ','
            << format_double(p.c) << '\n';
}

nlohmann::json comb_table_json(const CombSpectrum& spectrum) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : spectrum.pairs)
        rows.push_back({{"lambda", p.lambda},
                        {"inner1", p.inner_1},
                        {"norm2", p.norm2},
                        {"c", p.c},
                        {"shooting_residual", p.shooting_residual}});
    return {{"requested", spectrum.requested}, {"eigenpairs", rows}};
}

void write_grid2_table_csv(std::ostream& out, const GridSpectrum& spectrum, const Metadata& meta) {
    write_metadata(out, meta);
    out << "lambda,inner1,norm2,c,inner1_raw,norm2_raw,c_raw\n";
    for (const auto& p : spectrum.pairs)
        out << format_double(p.lambda) << ',' << format_double(p.inner_1_table) << ','
            << format_double(p.norm2_table) << ',' << format_double(p.c_table) << ',' << format_double(p.inner_1)
            << ',' << format_double(p.norm2) << ',' << format_double(p.c) << '\n';
}

nlohmann::json grid2_table_json(const GridSpectrum& spectrum) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : spectrum.pairs)
        rows.push_back({{"lambda", p.lambda},
                        {"inner1", p.inner_1_table},
                        {"norm2", p.norm2_table},
                        {"c", p.c_table},
                        {"inner1_raw", p.inner_1},
                        {"norm2_raw", p.norm2},
                        {"c_raw", p.c},
                        {"hprime1", p.shooting_residual},
                        {"h1", p.h_at_1},
                        {"g0", p.g_at_0},
                        {"g1", p.g_at_1},
                        {"half_integral", p.half_integral}});
    return {{"requested", spectrum.requested}, {"eigenpairs", rows}};
}

void write_scan_csv(std::ostream& out, const ScanResult& scan, std::string_view residual_name, const Metadata& meta) {
    write_metadata(out, meta);
    out << "lambda," << residual_name << '\n';
    for (const auto& p : scan.points) out << format_double(p.lambda) << ',' << format_double(p.residual) << '\n';
}

void write_eigenfunctions_csv(std::ostream& out, const CombSpectrum* comb, const GridSpectrum* grid, int stride,
                              const Metadata& meta) {
    if (stride < 1) throw std::invalid_argument("eigenfunction stride must be >= 1");
    std::size_t n = 0;
    double h = 0.0;
    if (comb && !comb->pairs.empty()) {
        n = comb->pairs.front().f.size();
        h = comb->pairs.front().h;
    }
    if (grid && !grid->pairs.empty()) {
        if (n != 0 && n != grid->pairs.front().g.size())
            throw std::invalid_argument("comb and grid2 eigenfunctions use different grids");
        n = grid->pairs.front().g.size();
        h = grid->pairs.front().h;
    }
    write_metadata(out, meta);
    out << 'x';
    if (comb)
        for (std::size_t k = 0; k < comb->pairs.size(); ++k) out << ",f" << k + 1;
    if (grid)
        for (std::size_t k = 0; k < grid->pairs.size(); ++k) out << ",g" << k + 1;
    out << '\n';
    for (std::size_t i = 0; i < n; i += static_cast<std::size_t>(stride)) {
        out << format_double(i * h);
        if (comb)
            for (const auto& p : comb->pairs) out << ',' << format_double(p.f[i]);
        if (grid)
            for (const auto& p : grid->pairs) out << ',' << format_double(p.g[i]);
        out << '\n';
    }
}

nlohmann::json report_options_json(const ReportOptions& o) {
    nlohmann::json fams = nlohmann::json::array();
    for (Family f : o.families) fams.push_back(std::string(family_name(f)));
    return {{"families", fams},
            {"m_max", o.m_max},
            {"roots", o.roots},
            {"steps", o.steps},
            {"scan_points", o.scan_points},
            {"scan_min", o.scan_min},
            {"scan_max", o.scan_max},
            {"eigenfunction_stride", o.eigenfunction_stride},
            {"seed", o.seed}};
}

ReportOptions report_options_from_json(const nlohmann::json& manifest) {
    const nlohmann::json& j = manifest.contains("options") ? manifest.at("options") : manifest;
    ReportOptions o;
    o.families.clear();
    for (const auto& f : j.at("families")) o.families.insert(parse_family(f.get<std::string>()));
    o.m_max = j.at("m_max").get<int>();
    o.roots = j.at("roots").get<int>();
    o.steps = j.at("steps").get<int>();
    o.scan_points = j.at("scan_points").get<int>();
    o.scan_min = j.at("scan_min").get<double>();
    o.scan_max = j.at("scan_max").get<double>();
    o.eigenfunction_stride = j.at("eigenfunction_stride").get<int>();
    o.seed = j.at("seed").get<std::uint64_t>();
    return o;
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
    return s.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

ReportBundle cmd_report(const ReportOptions& options) {
    ReportBundle bundle;
    bundle.dir = options.out_base / (options.run_name.empty() ? "report-" + utc_timestamp() : options.run_name);
    std::filesystem::create_directories(bundle.dir);

    const bool want_comb = options.families.contains(Family::Comb);
    const bool want_grid = options.families.contains(Family::Grid2);
    const int steps_for_meta = options.steps;
    const Metadata base{{"roots", std::to_string(options.roots)},
                        {"steps", steps_for_meta == 0 ? "default" : std::to_string(steps_for_meta)},
                        {"seed", std::to_string(options.seed)}};
    auto with = [&](Metadata extra) {
        Metadata meta = base;
        meta.insert(meta.end(), extra.begin(), extra.end());
        return meta;
    };
    auto emit = [&](const std::string& name, auto&& writer) {
        auto out = open_output(bundle.dir / name);
        writer(out);
        bundle.files.push_back(name);
    };

    bundle.passed = true;
    std::optional<CombSpectrum> comb;
    std::optional<GridSpectrum> grid;
    const int scan_steps = options.steps;

    if (want_comb) {
        RootSearch search = comb_default_search();
        search.n_roots = options.roots;
        search.steps = options.steps;
        comb = comb_eigen(search);
        std::vector<SeriesTerm> terms;
        for (const auto& p : comb->pairs) terms.push_back({p.lambda, p.c});
        const CompareResult table1 = compare_with_terms(Family::Comb, terms, options.m_max);
        bundle.passed = bundle.passed && table1.passed() && comb->complete();
        emit("table1_comb.csv", [&](std::ostream& o) { write_compare_csv(o, table1, with({{"family", "comb"}})); });
        emit("table2.csv", [&](std::ostream& o) { write_comb_table_csv(o, *comb, base); });
        const ShootingProblem prob = comb_problem();
        const ScanResult scan = scan_lambda(prob, options.scan_min, options.scan_max, options.scan_points,
                                            scan_steps > 0 ? scan_steps : default_steps(prob.system));
        emit("fig2.csv", [&](std::ostream& o) { write_scan_csv(o, scan, "residual", with({{"problem", "comb"}})); });
    }
    if (want_grid) {
        RootSearch search = grid2_default_search();
        search.n_roots = options.roots;
        search.steps = options.steps;
        grid = grid2_eigen(search);
        std::vector<SeriesTerm> terms;
        for (const auto& p : grid->pairs) terms.push_back({p.lambda, p.c_table});
        const CompareResult table1 = compare_with_terms(Family::Grid2, terms, options.m_max);
        bundle.passed = bundle.passed && table1.passed() && grid->complete();
        emit("table1_grid2.csv", [&](std::ostream& o) { write_compare_csv(o, table1, with({{"family", "grid2"}})); });
        emit("table3.csv", [&](std::ostream& o) { write_grid2_table_csv(o, *grid, base); });
        const ShootingProblem prob = grid2_problem();
        const ScanResult scan = scan_lambda(prob, options.scan_min, options.scan_max, options.scan_points,
                                            scan_steps > 0 ? scan_steps : default_steps(prob.system));
        emit("fig4.csv", [&](std::ostream& o) { write_scan_csv(o, scan, "hprime1", with({{"problem", "grid2"}})); });
    }
    if (comb || grid) {
        emit("eigenfunctions.csv", [&](std::ostream& o) {
            write_eigenfunctions_csv(o, comb ? &*comb : nullptr, grid ? &*grid : nullptr,
                                     options.eigenfunction_stride, base);
        });
    }

    nlohmann::json manifest{{"options", report_options_json(options)},
                            {"files", bundle.files},
                            {"versions",
                             {{"euler", std::string(kVersion)},
                              {"compiler", std::string(__VERSION__)},
                              {"boost", std::string(BOOST_LIB_VERSION)}}}};
    auto out = open_output(bundle.dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    return bundle;
}

}  // namespace euler
