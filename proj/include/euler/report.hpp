#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "euler/comb.hpp"
#include "euler/compare.hpp"
#include "euler/grid2.hpp"
#include "euler/ode.hpp"

namespace euler {

/// Written as "# key=value" lines ahead of the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_metadata(std::ostream& out, const Metadata& meta);

/// m,exact,approx,rel_err
void write_compare_csv(std::ostream& out, const CompareResult& result, const Metadata& meta);
nlohmann::json compare_json(const CompareResult& result);

/// lambda,inner1,norm2,c
void write_comb_table_csv(std::ostream& out, const CombSpectrum& spectrum, const Metadata& meta);
nlohmann::json comb_table_json(const CombSpectrum& spectrum);

/// lambda,inner1,norm2,c,inner1_raw,norm2_raw,c_raw (first four use the
/// table convention, the raw ones the literal U inner product).
void write_grid2_table_csv(std::ostream& out, const GridSpectrum& spectrum, const Metadata& meta);
nlohmann::json grid2_table_json(const GridSpectrum& spectrum);

/// lambda,<residual_name>
void write_scan_csv(std::ostream& out, const ScanResult& scan, std::string_view residual_name, const Metadata& meta);

/// x,f1..fk (comb) and/or g1..gk (grid2), every `stride`-th grid point.
void write_eigenfunctions_csv(std::ostream& out, const CombSpectrum* comb, const GridSpectrum* grid, int stride,
                              const Metadata& meta);

struct ReportOptions {
    std::filesystem::path out_base = "reports";
    std::string run_name;  // empty: report-<UTC timestamp>
    std::set<Family> families{Family::Comb, Family::Grid2};
    int m_max = 10;
    int roots = 4;
    int steps = 0;
    int scan_points = 1001;
    double scan_min = -0.5;
    double scan_max = 0.5;
    int eigenfunction_stride = 64;
    std::uint64_t seed = 20070101;
};

struct ReportBundle {
    std::filesystem::path dir;
    std::vector<std::string> files;  // data files, manifest.json excluded
    bool passed = false;             // every compare row within threshold
};

nlohmann::json report_options_json(const ReportOptions& options);
ReportOptions report_options_from_json(const nlohmann::json& manifest);

/// Regenerates every table and figure dataset for the selected families into
/// out_base/run_name, plus manifest.json recording the options.
ReportBundle cmd_report(const ReportOptions& options);

/// Library version recorded in manifests.
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace euler
