#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liemin/rotational.hpp"
#include "liemin/surface.hpp"

namespace liemin {

struct ToleranceSet {
    double umbilic = 1e-8;
    double curvature_line = 1e-6;
    double fit = 1e-6;
    double el = 1e-9;
    double residual = 1e-8;
};

/// One batch run: which surface, which analyses, at what resolution and
/// tolerances, and where the outputs go. Loaded from a JSON config file;
/// every run is reproducible from the file plus the seed.
struct AnalysisConfig {
    std::string surface;       // builtin fixture name...
    FixtureParams params;      // ...with numeric parameters
    std::string profile_csv;   // ...or a radius profile sampled as CSV rows v,r

    std::optional<Domain> domain; // override the fixture default
    Grid grid{64, 64};
    ToleranceSet tol;
    std::vector<std::string> analyses; // subset of analysis_names(), or "all"
    std::vector<double> parallel_t{0.1, -0.1, 0.3, -0.3};
    int bump_count = 10;
    double eps = 1e-4; // variation step, scaled by 1/(curvature scale)
    std::uint64_t seed = 1;

    std::string out_report;
    std::string out_csv_dir;
    std::string out_mesh;
};

std::vector<std::string> analysis_names();

AnalysisConfig parse_config(const nlohmann::json& j);
AnalysisConfig load_config(const std::string& path);

struct RealizedSurface {
    ImmersionPatch patch;
    std::optional<ProfileCurve> profile;
};

RealizedSurface realize_surface(const AnalysisConfig& cfg);

/// Machine-readable analysis report with stable key order (schema v1).
using SurfaceReport = nlohmann::ordered_json;

/// Run every requested analysis and assemble the report. Deterministic for a
/// fixed config and seed. Throws the usual typed errors on precondition
/// failures (umbilic fixtures, misaligned coordinates, ...).
SurfaceReport run(const AnalysisConfig& cfg);

void report_serialize(const SurfaceReport& r, const std::string& path);
SurfaceReport report_parse(const std::string& path);

/// OBJ mesh of the patch on an nx x ny vertex grid with per-vertex normals.
/// kappa != 0 surfaces are projected to R^3 through (x1,x2,x3)/(1+x4)
/// (stereographic for S^3, hyperboloid-to-ball for H^3); the file header
/// documents the projection.
void export_mesh(const ImmersionPatch& p, const Grid& grid, const std::string& path);

/// CSV grids (header row, 10 significant digits).
void export_curvature_csv(const ImmersionPatch& p, const Grid& grid, const std::string& path);
void export_el_csv(const ImmersionPatch& p, const Grid& grid, double inv_length_scale,
                   const std::string& path);
void export_profile_csv(const ProfileCurve& profile, int n, const std::string& path);

/// Variation sweep rows (bump id, placement, dL/deps) from a report's
/// "variation" block.
void export_variation_csv(const SurfaceReport& report, const std::string& path);

} // namespace liemin
