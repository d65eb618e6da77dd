// Batch driver: loads a JSON run configuration, executes the requested
// analyses, and emits machine-readable reports, CSV grids, and OBJ meshes.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liemin/analysis.hpp"
#include "liemin/errors.hpp"

namespace {

struct CommonFlags {
    std::string grid;
    double tol_el = -1.0;
    std::int64_t seed = -1;
    std::string out;
};

void add_common(CLI::App* cmd, std::string& config_path, CommonFlags& flags) {
    cmd->add_option("config", config_path, "JSON run configuration")->required();
    cmd->add_option("--grid", flags.grid, "grid override, e.g. 64x64");
    cmd->add_option("--tol-el", flags.tol_el, "EL residual tolerance override");
    cmd->add_option("--seed", flags.seed, "seed override");
    cmd->add_option("--out", flags.out, "report output path override");
}

liemin::AnalysisConfig load_with_flags(const std::string& path, const CommonFlags& flags) {
    liemin::AnalysisConfig cfg = liemin::load_config(path);
    if (!flags.grid.empty()) {
        int nx = 0, ny = 0;
        if (std::sscanf(flags.grid.c_str(), "%dx%d", &nx, &ny) != 2 || nx < 8 || ny < 8)
            throw liemin::ConfigError("--grid expects NxM with N,M >= 8");
        cfg.grid = {nx, ny};
    }
    if (flags.tol_el > 0.0)
        cfg.tol.el = flags.tol_el;
    if (flags.seed >= 0)
        cfg.seed = static_cast<std::uint64_t>(flags.seed);
    if (!flags.out.empty())
        cfg.out_report = flags.out;
    return cfg;
}

void emit(const liemin::AnalysisConfig& cfg, const liemin::SurfaceReport& rep) {
    if (!cfg.out_report.empty()) {
        liemin::report_serialize(rep, cfg.out_report);
        std::cout << "report written to " << cfg.out_report << "\n";
    } else {
        std::cout << rep.dump(2) << "\n";
    }
    if (!cfg.out_csv_dir.empty()) {
        const liemin::RealizedSurface rs = liemin::realize_surface(cfg);
        const double inv_len = 1.0 / liemin::patch_length_scale(rs.patch, cfg.grid);
        liemin::export_curvature_csv(rs.patch, cfg.grid, cfg.out_csv_dir + "/curvature.csv");
        liemin::export_el_csv(rs.patch, cfg.grid, inv_len, cfg.out_csv_dir + "/el.csv");
        if (rs.profile)
            liemin::export_profile_csv(*rs.profile, cfg.grid.ny, cfg.out_csv_dir + "/profile.csv");
        if (rep.contains("variation"))
            liemin::export_variation_csv(rep, cfg.out_csv_dir + "/variation.csv");
        std::cout << "CSV grids written to " << cfg.out_csv_dir << "\n";
    }
    if (!cfg.out_mesh.empty()) {
        const liemin::RealizedSurface rs = liemin::realize_surface(cfg);
        liemin::export_mesh(rs.patch, cfg.grid, cfg.out_mesh);
        std::cout << "mesh written to " << cfg.out_mesh << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie-invariant energy and curvature analysis of surface patches"};
    app.require_subcommand(1);

    std::string config_path;
    CommonFlags flags;
    std::vector<double> t_values;

    CLI::App* analyze = app.add_subcommand("analyze", "run the analyses requested in the config");
    add_common(analyze, config_path, flags);

    CLI::App* list = app.add_subcommand("list", "list built-in fixtures");

    CLI::App* mesh = app.add_subcommand("mesh", "export the surface as an OBJ mesh");
    add_common(mesh, config_path, flags);

    CLI::App* fit = app.add_subcommand("fit", "fit linear/affine Weingarten relations");
    add_common(fit, config_path, flags);

    CLI::App* parallel = app.add_subcommand("parallel", "offset surfaces and coefficient transport");
    add_common(parallel, config_path, flags);
    parallel->add_option("--t", t_values, "offset distances (overrides config)");

    CLI::App* variation = app.add_subcommand("variation", "first-variation bump sweep");
    add_common(variation, config_path, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& name : liemin::builtin_fixture_names())
                std::cout << name << "\n";
            return 0;
        }
        liemin::AnalysisConfig cfg = load_with_flags(config_path, flags);
        if (analyze->parsed()) {
            if (cfg.analyses.empty())
                cfg.analyses = {"all"};
            emit(cfg, liemin::run(cfg));
        } else if (mesh->parsed()) {
            const liemin::RealizedSurface rs = liemin::realize_surface(cfg);
            const std::string path = cfg.out_mesh.empty()
                                         ? (cfg.out_report.empty() ? "surface.obj" : cfg.out_report)
                                         : cfg.out_mesh;
            liemin::export_mesh(rs.patch, cfg.grid, path);
            std::cout << "mesh written to " << path << "\n";
        } else if (fit->parsed()) {
            cfg.analyses = {"curvature", "weingarten"};
            emit(cfg, liemin::run(cfg));
        } else if (parallel->parsed()) {
            cfg.analyses = {"weingarten", "parallel"};
            if (!t_values.empty())
                cfg.parallel_t = t_values;
            emit(cfg, liemin::run(cfg));
        } else if (variation->parsed()) {
            cfg.analyses = {"el", "variation"};
            emit(cfg, liemin::run(cfg));
        }
    } catch (const liemin::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const liemin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
