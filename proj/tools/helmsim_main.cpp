// helmsim — 3-DoF ship maneuvering simulator and trajectory validation
// harness. Subcommands: simulate, compare, validate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "helmsim/dynamics.hpp"
#include "helmsim/errors.hpp"
#include "helmsim/io_util.hpp"
#include "helmsim/measures.hpp"
#include "helmsim/trajectory_io.hpp"
#include "helmsim/validate.hpp"
#include "helmsim/vessel_config.hpp"
#include "helmsim/voyage.hpp"

namespace fs = std::filesystem;
using namespace helmsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

VesselConfig load_config_checked(const std::string& path) {
    if (!fs::exists(path)) throw ParseError("config file not found: " + path);
    return load_config(path);
}

int cmd_simulate(const std::string& config_path, const std::string& preset,
                 const std::string& controls_path, const std::string& env_path,
                 double rudder_deg, double rpm, double initial_speed_kn, double dt, int steps,
                 const std::string& out_path) {
    const VesselConfig cfg = load_config_checked(config_path);

    ShipState initial;
    ControlSeries controls;
    if (!preset.empty()) {
        double sign;
        if (preset == "turn-starboard-35") {
            sign = 1.0;
        } else if (preset == "turn-port-35") {
            sign = -1.0;
        } else {
            throw ParseError("unknown preset '" + preset +
                             "' (expected turn-starboard-35 or turn-port-35)");
        }
        initial.u = 6.0 * kKnotMps;
        controls = ControlSeries::constant({sign * deg2rad(35.0), 106.0 / 60.0});
    } else if (!controls_path.empty()) {
        controls = load_controls_csv(controls_path);
        initial.u = initial_speed_kn * kKnotMps;
    } else {
        if (std::abs(rudder_deg) > 45.0) throw ParseError("--rudder-deg out of [-45, 45]");
        controls = ControlSeries::constant({deg2rad(rudder_deg), rpm / 60.0});
        initial.u = initial_speed_kn * kKnotMps;
    }

    EnvironmentSeries env = EnvironmentSeries::calm();
    if (!env_path.empty()) {
        env = load_weather_csv(env_path);
        // Weather files carry absolute timestamps; align the series start
        // with simulation time zero.
        const double shift = env.t.front();
        for (auto& t : env.t) t -= shift;
    }

    const Trajectory traj = simulate(cfg, initial, controls, env, dt, steps);
    write_trajectory_csv(traj, out_path);
    std::cout << "wrote " << out_path << " (" << traj.records.size() << " records)\n";
    return kExitOk;
}

int cmd_compare(const std::string& truth_path, const std::string& pred_path, double r_max,
                const std::string& out_path, const std::string& plot_dir) {
    const Trajectory truth = read_trajectory_csv(truth_path);
    const Trajectory prediction = read_trajectory_csv(pred_path);
    const AlignedTrajectoryPair pair(truth, prediction);
    const NormalizationContext ctx = normalization_context(truth, r_max);
    const MeasureReport report = evaluate_measures(pair, ctx);

    const auto j = report_to_json(report);
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
    if (!plot_dir.empty()) {
        write_plot_bundle(truth, prediction, plot_dir);
        std::cout << "wrote plot bundle in " << plot_dir << "\n";
    }
    return kExitOk;
}

int cmd_validate(const std::string& voyage_glob, const std::string& weather_path,
                 const std::string& config_path, int stride, int steps, double dt,
                 const std::string& out_dir) {
    const VesselConfig cfg = load_config_checked(config_path);
    const EnvironmentSeries env = load_weather_csv(weather_path);

    const auto paths = glob_files(voyage_glob);
    if (paths.empty()) throw ParseError("no voyage files match '" + voyage_glob + "'");

    std::vector<NamedVoyage> voyages;
    for (const auto& p : paths) {
        voyages.push_back({fs::path(p).stem().string(), load_voyage(p)});
    }

    ValidateOptions opts;
    opts.segmentation.knots = steps;
    opts.segmentation.dt = dt;
    opts.segmentation.stride = stride;
    const ValidationReport report = run_validation(cfg, voyages, env, opts);

    fs::create_directories(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "report.json");
        if (!out) throw Error("cannot write report.json in " + out_dir);
        out << validation_report_to_json(report).dump(2) << "\n";
    }

    // Per-segment plot bundles need the replayed predictions again; redo
    // the segmentation serially so bundle emission stays deterministic.
    for (const auto& voyage : voyages) {
        SegmentationOptions so = opts.segmentation;
        const SegmentationResult segs = segment_voyage(voyage.records, env, so);
        for (const auto& seg : segs.segments) {
            try {
                const Trajectory pred = predict_segment(cfg, seg);
                const fs::path dir = fs::path(out_dir) / "segments" /
                                     (voyage.id + "_w" + std::to_string(seg.window_index));
                write_plot_bundle(seg.truth, pred, dir.string());
            } catch (const Error&) {
                // failure already recorded in the report
            }
        }
    }

    std::cout << "scored " << report.segments.size() << " segments from " << voyages.size()
              << " voyage(s): " << report.optimal << " optimal, " << report.satisfactory
              << " satisfactory, " << report.sub_optimal << " sub-optimal, " << report.failed
              << " failed (" << report.dropped_windows << " windows dropped)\n"
              << "report: " << (fs::path(out_dir) / "report.json").string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-DoF ship maneuvering simulator and trajectory validation harness"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "integrate a maneuver and write trajectory CSV");
    std::string sim_config, sim_preset, sim_controls, sim_env, sim_out = "trajectory.csv";
    double sim_rudder = 0.0, sim_rpm = 0.0, sim_speed_kn = 6.0, sim_dt = 1.0;
    int sim_steps = 120;
    sim->add_option("--config", sim_config, "vessel config JSON")->required();
    sim->add_option("--preset", sim_preset, "turn-starboard-35 | turn-port-35");
    sim->add_option("--controls", sim_controls, "controls CSV (t_s,rudder_deg,rpm)");
    sim->add_option("--env", sim_env, "weather CSV (calm if omitted)");
    sim->add_option("--rudder-deg", sim_rudder, "constant rudder angle [deg]");
    sim->add_option("--rpm", sim_rpm, "constant propeller rate [RPM]");
    sim->add_option("--initial-speed-kn", sim_speed_kn, "initial surge speed [kn]");
    sim->add_option("--dt", sim_dt, "timestep [s]")->check(CLI::PositiveNumber);
    sim->add_option("--steps", sim_steps, "number of steps")->check(CLI::PositiveNumber);
    sim->add_option("--out", sim_out, "output trajectory CSV");

    // compare
    auto* cmp = app.add_subcommand("compare", "score a prediction against a truth trajectory");
    std::string cmp_truth, cmp_pred, cmp_out, cmp_plot;
    double cmp_rmax = 0.0314;
    cmp->add_option("--truth", cmp_truth, "ground-truth trajectory CSV")->required();
    cmp->add_option("--pred", cmp_pred, "predicted trajectory CSV")->required();
    cmp->add_option("--r-max", cmp_rmax, "maximum yaw rate [rad/s]")->check(CLI::PositiveNumber);
    cmp->add_option("--out", cmp_out, "report JSON path ('-' for stdout)");
    cmp->add_option("--plot-dir", cmp_plot, "directory for the plot bundle");

    // validate
    auto* val = app.add_subcommand("validate", "replay and score recorded voyages");
    std::string val_voyages, val_weather, val_config, val_out = "validation";
    int val_stride = 0, val_steps = 120;
    double val_dt = 1.0;
    val->add_option("--voyages", val_voyages, "voyage CSV path or glob")->required();
    val->add_option("--weather", val_weather, "hindcast weather CSV")->required();
    val->add_option("--config", val_config, "vessel config JSON")->required();
    val->add_option("--stride", val_stride, "window start spacing in knots (default: no overlap)");
    val->add_option("--steps", val_steps, "knots per window")->check(CLI::PositiveNumber);
    val->add_option("--dt", val_dt, "resampling timestep [s]")->check(CLI::PositiveNumber);
    val->add_option("--out-dir", val_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_config, sim_preset, sim_controls, sim_env, sim_rudder,
                                sim_rpm, sim_speed_kn, sim_dt, sim_steps, sim_out);
        }
        if (cmp->parsed()) {
            return cmd_compare(cmp_truth, cmp_pred, cmp_rmax, cmp_out, cmp_plot);
        }
        if (val->parsed()) {
            return cmd_validate(val_voyages, val_weather, val_config, val_stride, val_steps,
                                val_dt, val_out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
