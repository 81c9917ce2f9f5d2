#include "helmsim/trajectory_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "helmsim/errors.hpp"
#include "helmsim/geometry.hpp"
#include "helmsim/io_util.hpp"

namespace helmsim {

const ControlInput& ControlSeries::at(double time) const {
    if (t.empty()) throw ValidationError("control series: empty");
    auto it = std::upper_bound(t.begin(), t.end(), time);
    if (it == t.begin()) return u.front();
    return u[static_cast<std::size_t>(it - t.begin()) - 1];
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("trajectory: cannot write " + path);
    out << kTrajectoryHeader << "\n";
    for (const auto& rec : traj.records) {
        const auto& s = rec.state;
        const auto& f = rec.forces;
        out << fmt_g9(rec.t) << ',' << fmt_g9(s.x) << ',' << fmt_g9(s.y) << ','
            << fmt_g9(s.psi) << ',' << fmt_g9(s.u) << ',' << fmt_g9(s.v) << ',' << fmt_g9(s.r)
            << ',' << fmt_g9(rec.u_prime) << ',' << fmt_g9(rec.v_prime) << ','
            << fmt_g9(rec.control.delta) << ',' << fmt_g9(rec.control.n) << ','
            << fmt_g9(f.rudder.X) << ',' << fmt_g9(f.rudder.Y) << ',' << fmt_g9(f.rudder.N)
            << ',' << fmt_g9(f.thrust) << ',' << fmt_g9(f.wind.X) << ',' << fmt_g9(f.wind.Y)
            << ',' << fmt_g9(f.wind.N) << ',' << fmt_g9(f.wave_x) << ','
            << fmt_g9(f.resistance) << "\n";
    }
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("trajectory: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("trajectory: " + path + " is empty");
    const auto header = split_csv(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* required : {"t", "x", "y", "psi", "u", "v", "r"}) {
        if (!col.count(required)) {
            throw ParseError("trajectory: " + path + " missing column " + required);
        }
    }
    auto get = [&](const std::vector<std::string>& f, const char* name, double fallback) {
        auto it = col.find(name);
        if (it == col.end() || it->second >= f.size()) return fallback;
        return std::stod(f[it->second]);
    };

    Trajectory traj;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() < col.size()) {
            throw ParseError("trajectory: " + path + " line " + std::to_string(lineno) +
                             ": expected " + std::to_string(col.size()) + " columns");
        }
        SimulationRecord rec;
        try {
            rec.t = std::stod(f[col["t"]]);
            rec.state = {get(f, "x", 0), get(f, "y", 0), get(f, "psi", 0),
                         get(f, "u", 0), get(f, "v", 0), get(f, "r", 0)};
            rec.u_prime = get(f, "u_prime", rec.state.u);
            rec.v_prime = get(f, "v_prime", rec.state.v);
            rec.control.delta = get(f, "delta", 0.0);
            rec.control.n = get(f, "n_rps", 0.0);
            rec.forces.rudder = {get(f, "X_rud", 0), get(f, "Y_rud", 0), get(f, "N_rud", 0)};
            rec.forces.thrust = get(f, "X_thr", 0.0);
            rec.forces.wind = {get(f, "X_wind", 0), get(f, "Y_wind", 0), get(f, "N_wind", 0)};
            rec.forces.wave_x = get(f, "X_wave", 0.0);
            rec.forces.resistance = get(f, "R_hull", 0.0);
        } catch (const std::exception& e) {
            throw ParseError("trajectory: " + path + " line " + std::to_string(lineno) + ": " +
                             e.what());
        }
        traj.records.push_back(rec);
    }
    if (traj.records.size() < 2) {
        throw ParseError("trajectory: " + path + " needs at least 2 records");
    }
    traj.dt = traj.records[1].t - traj.records[0].t;
    for (std::size_t i = 1; i < traj.records.size(); ++i) {
        const double gap = traj.records[i].t - traj.records[i - 1].t;
        if (std::abs(gap - traj.dt) > 1e-9 * std::max(1.0, std::abs(traj.dt))) {
            throw ParseError("trajectory: " + path + ": non-uniform timestep at row " +
                             std::to_string(i + 1));
        }
    }
    return traj;
}

ControlSeries load_controls_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("controls: cannot open " + path);
    ControlSeries series;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        if (!header_seen) {
            header_seen = true;
            if (f.size() != 3 || f[0] != "t_s") {
                throw ParseError("controls: " + path + ": expected header t_s,rudder_deg,rpm");
            }
            continue;
        }
        if (f.size() != 3) {
            throw ParseError("controls: " + path + " line " + std::to_string(lineno) +
                             ": expected 3 columns");
        }
        try {
            const double t = std::stod(f[0]);
            const double delta = deg2rad(std::stod(f[1]));
            const double n = std::stod(f[2]) / 60.0;
            if (!series.t.empty() && t <= series.t.back()) {
                throw ParseError("times must be strictly increasing");
            }
            series.t.push_back(t);
            series.u.push_back({delta, n});
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("controls: " + path + " line " + std::to_string(lineno) + ": " +
                             e.what());
        }
    }
    if (series.t.empty()) throw ParseError("controls: " + path + ": no rows");
    return series;
}

}  // namespace helmsim
