#include "helmsim/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "helmsim/errors.hpp"
#include "helmsim/io_util.hpp"

namespace helmsim {

const EnvironmentSample& EnvironmentSeries::at(double time) const {
    if (t.empty()) throw ValidationError("environment series: empty");
    // Latest knot <= time.
    auto it = std::upper_bound(t.begin(), t.end(), time);
    if (it == t.begin()) return samples.front();
    return samples[static_cast<std::size_t>(it - t.begin()) - 1];
}

EnvironmentSeries EnvironmentSeries::slice(double t0, double t1) const {
    if (t.empty()) throw ValidationError("environment series: empty");
    EnvironmentSeries out;
    auto start = std::upper_bound(t.begin(), t.end(), t0);
    std::size_t i = (start == t.begin()) ? 0 : static_cast<std::size_t>(start - t.begin()) - 1;
    for (; i < t.size() && t[i] <= t1; ++i) {
        out.t.push_back(t[i]);
        out.samples.push_back(samples[i]);
    }
    if (out.t.empty()) {
        out.t.push_back(t.front());
        out.samples.push_back(samples.front());
    }
    return out;
}

ApparentWind apparent_wind(Vec2 wind_flow, const ShipState& state, Vec2 current) {
    const auto [u_prime, v_prime] = [&] {
        const Vec2 c_body = body_from_earth(state.psi, current);
        return std::pair{state.u + c_body.x, state.v + c_body.y};
    }();
    const Vec2 ground = earth_from_body(state.psi, {u_prime, v_prime});
    const Vec2 rel_flow = wind_flow - ground;
    const Vec2 body_flow = body_from_earth(state.psi, rel_flow);
    ApparentWind aw;
    aw.speed = norm(body_flow);
    if (aw.speed == 0.0) return aw;  // angle is irrelevant at zero speed
    // Direction the apparent wind comes from, measured off the bow.
    aw.angle = wrap_two_pi(std::atan2(-body_flow.y, -body_flow.x));
    return aw;
}

EnvironmentSeries load_weather_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("weather: cannot open " + path);
    EnvironmentSeries series;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        if (!header_seen) {
            header_seen = true;
            if (f.size() != 7 || f[0] != "timestamp_iso8601") {
                throw ParseError("weather: " + path + ": unexpected header");
            }
            continue;
        }
        if (f.size() != 7) {
            throw ParseError("weather: " + path + " line " + std::to_string(lineno) +
                             ": expected 7 columns, got " + std::to_string(f.size()));
        }
        double ts;
        EnvironmentSample s;
        try {
            ts = parse_iso8601(f[0]);
            const double wind_speed = std::stod(f[1]);
            const double wind_from = deg2rad(std::stod(f[2]));
            s.wave_height = std::stod(f[3]);
            s.wave_from = wrap_pi(deg2rad(std::stod(f[4])));
            const double cur_speed = std::stod(f[5]);
            const double cur_to = deg2rad(std::stod(f[6]));
            // "coming from" -> flow vector toward the opposite bearing
            const double wind_to = wind_from + kPi;
            s.wind_flow = {wind_speed * std::cos(wind_to), wind_speed * std::sin(wind_to)};
            s.current = {cur_speed * std::cos(cur_to), cur_speed * std::sin(cur_to)};
        } catch (const std::exception& e) {
            throw ParseError("weather: " + path + " line " + std::to_string(lineno) + ": " +
                             e.what());
        }
        if (s.wave_height < 0.0) {
            throw ParseError("weather: " + path + " line " + std::to_string(lineno) +
                             ": hs_m must be >= 0");
        }
        if (!series.t.empty() && ts <= series.t.back()) {
            throw ParseError("weather: " + path + " line " + std::to_string(lineno) +
                             ": timestamps must be strictly increasing");
        }
        series.t.push_back(ts);
        series.samples.push_back(s);
    }
    if (series.t.empty()) throw ParseError("weather: " + path + ": no samples");
    return series;
}

}  // namespace helmsim
