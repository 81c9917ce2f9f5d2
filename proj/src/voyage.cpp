#include "helmsim/voyage.hpp"

#include <cmath>
#include <fstream>

#include "helmsim/dynamics.hpp"
#include "helmsim/errors.hpp"
#include "helmsim/io_util.hpp"

namespace helmsim {

std::vector<VoyageRecord> load_voyage(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("voyage: cannot open " + path);

    std::vector<VoyageRecord> records;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    auto fail = [&](const std::string& what) {
        throw ParseError("voyage: " + path + " line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        if (!header_seen) {
            header_seen = true;
            if (f.size() != 9 || f[0] != "timestamp_iso8601") fail("unexpected header");
            continue;
        }
        if (f.size() != 9) fail("expected 9 columns, got " + std::to_string(f.size()));

        VoyageRecord rec;
        double lat, lon, heading_deg, cog_deg, yaw_degmin, rudder_deg, rpm;
        try {
            rec.t = parse_iso8601(f[0]);
            lat = std::stod(f[1]);
            lon = std::stod(f[2]);
            heading_deg = std::stod(f[3]);
            rec.sog = std::stod(f[4]);
            cog_deg = std::stod(f[5]);
            yaw_degmin = std::stod(f[6]);
            rudder_deg = std::stod(f[7]);
            rpm = std::stod(f[8]);
        } catch (const std::exception& e) {
            fail(e.what());
            throw;  // unreachable
        }
        if (lat < -90.0 || lat > 90.0) fail("lat_deg out of [-90, 90]");
        if (lon < -180.0 || lon >= 180.0) fail("lon_deg out of [-180, 180)");
        if (std::abs(rudder_deg) > 45.0) fail("rudder_deg out of [-45, 45]");
        if (rpm < 0.0) fail("rpm must be >= 0");
        if (rec.sog < 0.0) fail("sog_mps must be >= 0");

        rec.lat = lat;
        rec.lon = lon;
        rec.heading = wrap_pi(deg2rad(heading_deg));
        rec.cog = wrap_pi(deg2rad(cog_deg));
        rec.yaw_rate = deg2rad(yaw_degmin) / 60.0;
        rec.rudder = deg2rad(rudder_deg);
        rec.n = rpm / 60.0;

        if (!records.empty()) {
            if (rec.t == records.back().t) fail("duplicate timestamp");
            if (rec.t < records.back().t) fail("timestamps must be increasing");
        }
        records.push_back(rec);
    }
    if (records.empty()) throw ParseError("voyage: " + path + ": no records");
    return records;
}

Vec2 project_to_local(double lat_deg, double lon_deg, double anchor_lat_deg,
                      double anchor_lon_deg) {
    const double dlat = deg2rad(lat_deg - anchor_lat_deg);
    const double dlon = deg2rad(lon_deg - anchor_lon_deg);
    const Vec2 pos{kEarthRadius * dlat,
                   kEarthRadius * std::cos(deg2rad(anchor_lat_deg)) * dlon};
    if (norm(pos) > kProjectionRange) {
        throw ValidationError("projection: fix is " + std::to_string(norm(pos) / 1000.0) +
                              " km from the anchor (limit 50 km)");
    }
    return pos;
}

void local_to_geodetic(Vec2 pos, double anchor_lat_deg, double anchor_lon_deg,
                       double& lat_deg, double& lon_deg) {
    lat_deg = anchor_lat_deg + rad2deg(pos.x / kEarthRadius);
    lon_deg = anchor_lon_deg +
              rad2deg(pos.y / (kEarthRadius * std::cos(deg2rad(anchor_lat_deg))));
}

namespace {

struct GridSample {
    bool valid = false;
    double lat = 0.0, lon = 0.0;
    double heading = 0.0, sog = 0.0, cog = 0.0, yaw_rate = 0.0;
    double rudder = 0.0, n = 0.0;
};

GridSample sample_grid(const std::vector<VoyageRecord>& recs, std::size_t& hint, double t,
                       double gap_eps) {
    GridSample g;
    // Advance the bracketing segment; grid times are nondecreasing.
    while (hint + 1 < recs.size() && recs[hint + 1].t <= t) ++hint;
    if (recs[hint].t > t || hint + 1 >= recs.size()) {
        if (recs[hint].t == t) {
            // exact last record
        } else {
            return g;
        }
    }
    const VoyageRecord& a = recs[hint];
    if (a.t == t) {
        g = {true, a.lat, a.lon, a.heading, a.sog, a.cog, a.yaw_rate, a.rudder, a.n};
        return g;
    }
    const VoyageRecord& b = recs[hint + 1];
    if (b.t - a.t > gap_eps) return g;  // log gap; leave invalid
    const double w = (t - a.t) / (b.t - a.t);
    g.valid = true;
    g.lat = a.lat + w * (b.lat - a.lat);
    g.lon = a.lon + w * (b.lon - a.lon);
    g.sog = a.sog + w * (b.sog - a.sog);
    g.yaw_rate = a.yaw_rate + w * (b.yaw_rate - a.yaw_rate);
    g.heading = lerp_angle(a.heading, b.heading, w);
    g.cog = lerp_angle(a.cog, b.cog, w);
    g.rudder = a.rudder;  // controls hold the previous value
    g.n = a.n;
    return g;
}

}  // namespace

SegmentationResult segment_voyage(const std::vector<VoyageRecord>& records,
                                  const EnvironmentSeries& env,
                                  const SegmentationOptions& opts) {
    if (records.empty()) throw ValidationError("segmentation: no records");
    if (opts.knots < 1) throw ValidationError("segmentation: knots must be >= 1");
    if (!(opts.dt > 0.0)) throw ValidationError("segmentation: dt must be > 0");
    const int stride = (opts.stride > 0) ? opts.stride : opts.knots;

    // Resample the whole voyage onto the uniform grid first.
    const double t0 = records.front().t;
    const double t_end = records.back().t;
    const int grid_size = static_cast<int>(std::floor((t_end - t0) / opts.dt)) + 1;
    std::vector<GridSample> grid(static_cast<std::size_t>(grid_size));
    std::size_t hint = 0;
    for (int k = 0; k < grid_size; ++k) {
        grid[static_cast<std::size_t>(k)] =
            sample_grid(records, hint, t0 + k * opts.dt, opts.gap_eps);
    }

    SegmentationResult result;
    for (int start = 0; start + opts.knots < grid_size; start += stride) {
        ++result.total_windows;
        const int window_index = result.total_windows - 1;

        bool ok = true;
        for (int k = start; k <= start + opts.knots; ++k) {
            if (!grid[static_cast<std::size_t>(k)].valid) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++result.dropped_windows;
            continue;
        }

        ValidationSegment seg;
        seg.window_index = window_index;
        seg.t_start = t0 + start * opts.dt;
        seg.truth.dt = opts.dt;

        const GridSample& anchor = grid[static_cast<std::size_t>(start)];
        for (int k = start; k <= start + opts.knots; ++k) {
            const GridSample& g = grid[static_cast<std::size_t>(k)];
            const double t = t0 + k * opts.dt;

            SimulationRecord rec;
            rec.t = t;
            const Vec2 pos = project_to_local(g.lat, g.lon, anchor.lat, anchor.lon);
            rec.state.x = pos.x;
            rec.state.y = pos.y;
            rec.state.psi = g.heading;

            // Over-ground velocity from sog/cog, then through-water via the
            // current in effect.
            const Vec2 ground_earth{g.sog * std::cos(g.cog), g.sog * std::sin(g.cog)};
            const Vec2 ground_body = body_from_earth(g.heading, ground_earth);
            rec.u_prime = ground_body.x;
            rec.v_prime = ground_body.y;
            const auto [u, v] =
                water_velocities(g.heading, ground_body.x, ground_body.y, env.at(t).current);
            rec.state.u = u;
            rec.state.v = v;
            rec.state.r = g.yaw_rate;

            rec.control = {g.rudder, g.n};
            seg.truth.records.push_back(rec);
            seg.controls.t.push_back(t);
            seg.controls.u.push_back(rec.control);
        }
        seg.initial = seg.truth.records.front().state;
        seg.env = env.slice(seg.t_start, seg.t_start + opts.knots * opts.dt);
        result.segments.push_back(std::move(seg));
    }
    return result;
}

}  // namespace helmsim
