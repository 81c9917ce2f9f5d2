#pragma once

#include <string>
#include <vector>

#include "helmsim/environment.hpp"
#include "helmsim/types.hpp"

namespace helmsim {

/// Mean Earth radius used by the local tangent-plane projection.
inline constexpr double kEarthRadius = 6371000.0;  // m

/// Records farther than this from the projection anchor are rejected
/// (planar distortion grows past usefulness).
inline constexpr double kProjectionRange = 50000.0;  // m

/// One recorded fix, converted to internal units at ingestion: angles in
/// rad, yaw rate in rad/s, propeller rate in rev/s. Positions stay
/// geodetic until projection.
struct VoyageRecord {
    double t = 0.0;        ///< s since epoch
    double lat = 0.0;      ///< deg
    double lon = 0.0;      ///< deg
    double heading = 0.0;  ///< rad, clockwise from north
    double sog = 0.0;      ///< m/s speed over ground
    double cog = 0.0;      ///< rad, course over ground
    double yaw_rate = 0.0; ///< rad/s
    double rudder = 0.0;   ///< rad
    double n = 0.0;        ///< rev/s
};

/// Voyage CSV columns:
///   timestamp_iso8601, lat_deg, lon_deg, heading_deg, sog_mps, cog_deg,
///   yaw_rate_degmin, rudder_deg, rpm
/// Rows must be strictly increasing in time; hard bounds are enforced and
/// violations name the row and field.
std::vector<VoyageRecord> load_voyage(const std::string& path);

/// Equirectangular projection to the local plane: x = R * dlat,
/// y = R * cos(lat_anchor) * dlon, both in radians. Throws ValidationError
/// beyond kProjectionRange.
Vec2 project_to_local(double lat_deg, double lon_deg, double anchor_lat_deg,
                      double anchor_lon_deg);

/// Inverse of project_to_local (used to synthesize voyage fixtures).
void local_to_geodetic(Vec2 pos, double anchor_lat_deg, double anchor_lon_deg,
                       double& lat_deg, double& lon_deg);

/// One scoring window: truth trajectory in its own local frame, the
/// recorded controls, the weather in effect, and the seed state (equal to
/// the first truth knot).
struct ValidationSegment {
    Trajectory truth;
    ControlSeries controls;
    EnvironmentSeries env;
    ShipState initial;
    int window_index = 0;
    double t_start = 0.0;  ///< s since epoch
};

struct SegmentationOptions {
    int knots = 120;       ///< steps per window (window holds knots+1 records)
    double dt = 1.0;       ///< s
    int stride = 0;        ///< window start spacing in knots; 0 = knots (no overlap)
    double gap_eps = 3.0;  ///< s; windows spanning a larger log gap are dropped
};

struct SegmentationResult {
    std::vector<ValidationSegment> segments;
    int total_windows = 0;
    int dropped_windows = 0;
};

/// Resample a voyage onto the dt grid (linear interpolation for continuous
/// channels, shortest-path for angles, previous-value hold for controls)
/// and cut fixed-length windows. Through-water velocities are recovered
/// from sog/cog and the current; each window is projected about its own
/// first fix. Windows crossing a log gap are dropped and counted.
SegmentationResult segment_voyage(const std::vector<VoyageRecord>& records,
                                  const EnvironmentSeries& env,
                                  const SegmentationOptions& opts = {});

}  // namespace helmsim
