#pragma once

#include <string>
#include <vector>

#include "helmsim/types.hpp"

namespace helmsim {

/// Environmental conditions at one instant, earth frame. Wind and current
/// are stored as flow vectors (the direction air/water moves toward);
/// meteorological "coming from" inputs are converted at ingestion. Waves
/// keep their coming-from direction since only the relative heading is used.
struct EnvironmentSample {
    Vec2 wind_flow;           ///< m/s
    double wave_height = 0.0; ///< m, significant (H_W1/3)
    double wave_from = 0.0;   ///< rad, direction waves come from
    Vec2 current;             ///< m/s

    bool operator==(const EnvironmentSample&) const = default;
};

/// Time-sorted environment samples with zero-order hold between them.
struct EnvironmentSeries {
    std::vector<double> t;
    std::vector<EnvironmentSample> samples;

    static EnvironmentSeries constant(EnvironmentSample s) { return {{0.0}, {s}}; }
    static EnvironmentSeries calm() { return constant(EnvironmentSample{}); }

    /// Latest sample at or before `time`; the first sample before the
    /// series starts. Throws ValidationError on an empty series.
    const EnvironmentSample& at(double time) const;

    /// Samples relevant to [t0, t1]: everything inside plus the held
    /// sample in effect at t0.
    EnvironmentSeries slice(double t0, double t1) const;
};

/// Apparent wind felt on board: speed and the direction it comes from,
/// measured from the bow, positive toward starboard, in [0, 2*pi).
struct ApparentWind {
    double speed = 0.0;  ///< m/s
    double angle = 0.0;  ///< rad, 0 = head wind
};

/// True wind (earth-frame flow vector) to apparent wind for a ship moving
/// over ground with the given current.
ApparentWind apparent_wind(Vec2 wind_flow, const ShipState& state, Vec2 current = {});

/// Weather CSV columns:
///   timestamp_iso8601, wind_speed_mps, wind_dir_from_deg, hs_m,
///   wave_dir_from_deg, current_speed_mps, current_dir_to_deg
/// Timestamps must be strictly increasing.
EnvironmentSeries load_weather_csv(const std::string& path);

}  // namespace helmsim
