#pragma once

#include <string>
#include <vector>

#include "helmsim/measures.hpp"
#include "helmsim/vessel_config.hpp"
#include "helmsim/voyage.hpp"

#include "json.hpp"

namespace helmsim {

struct ValidateOptions {
    SegmentationOptions segmentation;
    CategoryThresholds thresholds;
    int threads = 0;  ///< 0 = hardware concurrency, capped by HELMSIM_THREADS
};

/// One scored window: replay metadata plus the measure report, or the
/// failure that kept it from being scored.
struct SegmentScore {
    std::string voyage_id;
    int window_index = 0;
    double t_start = 0.0;
    double mean_abs_rudder_deg = 0.0;
    double mean_rpm = 0.0;
    bool ok = false;
    std::string error;
    MeasureReport report;
};

struct ValidationReport {
    std::vector<SegmentScore> segments;  ///< sorted by (voyage_id, window_index)
    int optimal = 0;
    int satisfactory = 0;
    int sub_optimal = 0;
    int failed = 0;
    int dropped_windows = 0;
    int total_windows = 0;
};

struct NamedVoyage {
    std::string id;
    std::vector<VoyageRecord> records;
};

/// Segment every voyage, replay each window through the simulator seeded
/// from the first truth knot with the recorded controls and hindcast
/// weather, and score it with every distance measure. Segments are
/// processed by a worker pool; the report is assembled in deterministic
/// order regardless of scheduling.
ValidationReport run_validation(const VesselConfig& cfg, const std::vector<NamedVoyage>& voyages,
                                const EnvironmentSeries& env, const ValidateOptions& opts = {});

/// Score one segment (also the single-segment path used by the compare
/// command's plot output).
SegmentScore score_segment(const VesselConfig& cfg, const ValidationSegment& seg,
                           const std::string& voyage_id, const CategoryThresholds& thresholds);

/// Replay a segment's controls/environment through the simulator.
Trajectory predict_segment(const VesselConfig& cfg, const ValidationSegment& seg);

nlohmann::ordered_json validation_report_to_json(const ValidationReport& report);

/// Data-only plot bundle for one truth/prediction pair: one CSV per panel
/// (track, heading, speeds, yaw rate) plus a manifest.json naming them.
void write_plot_bundle(const Trajectory& truth, const Trajectory& prediction,
                       const std::string& dir);

/// Worker count after applying the HELMSIM_THREADS cap.
int effective_thread_count(int requested);

}  // namespace helmsim
