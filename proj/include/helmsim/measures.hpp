#pragma once

#include <string>

#include "helmsim/types.hpp"

#include "json.hpp"

namespace helmsim {

/// Knots whose percentage-measure denominator falls below this are skipped
/// and counted instead of dividing by ~0.
inline constexpr double kDenomEps = 1e-6;

/// Truth-side normalizers for the vessel distance measure: total arc
/// length, mean total speed, and the ship's maximum yaw rate.
struct NormalizationContext {
    double L_bar = 0.0;       ///< m
    double U_mean_bar = 0.0;  ///< m/s
    double r_max = 0.0;       ///< rad/s
};

/// Chord-sum arc length and mean speed over every truth record. Throws
/// ValidationError for fewer than 2 records or a degenerate trajectory.
NormalizationContext normalization_context(const Trajectory& truth, double r_max);

/// A truth/prediction pair sharing identical timestamps. Comparisons run
/// over knots 1..n; knot 0 is the shared initial state.
class AlignedTrajectoryPair {
public:
    AlignedTrajectoryPair(const Trajectory& truth, const Trajectory& prediction);

    const Trajectory& truth() const { return *truth_; }
    const Trajectory& prediction() const { return *prediction_; }
    std::size_t steps() const { return truth_->records.size() - 1; }

private:
    const Trajectory* truth_;
    const Trajectory* prediction_;
};

/// Mean Manhattan distance over x, y (m).
double mmd(const AlignedTrajectoryPair& pair);

/// Mean Euclidean distance over x, y (m).
double med(const AlignedTrajectoryPair& pair);

/// Manhattan distance over all six state dimensions (mixed units).
double asd(const AlignedTrajectoryPair& pair);

/// Euclidean distance over all six state dimensions (mixed units).
double msd(const AlignedTrajectoryPair& pair);

struct PercentMeasure {
    double value = 0.0;  ///< %
    int skipped = 0;     ///< knots excluded for a degenerate denominator
};

/// Percentage Manhattan measure over x, y, psi, u, normalized per knot by
/// the truth magnitudes. Positions are taken in a frame anchored at the
/// truth's first record so the denominators are translation-independent.
PercentMeasure pmd(const AlignedTrajectoryPair& pair);

/// Percentage Euclidean counterpart of pmd.
PercentMeasure ped(const AlignedTrajectoryPair& pair);

/// Vessel distance measure (%): per-knot blend of position error over
/// L_bar, heading error over pi, speed errors over U_mean_bar, and yaw
/// rate error over r_max.
double cvdm(const AlignedTrajectoryPair& pair, const NormalizationContext& ctx);

enum class Category { optimal, satisfactory, sub_optimal };

struct CategoryThresholds {
    double optimal_below = 1.5;       ///< %
    double satisfactory_below = 4.0;  ///< %
};

Category categorize(double cvdm_pct, CategoryThresholds thresholds = {});
const char* to_string(Category c);

struct MeasureReport {
    double mmd_m = 0.0;
    double med_m = 0.0;
    double asd = 0.0;
    double msd = 0.0;
    double pmd_pct = 0.0;
    double ped_pct = 0.0;
    double cvdm_pct = 0.0;
    Category category = Category::optimal;
    int skipped_knots = 0;
};

MeasureReport evaluate_measures(const AlignedTrajectoryPair& pair,
                                const NormalizationContext& ctx,
                                CategoryThresholds thresholds = {});

nlohmann::ordered_json report_to_json(const MeasureReport& report);

}  // namespace helmsim
