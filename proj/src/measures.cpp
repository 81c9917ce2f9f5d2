#include "helmsim/measures.hpp"

#include <cmath>

#include "helmsim/errors.hpp"
#include "helmsim/geometry.hpp"
#include "helmsim/io_util.hpp"

namespace helmsim {

NormalizationContext normalization_context(const Trajectory& truth, double r_max) {
    if (truth.records.size() < 2) {
        throw ValidationError("normalization: trajectory needs at least 2 records");
    }
    if (!(r_max > 0.0)) throw ValidationError("normalization: r_max must be > 0");

    NormalizationContext ctx;
    ctx.r_max = r_max;
    double speed_sum = 0.0;
    for (std::size_t i = 0; i < truth.records.size(); ++i) {
        const auto& s = truth.records[i].state;
        speed_sum += std::hypot(s.u, s.v);
        if (i > 0) {
            const auto& p = truth.records[i - 1].state;
            ctx.L_bar += std::hypot(s.x - p.x, s.y - p.y);
        }
    }
    ctx.U_mean_bar = speed_sum / static_cast<double>(truth.records.size());
    if (ctx.L_bar < kDenomEps) {
        throw ValidationError("normalization: degenerate trajectory (arc length ~ 0)");
    }
    if (ctx.U_mean_bar < kDenomEps) {
        throw ValidationError("normalization: degenerate trajectory (mean speed ~ 0)");
    }
    return ctx;
}

AlignedTrajectoryPair::AlignedTrajectoryPair(const Trajectory& truth,
                                             const Trajectory& prediction)
    : truth_(&truth), prediction_(&prediction) {
    if (truth.records.size() != prediction.records.size()) {
        throw ValidationError("aligned pair: length mismatch (" +
                              std::to_string(truth.records.size()) + " vs " +
                              std::to_string(prediction.records.size()) + ")");
    }
    if (truth.records.size() < 2) {
        throw ValidationError("aligned pair: needs at least 2 records");
    }
    for (std::size_t i = 0; i < truth.records.size(); ++i) {
        if (truth.records[i].t != prediction.records[i].t) {
            throw ValidationError("aligned pair: timestamp mismatch at knot " +
                                  std::to_string(i));
        }
    }
}

namespace {

struct KnotDiff {
    double dx, dy, dpsi, du, dv, dr;
};

KnotDiff diff_at(const AlignedTrajectoryPair& pair, std::size_t i) {
    const auto& a = pair.truth().records[i].state;
    const auto& b = pair.prediction().records[i].state;
    return {a.x - b.x,  a.y - b.y,  angle_diff(a.psi, b.psi),
            a.u - b.u,  a.v - b.v,  a.r - b.r};
}

}  // namespace

double mmd(const AlignedTrajectoryPair& pair) {
    double sum = 0.0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const KnotDiff d = diff_at(pair, i);
        sum += std::abs(d.dx) + std::abs(d.dy);
    }
    return sum / static_cast<double>(pair.steps());
}

double med(const AlignedTrajectoryPair& pair) {
    double sum = 0.0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const KnotDiff d = diff_at(pair, i);
        sum += std::hypot(d.dx, d.dy);
    }
    return sum / static_cast<double>(pair.steps());
}

double asd(const AlignedTrajectoryPair& pair) {
    double sum = 0.0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const KnotDiff d = diff_at(pair, i);
        sum += std::abs(d.dx) + std::abs(d.dy) + std::abs(d.dpsi) + std::abs(d.du) +
               std::abs(d.dv) + std::abs(d.dr);
    }
    return sum / static_cast<double>(pair.steps());
}

double msd(const AlignedTrajectoryPair& pair) {
    double sum = 0.0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const KnotDiff d = diff_at(pair, i);
        sum += std::sqrt(d.dx * d.dx + d.dy * d.dy + d.dpsi * d.dpsi + d.du * d.du +
                         d.dv * d.dv + d.dr * d.dr);
    }
    return sum / static_cast<double>(pair.steps());
}

namespace {

PercentMeasure percent_measure(const AlignedTrajectoryPair& pair, bool euclidean) {
    const auto& t0 = pair.truth().records.front().state;
    double sum = 0.0;
    int skipped = 0;
    int used = 0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const auto& tr = pair.truth().records[i].state;
        const KnotDiff d = diff_at(pair, i);
        // Truth positions relative to the first truth record; the heading
        // and speed magnitudes are frame-free already.
        const double tx = tr.x - t0.x;
        const double ty = tr.y - t0.y;
        const double tpsi = tr.psi;
        const double tu = tr.u;

        double num, den;
        if (euclidean) {
            num = std::sqrt(d.dx * d.dx + d.dy * d.dy + d.dpsi * d.dpsi + d.du * d.du);
            den = std::sqrt(tx * tx + ty * ty + tpsi * tpsi + tu * tu);
        } else {
            num = std::abs(d.dx) + std::abs(d.dy) + std::abs(d.dpsi) + std::abs(d.du);
            den = std::abs(tx) + std::abs(ty) + std::abs(tpsi) + std::abs(tu);
        }
        if (den < kDenomEps) {
            ++skipped;
            continue;
        }
        sum += num / den;
        ++used;
    }
    if (used == 0) {
        throw ValidationError("percentage measure: every knot has a degenerate denominator");
    }
    return {100.0 * sum / static_cast<double>(used), skipped};
}

}  // namespace

PercentMeasure pmd(const AlignedTrajectoryPair& pair) { return percent_measure(pair, false); }

PercentMeasure ped(const AlignedTrajectoryPair& pair) { return percent_measure(pair, true); }

double cvdm(const AlignedTrajectoryPair& pair, const NormalizationContext& ctx) {
    if (!(ctx.L_bar > 0.0) || !(ctx.U_mean_bar > 0.0) || !(ctx.r_max > 0.0)) {
        throw ValidationError("cvdm: degenerate normalization context");
    }
    double sum = 0.0;
    for (std::size_t i = 1; i <= pair.steps(); ++i) {
        const KnotDiff d = diff_at(pair, i);
        sum += std::abs(d.dx) / ctx.L_bar + std::abs(d.dy) / ctx.L_bar +
               std::abs(d.dpsi) / kPi + std::abs(d.du) / ctx.U_mean_bar +
               std::abs(d.dv) / ctx.U_mean_bar + std::abs(d.dr) / ctx.r_max;
    }
    return 100.0 * sum / static_cast<double>(pair.steps());
}

Category categorize(double cvdm_pct, CategoryThresholds thresholds) {
    if (cvdm_pct < thresholds.optimal_below) return Category::optimal;
    if (cvdm_pct < thresholds.satisfactory_below) return Category::satisfactory;
    return Category::sub_optimal;
}

const char* to_string(Category c) {
    switch (c) {
        case Category::optimal: return "optimal";
        case Category::satisfactory: return "satisfactory";
        case Category::sub_optimal: return "sub_optimal";
    }
    return "?";
}

MeasureReport evaluate_measures(const AlignedTrajectoryPair& pair,
                                const NormalizationContext& ctx,
                                CategoryThresholds thresholds) {
    MeasureReport rep;
    rep.mmd_m = mmd(pair);
    rep.med_m = med(pair);
    rep.asd = asd(pair);
    rep.msd = msd(pair);
    const PercentMeasure pm = pmd(pair);
    const PercentMeasure pe = ped(pair);
    rep.pmd_pct = pm.value;
    rep.ped_pct = pe.value;
    rep.skipped_knots = std::max(pm.skipped, pe.skipped);
    rep.cvdm_pct = cvdm(pair, ctx);
    rep.category = categorize(rep.cvdm_pct, thresholds);
    return rep;
}

nlohmann::ordered_json report_to_json(const MeasureReport& report) {
    nlohmann::ordered_json j;
    j["mmd_m"] = round_sig9(report.mmd_m);
    j["med_m"] = round_sig9(report.med_m);
    j["asd"] = round_sig9(report.asd);
    j["msd"] = round_sig9(report.msd);
    j["pmd_pct"] = round_sig9(report.pmd_pct);
    j["ped_pct"] = round_sig9(report.ped_pct);
    j["cvdm_pct"] = round_sig9(report.cvdm_pct);
    j["category"] = to_string(report.category);
    j["skipped_knots"] = report.skipped_knots;
    return j;
}

}  // namespace helmsim
