#include "helmsim/validate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "helmsim/dynamics.hpp"
#include "helmsim/errors.hpp"
#include "helmsim/io_util.hpp"

namespace helmsim {

namespace fs = std::filesystem;

int effective_thread_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("HELMSIM_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

Trajectory predict_segment(const VesselConfig& cfg, const ValidationSegment& seg) {
    return simulate(cfg, seg.initial, seg.controls, seg.env, seg.truth.dt,
                    static_cast<int>(seg.truth.steps()), seg.t_start);
}

SegmentScore score_segment(const VesselConfig& cfg, const ValidationSegment& seg,
                           const std::string& voyage_id, const CategoryThresholds& thresholds) {
    SegmentScore score;
    score.voyage_id = voyage_id;
    score.window_index = seg.window_index;
    score.t_start = seg.t_start;
    double rudder_sum = 0.0, rpm_sum = 0.0;
    for (const auto& c : seg.controls.u) {
        rudder_sum += std::abs(rad2deg(c.delta));
        rpm_sum += c.n * 60.0;
    }
    if (!seg.controls.u.empty()) {
        score.mean_abs_rudder_deg = rudder_sum / static_cast<double>(seg.controls.u.size());
        score.mean_rpm = rpm_sum / static_cast<double>(seg.controls.u.size());
    }
    try {
        const Trajectory prediction = predict_segment(cfg, seg);
        const AlignedTrajectoryPair pair(seg.truth, prediction);
        const NormalizationContext ctx = normalization_context(seg.truth, cfg.r_max);
        score.report = evaluate_measures(pair, ctx, thresholds);
        score.ok = true;
    } catch (const Error& e) {
        score.ok = false;
        score.error = e.what();
    }
    return score;
}

ValidationReport run_validation(const VesselConfig& cfg, const std::vector<NamedVoyage>& voyages,
                                const EnvironmentSeries& env, const ValidateOptions& opts) {
    // Collect every window first so workers can pull from one flat queue.
    struct Job {
        const std::string* voyage_id;
        ValidationSegment segment;
    };
    std::vector<Job> jobs;
    ValidationReport report;
    for (const auto& voyage : voyages) {
        SegmentationResult segs = segment_voyage(voyage.records, env, opts.segmentation);
        report.total_windows += segs.total_windows;
        report.dropped_windows += segs.dropped_windows;
        for (auto& seg : segs.segments) {
            jobs.push_back({&voyage.id, std::move(seg)});
        }
    }

    std::vector<SegmentScore> scores(jobs.size());
    const int workers =
        std::min(effective_thread_count(opts.threads), std::max(static_cast<int>(jobs.size()), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            scores[i] = score_segment(cfg, jobs[i].segment, *jobs[i].voyage_id, opts.thresholds);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::sort(scores.begin(), scores.end(), [](const SegmentScore& a, const SegmentScore& b) {
        if (a.voyage_id != b.voyage_id) return a.voyage_id < b.voyage_id;
        return a.window_index < b.window_index;
    });
    for (const auto& s : scores) {
        if (!s.ok) {
            ++report.failed;
        } else {
            switch (s.report.category) {
                case Category::optimal: ++report.optimal; break;
                case Category::satisfactory: ++report.satisfactory; break;
                case Category::sub_optimal: ++report.sub_optimal; break;
            }
        }
    }
    report.segments = std::move(scores);
    return report;
}

nlohmann::ordered_json validation_report_to_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& s : report.segments) {
        nlohmann::ordered_json js;
        js["voyage_id"] = s.voyage_id;
        js["window_index"] = s.window_index;
        js["t_start"] = round_sig9(s.t_start);
        js["t_start_iso"] = format_iso8601(s.t_start);
        js["mean_abs_rudder_deg"] = round_sig9(s.mean_abs_rudder_deg);
        js["mean_rpm"] = round_sig9(s.mean_rpm);
        if (s.ok) {
            js["report"] = report_to_json(s.report);
        } else {
            js["error"] = s.error;
        }
        j["segments"].push_back(js);
    }
    nlohmann::ordered_json agg;
    agg["optimal"] = report.optimal;
    agg["satisfactory"] = report.satisfactory;
    agg["sub_optimal"] = report.sub_optimal;
    agg["failed"] = report.failed;
    agg["scored_segments"] = static_cast<int>(report.segments.size());
    agg["dropped_windows"] = report.dropped_windows;
    agg["total_windows"] = report.total_windows;
    j["aggregate"] = agg;
    return j;
}

void write_plot_bundle(const Trajectory& truth, const Trajectory& prediction,
                       const std::string& dir) {
    fs::create_directories(dir);
    const std::size_t n = std::min(truth.records.size(), prediction.records.size());

    auto open = [&](const char* name) {
        std::ofstream out(fs::path(dir) / name);
        if (!out) throw Error(std::string("plot bundle: cannot write ") + name);
        return out;
    };

    {
        auto out = open("track.csv");
        out << "t,x_true,y_true,x_pred,y_pred\n";
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = truth.records[i];
            const auto& b = prediction.records[i];
            out << fmt_g9(a.t) << ',' << fmt_g9(a.state.x) << ',' << fmt_g9(a.state.y) << ','
                << fmt_g9(b.state.x) << ',' << fmt_g9(b.state.y) << "\n";
        }
    }
    {
        auto out = open("heading.csv");
        out << "t,psi_true,psi_pred\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << fmt_g9(truth.records[i].t) << ',' << fmt_g9(truth.records[i].state.psi)
                << ',' << fmt_g9(prediction.records[i].state.psi) << "\n";
        }
    }
    {
        auto out = open("speeds.csv");
        out << "t,u_true,u_pred,v_true,v_pred\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << fmt_g9(truth.records[i].t) << ',' << fmt_g9(truth.records[i].state.u) << ','
                << fmt_g9(prediction.records[i].state.u) << ','
                << fmt_g9(truth.records[i].state.v) << ','
                << fmt_g9(prediction.records[i].state.v) << "\n";
        }
    }
    {
        auto out = open("yaw_rate.csv");
        out << "t,r_true,r_pred\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << fmt_g9(truth.records[i].t) << ',' << fmt_g9(truth.records[i].state.r) << ','
                << fmt_g9(prediction.records[i].state.r) << "\n";
        }
    }

    nlohmann::ordered_json manifest;
    manifest["panels"] = {{{"name", "track"}, {"file", "track.csv"}},
                          {{"name", "heading"}, {"file", "heading.csv"}},
                          {{"name", "speeds"}, {"file", "speeds.csv"}},
                          {{"name", "yaw_rate"}, {"file", "yaw_rate.csv"}}};
    std::ofstream mf(fs::path(dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";
}

}  // namespace helmsim
