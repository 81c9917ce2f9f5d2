#include "helmsim/tables.hpp"

#include <algorithm>
#include <cmath>

#include "helmsim/errors.hpp"

namespace helmsim {

SampledCurve::SampledCurve(std::vector<double> xs, std::vector<double> ys,
                           Extrapolation mode, double period)
    : xs_(std::move(xs)), ys_(std::move(ys)), mode_(mode), period_(period) {
    if (xs_.size() != ys_.size()) {
        throw ValidationError("sampled curve: knot/value count mismatch");
    }
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (!(xs_[i] < xs_[i + 1])) {
            throw ValidationError("sampled curve: knots must be strictly increasing");
        }
    }
    if (mode_ == Extrapolation::Periodic) {
        if (period_ <= 0.0) throw ValidationError("sampled curve: period must be > 0");
        if (!xs_.empty() && xs_.back() - xs_.front() >= period_) {
            throw ValidationError("sampled curve: knot span exceeds period");
        }
    }
}

double SampledCurve::operator()(double x) const {
    if (xs_.empty()) throw ValidationError("sampled curve: empty table");
    if (!std::isfinite(x)) throw ValidationError("sampled curve: non-finite query");
    if (xs_.size() == 1) return ys_.front();

    double x0 = xs_.front();
    double x1 = xs_.back();
    if (mode_ == Extrapolation::Periodic) {
        // Shift the query into [front, front + period).
        x = x0 + std::fmod(x - x0, period_);
        if (x < x0) x += period_;
        if (x > x1) {
            // Wraparound segment between the last knot and the first + period.
            const double span = (x0 + period_) - x1;
            const double w = (x - x1) / span;
            return ys_.back() + w * (ys_.front() - ys_.back());
        }
    } else {
        if (x <= x0) return ys_.front();
        if (x >= x1) return ys_.back();
    }

    const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
    if (hi < xs_.size() && xs_[hi] == x) return ys_[hi];  // exact knot
    const std::size_t lo = hi - 1;
    const double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
    return ys_[lo] + w * (ys_[hi] - ys_[lo]);
}

}  // namespace helmsim
