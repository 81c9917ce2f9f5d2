#pragma once

#include <cstddef>
#include <vector>

#include "helmsim/geometry.hpp"

namespace helmsim {

/// Piecewise-linear sampled curve y(x) over strictly increasing knots.
///
/// Two extrapolation modes:
///   Clamp    — queries outside the knot span return the endpoint value
///              (rudder lift/drag tables).
///   Periodic — the domain repeats with the given period; the segment
///              between the last knot and the first knot + period is
///              interpolated like any other (wind coefficient tables,
///              period 2*pi).
class SampledCurve {
public:
    enum class Extrapolation { Clamp, Periodic };

    SampledCurve() = default;
    SampledCurve(std::vector<double> xs, std::vector<double> ys,
                 Extrapolation mode = Extrapolation::Clamp, double period = kTwoPi);

    /// Interpolated lookup. Exact at knots. Throws ValidationError if empty.
    double operator()(double x) const;

    bool empty() const { return xs_.empty(); }
    std::size_t size() const { return xs_.size(); }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    Extrapolation mode() const { return mode_; }

    bool operator==(const SampledCurve&) const = default;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    Extrapolation mode_ = Extrapolation::Clamp;
    double period_ = kTwoPi;
};

}  // namespace helmsim
