#pragma once

#include <cstddef>
#include <vector>

#include "helmsim/geometry.hpp"

namespace helmsim {

/// Full kinematic state. Position (x north, y east) and heading psi are
/// earth-fixed; u, v, r are body-frame velocities through water.
/// psi is kept wrapped to [-pi, pi).
struct ShipState {
    double x = 0.0;    ///< m
    double y = 0.0;    ///< m
    double psi = 0.0;  ///< rad, clockwise from north
    double u = 0.0;    ///< m/s surge, through water
    double v = 0.0;    ///< m/s sway, through water
    double r = 0.0;    ///< rad/s yaw rate

    bool operator==(const ShipState&) const = default;
};

struct StateDerivative {
    double dx = 0.0;
    double dy = 0.0;
    double dpsi = 0.0;
    double du = 0.0;
    double dv = 0.0;
    double dr = 0.0;
};

/// Rudder angle (positive = starboard rudder) and propeller rate.
struct ControlInput {
    double delta = 0.0;  ///< rad
    double n = 0.0;      ///< rev/s

    bool operator==(const ControlInput&) const = default;
};

/// Surge force X (kN), sway force Y (kN), yaw moment N (kN*m) about the
/// midship origin.
struct ForceTriplet {
    double X = 0.0;
    double Y = 0.0;
    double N = 0.0;
};

inline ForceTriplet operator+(ForceTriplet a, ForceTriplet b) {
    return {a.X + b.X, a.Y + b.Y, a.N + b.N};
}

/// Per-source force contributions for one evaluation of the force model.
struct ForceBreakdown {
    ForceTriplet rudder;
    double thrust = 0.0;      ///< kN, surge only
    ForceTriplet wind;
    double wave_x = 0.0;      ///< kN, surge only (added resistance, <= 0)
    double resistance = 0.0;  ///< kN, hull resistance magnitude R(|u|)
};

/// One time-indexed sample of a trajectory: state, over-ground velocities,
/// the controls in effect, and the force breakdown evaluated at that state.
struct SimulationRecord {
    double t = 0.0;  ///< s
    ShipState state;
    double u_prime = 0.0;  ///< m/s surge over ground
    double v_prime = 0.0;  ///< m/s sway over ground
    ControlInput control;
    ForceBreakdown forces;
};

/// Uniform-timestep sequence of records; n steps produce n+1 records.
struct Trajectory {
    std::vector<SimulationRecord> records;
    double dt = 0.0;

    std::size_t steps() const { return records.empty() ? 0 : records.size() - 1; }
};

/// Zero-order-hold control schedule: the input at time t is the sample at
/// the latest knot <= t (first sample before the series starts).
struct ControlSeries {
    std::vector<double> t;
    std::vector<ControlInput> u;

    static ControlSeries constant(ControlInput c) { return {{0.0}, {c}}; }
    const ControlInput& at(double time) const;
};

}  // namespace helmsim
