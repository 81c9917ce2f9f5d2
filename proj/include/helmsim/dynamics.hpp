#pragma once

#include <array>
#include <utility>

#include "helmsim/environment.hpp"
#include "helmsim/forces.hpp"
#include "helmsim/types.hpp"
#include "helmsim/vessel_config.hpp"

namespace helmsim {

/// Singularity threshold for the sway/yaw inertia matrix determinant
/// (tonne^2 units).
inline constexpr double kDetEps = 1e-9;

/// Over-ground body velocities (u', v'): through-water velocity plus the
/// sea current rotated into the body frame. Yaw rate over ground equals r.
std::pair<double, double> ground_velocities(const ShipState& state, Vec2 current);

/// Invert ground_velocities: recover through-water (u, v) from over-ground
/// body velocities and the current.
std::pair<double, double> water_velocities(double psi, double u_prime, double v_prime,
                                           Vec2 current);

/// Earth-frame position and heading rates from over-ground body velocities.
std::array<double, 3> kinematic_rates(const ShipState& state, double u_prime, double v_prime);

/// Body-frame accelerations (du, dv, dr) for the given net force/moment.
/// Surge is decoupled; sway and yaw solve a 2x2 linear system whose matrix
/// collects the rigid-body and added-mass inertia. Throws SimulationError
/// when that matrix is numerically singular.
std::array<double, 3> accelerations(const VesselConfig& cfg, const ShipState& state,
                                    const ForceTriplet& forces);

/// Full state derivative with the controls and environment held fixed.
StateDerivative state_derivative(const VesselConfig& cfg, const ShipState& state,
                                 const ControlInput& control, const EnvironmentSample& env);

/// One classical RK4 step with zero-order-hold inputs; the resulting
/// heading is re-wrapped to [-pi, pi).
ShipState step(const VesselConfig& cfg, const ShipState& state, const ControlInput& control,
               const EnvironmentSample& env, double dt);

/// Fixed-step simulation of n_steps RK4 updates. Controls and environment
/// are sampled at each step start (zero-order hold). Records carry the
/// per-step force breakdown; the final record's forces are evaluated but
/// never integrated. Deterministic: identical inputs give bit-identical
/// output. Record times are t0 + i*dt.
Trajectory simulate(const VesselConfig& cfg, const ShipState& initial,
                    const ControlSeries& controls, const EnvironmentSeries& env, double dt,
                    int n_steps, double t0 = 0.0);

}  // namespace helmsim
