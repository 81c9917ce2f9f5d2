#pragma once

#include "helmsim/environment.hpp"
#include "helmsim/types.hpp"
#include "helmsim/vessel_config.hpp"

namespace helmsim {

/// Low-speed guard: below this total speed the drift angle and advance
/// ratio are taken as zero and 1/U terms are clamped.
inline constexpr double kSpeedEps = 0.1;  // m/s

/// Below this shaft rate the propeller produces no thrust or torque.
inline constexpr double kPropRateEps = 0.01;  // rev/s

/// Hard physical rudder limit.
inline constexpr double kRudderLimit = deg2rad(45.0);

/// Drift angle beta = atan(-v / U), zero under the low-speed guard.
double drift_angle(const ShipState& state);

/// Advance ratio J = U cos(beta) (1 - w_p) / (n D); zero when U or n is
/// under its guard.
double advance_ratio(const VesselConfig& cfg, const ShipState& state, double n);

/// Rudder force and moment. The inflow angle is delta - gamma_R * beta_R
/// with beta_R the local drift at the rudder station; the inflow speed is
/// k_prop * u * (1 - w_p). Throws ValidationError past the rudder limit.
ForceTriplet rudder_forces(const VesselConfig& cfg, const ShipState& state, double delta,
                           double n);

/// Propeller surge thrust (kN). Throws ValidationError for n < 0.
double propeller_thrust(const VesselConfig& cfg, const ShipState& state, double n);

/// Shaft torque demanded by the propeller (kN*m). Not part of the force
/// balance; exposed for engine-load studies.
double propeller_torque(const VesselConfig& cfg, const ShipState& state, double n);

/// Superstructure wind load from the apparent wind and coefficient tables.
ForceTriplet wind_forces(const VesselConfig& cfg, const ApparentWind& aw);

/// Added resistance in waves: pure surge resistance applied only when the
/// waves come within +/-45 deg of the bow; exactly zero outside the gate
/// and always zero in sway and yaw.
ForceTriplet wave_force(const VesselConfig& cfg, const ShipState& state,
                        const EnvironmentSample& env);

/// Still-water resistance magnitude R(|u|) >= 0.
double hull_resistance(const VesselConfig& cfg, double u);

/// All force sources evaluated at one state, plus their sum.
ForceBreakdown force_breakdown(const VesselConfig& cfg, const ShipState& state,
                               const ControlInput& control, const EnvironmentSample& env);

/// (Sum X, Sum Y, Sum N): rudder + thrust + wind + wave + hull resistance.
ForceTriplet total_external_forces(const VesselConfig& cfg, const ShipState& state,
                                   const ControlInput& control, const EnvironmentSample& env);

ForceTriplet sum_forces(const ShipState& state, const ForceBreakdown& fb);

}  // namespace helmsim
