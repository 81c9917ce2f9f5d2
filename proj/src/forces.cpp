#include "helmsim/forces.hpp"

#include <cmath>

#include "helmsim/errors.hpp"

namespace helmsim {

double drift_angle(const ShipState& state) {
    const double U = std::hypot(state.u, state.v);
    if (U < kSpeedEps) return 0.0;
    return std::atan(-state.v / U);
}

double advance_ratio(const VesselConfig& cfg, const ShipState& state, double n) {
    if (n < kPropRateEps) return 0.0;
    const double U = std::hypot(state.u, state.v);
    if (U < kSpeedEps) return 0.0;
    const double beta = std::atan(-state.v / U);
    return U * std::cos(beta) * (1.0 - cfg.propeller.w_p) / (n * cfg.propeller.D);
}

ForceTriplet rudder_forces(const VesselConfig& cfg, const ShipState& state, double delta,
                           double /*n*/) {
    if (std::abs(delta) > kRudderLimit) {
        throw ValidationError("rudder angle " + std::to_string(rad2deg(delta)) +
                              " deg exceeds the 45 deg limit");
    }
    const auto& rd = cfg.rudder;

    // Local drift at the rudder station, straightened by gamma_R.
    const double u_eff = std::max(state.u, kSpeedEps);
    const double beta_R = std::atan((-state.v + state.r * rd.x_R) / u_eff);
    const double a_R = delta - rd.gamma_R * beta_R;

    const double U_R = rd.k_prop * state.u * (1.0 - cfg.propeller.w_p);
    const double q = 0.5 * cfg.hull.rho * rd.A_R * U_R * U_R / 1000.0;  // kN
    const double lift = q * rd.C_L(a_R);
    const double drag = q * rd.C_D(a_R);
    const double F_N = lift * std::cos(a_R) + drag * std::sin(a_R);

    ForceTriplet f;
    f.X = -(1.0 - rd.t_R) * F_N * std::sin(delta);
    f.Y = -(1.0 + rd.a_H) * F_N * std::cos(delta);
    f.N = -(1.0 + rd.a_H) * rd.x_R * F_N * std::cos(delta);
    return f;
}

double propeller_thrust(const VesselConfig& cfg, const ShipState& state, double n) {
    if (n < 0.0) throw ValidationError("propeller rate must be >= 0");
    if (n < kPropRateEps) return 0.0;
    const auto& p = cfg.propeller;
    const double J = advance_ratio(cfg, state, n);
    const double D4 = p.D * p.D * p.D * p.D;
    return (1.0 - p.t_p) * cfg.hull.rho * n * n * D4 * eval_poly(p.k_T, J) / 1000.0;
}

double propeller_torque(const VesselConfig& cfg, const ShipState& state, double n) {
    if (n < 0.0) throw ValidationError("propeller rate must be >= 0");
    if (n < kPropRateEps) return 0.0;
    const auto& p = cfg.propeller;
    const double J = advance_ratio(cfg, state, n);
    const double D5 = p.D * p.D * p.D * p.D * p.D;
    return cfg.hull.rho * n * n * D5 * eval_poly(p.k_Q, J) / 1000.0;
}

ForceTriplet wind_forces(const VesselConfig& cfg, const ApparentWind& aw) {
    const auto& w = cfg.windage;
    const double q = 0.5 * w.rho_air * aw.speed * aw.speed / 1000.0;  // kN/m^2
    ForceTriplet f;
    f.X = q * w.C_X(aw.angle) * w.A_F;
    f.Y = q * w.C_Y(aw.angle) * w.A_L;
    f.N = q * w.C_N(aw.angle) * w.A_L * w.L_OA;
    return f;
}

ForceTriplet wave_force(const VesselConfig& cfg, const ShipState& state,
                        const EnvironmentSample& env) {
    ForceTriplet f;
    if (env.wave_height <= 0.0) return f;
    const double off_bow = angle_diff(env.wave_from, state.psi);
    if (std::abs(off_bow) > kPi / 4.0) return f;  // outside the head-seas gate
    const auto& h = cfg.hull;
    const double H = env.wave_height;
    f.X = -(1.0 / 16.0) * h.rho * h.g * H * H * h.B * std::sqrt(h.B / h.L_BWL) / 1000.0;
    return f;
}

double hull_resistance(const VesselConfig& cfg, double u) {
    return cfg.hull.resistance(std::abs(u));
}

ForceBreakdown force_breakdown(const VesselConfig& cfg, const ShipState& state,
                               const ControlInput& control, const EnvironmentSample& env) {
    ForceBreakdown fb;
    fb.rudder = rudder_forces(cfg, state, control.delta, control.n);
    fb.thrust = propeller_thrust(cfg, state, control.n);
    const ApparentWind aw = apparent_wind(env.wind_flow, state, env.current);
    fb.wind = wind_forces(cfg, aw);
    fb.wave_x = wave_force(cfg, state, env).X;
    fb.resistance = hull_resistance(cfg, state.u);
    return fb;
}

ForceTriplet sum_forces(const ShipState& state, const ForceBreakdown& fb) {
    ForceTriplet f;
    const double sign_u = (state.u > 0.0) ? 1.0 : (state.u < 0.0 ? -1.0 : 0.0);
    f.X = fb.rudder.X + fb.thrust + fb.wind.X + fb.wave_x - sign_u * fb.resistance;
    f.Y = fb.rudder.Y + fb.wind.Y;
    f.N = fb.rudder.N + fb.wind.N;
    return f;
}

ForceTriplet total_external_forces(const VesselConfig& cfg, const ShipState& state,
                                   const ControlInput& control, const EnvironmentSample& env) {
    return sum_forces(state, force_breakdown(cfg, state, control, env));
}

}  // namespace helmsim
