#include "helmsim/dynamics.hpp"

#include <cmath>
#include <string>

#include "helmsim/errors.hpp"

namespace helmsim {

namespace {

bool finite(const ForceTriplet& f) {
    return std::isfinite(f.X) && std::isfinite(f.Y) && std::isfinite(f.N);
}

void check_breakdown(const ShipState& state, const ForceBreakdown& fb) {
    if (!finite(fb.rudder)) throw SimulationError("non-finite rudder force");
    if (!std::isfinite(fb.thrust)) throw SimulationError("non-finite propeller thrust");
    if (!finite(fb.wind)) throw SimulationError("non-finite wind force");
    if (!std::isfinite(fb.wave_x)) throw SimulationError("non-finite wave force");
    if (!std::isfinite(fb.resistance)) throw SimulationError("non-finite hull resistance");
    if (!std::isfinite(state.u) || !std::isfinite(state.v) || !std::isfinite(state.r)) {
        throw SimulationError("non-finite state");
    }
}

ShipState advance(const ShipState& s, const StateDerivative& d, double h) {
    ShipState out = s;
    out.x += h * d.dx;
    out.y += h * d.dy;
    out.psi += h * d.dpsi;
    out.u += h * d.du;
    out.v += h * d.dv;
    out.r += h * d.dr;
    return out;
}

}  // namespace

std::pair<double, double> ground_velocities(const ShipState& state, Vec2 current) {
    const Vec2 c_body = body_from_earth(state.psi, current);
    return {state.u + c_body.x, state.v + c_body.y};
}

std::pair<double, double> water_velocities(double psi, double u_prime, double v_prime,
                                           Vec2 current) {
    const Vec2 c_body = body_from_earth(psi, current);
    return {u_prime - c_body.x, v_prime - c_body.y};
}

std::array<double, 3> kinematic_rates(const ShipState& state, double u_prime, double v_prime) {
    const double c = std::cos(state.psi);
    const double s = std::sin(state.psi);
    return {u_prime * c - v_prime * s, u_prime * s + v_prime * c, state.r};
}

std::array<double, 3> accelerations(const VesselConfig& cfg, const ShipState& state,
                                    const ForceTriplet& forces) {
    const auto& ms = cfg.mass;
    const auto& d = cfg.derivatives;
    const double u = state.u;
    const double v = state.v;
    const double r = state.r;
    const double U = std::max(std::hypot(u, v), kSpeedEps);

    // Surge is decoupled once v*r and r^2 coupling terms move to the RHS.
    const double du =
        (forces.X - (d.Y_vdot - d.X_vr - ms.m) * v * r - (d.Y_rdot - ms.m * ms.x_G) * r * r) /
        (ms.m - d.X_udot);

    // Velocity-dependent sway/yaw terms, grouped exactly as in the motion
    // equations: linear yaw damping enters as (m*u - Y_r*U)*r and
    // (m*x_G*u - N_r*U)*r, cubic yaw terms carry 1/U.
    const double D_Y = -d.Y_v * U * v + (ms.m * u - d.Y_r * U) * r - d.Y_vv * v * std::abs(v) -
                       d.Y_vr * v * std::abs(r) - d.Y_rr * r * std::abs(r);
    const double D_N = -d.N_v * U * v + (ms.m * ms.x_G * u - d.N_r * U) * r -
                       d.N_rr * r * std::abs(r) - d.N_rrv * r * r * v / U -
                       d.N_vvr * v * v * r / U;

    const double a11 = ms.m - d.Y_vdot;
    const double a12 = ms.m * ms.x_G - d.Y_rdot;
    const double a21 = ms.m * ms.x_G - d.N_vdot;
    const double a22 = ms.I_z - d.N_rdot;
    const double b1 = forces.Y - D_Y;
    const double b2 = forces.N - D_N;

    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) <= kDetEps) {
        throw SimulationError("sway/yaw inertia matrix is singular (det = " +
                              std::to_string(det) + ")");
    }

    // 2x2 elimination with partial pivoting.
    double dv, dr;
    if (std::abs(a11) >= std::abs(a21)) {
        const double f = a21 / a11;
        dr = (b2 - f * b1) / (a22 - f * a12);
        dv = (b1 - a12 * dr) / a11;
    } else {
        const double f = a11 / a21;
        dr = (b1 - f * b2) / (a12 - f * a22);
        dv = (b2 - a22 * dr) / a21;
    }
    return {du, dv, dr};
}

StateDerivative state_derivative(const VesselConfig& cfg, const ShipState& state,
                                 const ControlInput& control, const EnvironmentSample& env) {
    const ForceBreakdown fb = force_breakdown(cfg, state, control, env);
    check_breakdown(state, fb);
    const ForceTriplet total = sum_forces(state, fb);
    const auto [du, dv, dr] = accelerations(cfg, state, total);
    const auto [u_prime, v_prime] = ground_velocities(state, env.current);
    const auto [dx, dy, dpsi] = kinematic_rates(state, u_prime, v_prime);

    StateDerivative out{dx, dy, dpsi, du, dv, dr};
    if (!std::isfinite(out.du) || !std::isfinite(out.dv) || !std::isfinite(out.dr) ||
        !std::isfinite(out.dx) || !std::isfinite(out.dy)) {
        throw SimulationError("non-finite state derivative");
    }
    return out;
}

ShipState step(const VesselConfig& cfg, const ShipState& state, const ControlInput& control,
               const EnvironmentSample& env, double dt) {
    if (!(dt > 0.0)) throw ValidationError("step: dt must be > 0");

    const StateDerivative k1 = state_derivative(cfg, state, control, env);
    const StateDerivative k2 = state_derivative(cfg, advance(state, k1, dt / 2.0), control, env);
    const StateDerivative k3 = state_derivative(cfg, advance(state, k2, dt / 2.0), control, env);
    const StateDerivative k4 = state_derivative(cfg, advance(state, k3, dt), control, env);

    auto combine = [dt](double a, double b, double c, double d) {
        return dt * (a + 2.0 * b + 2.0 * c + d) / 6.0;
    };
    ShipState out = state;
    out.x += combine(k1.dx, k2.dx, k3.dx, k4.dx);
    out.y += combine(k1.dy, k2.dy, k3.dy, k4.dy);
    out.psi = wrap_pi(out.psi + combine(k1.dpsi, k2.dpsi, k3.dpsi, k4.dpsi));
    out.u += combine(k1.du, k2.du, k3.du, k4.du);
    out.v += combine(k1.dv, k2.dv, k3.dv, k4.dv);
    out.r += combine(k1.dr, k2.dr, k3.dr, k4.dr);
    return out;
}

Trajectory simulate(const VesselConfig& cfg, const ShipState& initial,
                    const ControlSeries& controls, const EnvironmentSeries& env, double dt,
                    int n_steps, double t0) {
    if (!(dt > 0.0)) throw ValidationError("simulate: dt must be > 0");
    if (n_steps < 1) throw ValidationError("simulate: n_steps must be >= 1");

    Trajectory traj;
    traj.dt = dt;
    traj.records.reserve(static_cast<std::size_t>(n_steps) + 1);

    ShipState state = initial;
    for (int i = 0; i <= n_steps; ++i) {
        const double t = t0 + i * dt;
        const ControlInput& c = controls.at(t);
        const EnvironmentSample& e = env.at(t);

        SimulationRecord rec;
        rec.t = t;
        rec.state = state;
        rec.control = c;
        try {
            rec.forces = force_breakdown(cfg, state, c, e);
            std::tie(rec.u_prime, rec.v_prime) = ground_velocities(state, e.current);
            traj.records.push_back(rec);
            if (i < n_steps) state = step(cfg, state, c, e, dt);
        } catch (const Error& err) {
            throw SimulationError(std::string(err.what()) + " (at step " + std::to_string(i) +
                                  ", t = " + std::to_string(t) + ")");
        }
    }
    return traj;
}

}  // namespace helmsim
