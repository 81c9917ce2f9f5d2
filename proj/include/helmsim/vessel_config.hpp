#pragma once

#include <array>
#include <string>
#include <vector>

#include "helmsim/tables.hpp"

#include "json.hpp"

namespace helmsim {

/// Raw sampled table as it appears in a config file. Angle tables use
/// degrees, resistance tables m/s; values are dimensionless coefficients
/// or kN. Kept verbatim so a written config reloads bit-identically.
struct CurveTable {
    std::vector<std::array<double, 2>> rows;

    bool operator==(const CurveTable&) const = default;
};

struct MassProperties {
    double m = 0.0;    ///< tonnes
    double I_z = 0.0;  ///< tonne*m^2 yaw inertia
    double x_G = 0.0;  ///< m, CG forward of midship origin

    bool operator==(const MassProperties&) const = default;
};

/// Maneuvering coefficients. Units follow the tonne/kN ledger: added-mass
/// terms in tonnes (X_udot, Y_vdot) or tonne*m / tonne*m^2 (Y_rdot, N_vdot,
/// N_rdot); damping terms sized so each product in the motion equations
/// lands in kN or kN*m.
struct HydrodynamicDerivatives {
    double X_udot = 0.0;
    double Y_vdot = 0.0;
    double Y_rdot = 0.0;
    double N_vdot = 0.0;
    double N_rdot = 0.0;

    double Y_v = 0.0;
    double Y_r = 0.0;
    double N_v = 0.0;
    double N_r = 0.0;

    double Y_vv = 0.0;
    double Y_vr = 0.0;
    double Y_rr = 0.0;
    double N_rr = 0.0;
    double N_rrv = 0.0;
    double N_vvr = 0.0;

    double X_vr = 0.0;

    bool operator==(const HydrodynamicDerivatives&) const = default;
};

struct RudderConfig {
    double A_R = 0.0;      ///< m^2 rudder area
    double x_R = 0.0;      ///< m, center of lift (negative aft)
    double a_H = 0.0;      ///< hull interaction factor
    double t_R = 0.0;      ///< thrust reduction factor
    double gamma_R = 0.4;  ///< flow-straightening factor on the local drift
    double k_prop = 1.0;   ///< slipstream augmentation on the inflow speed

    CurveTable C_L_table;  ///< [inflow angle deg, lift coefficient]
    CurveTable C_D_table;  ///< [inflow angle deg, drag coefficient]

    SampledCurve C_L;  ///< rad, clamped; built by finalize_config
    SampledCurve C_D;

    bool operator==(const RudderConfig&) const = default;
};

struct PropellerConfig {
    double D = 0.0;    ///< m diameter
    double t_p = 0.0;  ///< thrust deduction
    double w_p = 0.0;  ///< wake fraction
    std::array<double, 4> k_T{};  ///< thrust coefficient polynomial in J
    std::array<double, 4> k_Q{};  ///< torque coefficient polynomial in J

    bool operator==(const PropellerConfig&) const = default;
};

struct WindageConfig {
    double A_F = 0.0;       ///< m^2 frontal projected area
    double A_L = 0.0;       ///< m^2 lateral projected area
    double L_OA = 0.0;      ///< m length overall
    double rho_air = 1.225; ///< kg/m^3

    // One-sided tables over [0, 180] deg are accepted and mirrored to the
    // full circle: C_X even about head wind, C_Y and C_N odd.
    CurveTable C_X_table;
    CurveTable C_Y_table;
    CurveTable C_N_table;

    SampledCurve C_X;  ///< rad, periodic over [0, 2*pi)
    SampledCurve C_Y;
    SampledCurve C_N;

    bool operator==(const WindageConfig&) const = default;
};

/// Still-water resistance R(u) in kN for u >= 0; quadratic coefficient by
/// default, sampled table when provided.
struct ResistanceModel {
    double quadratic_r2 = 0.0;  ///< kN/(m/s)^2
    CurveTable table;           ///< [u m/s, R kN]; preferred when nonempty

    SampledCurve curve;

    double operator()(double u_abs) const;
    bool operator==(const ResistanceModel&) const = default;
};

struct HullConfig {
    double B = 0.0;        ///< m breadth
    double L_BWL = 0.0;    ///< m bow length on waterline to 95% max beam
    double L_pp = 0.0;     ///< m length between perpendiculars
    double rho = 1025.0;   ///< kg/m^3 sea water
    double g = 9.81;       ///< m/s^2
    ResistanceModel resistance;

    bool operator==(const HullConfig&) const = default;
};

struct VesselConfig {
    MassProperties mass;
    HydrodynamicDerivatives derivatives;
    RudderConfig rudder;
    PropellerConfig propeller;
    WindageConfig windage;
    HullConfig hull;
    double r_max = 0.0314;  ///< rad/s maximum yaw rate (measure normalizer)

    bool operator==(const VesselConfig&) const = default;
};

/// Evaluate a coefficient polynomial c1 + c2*J + c3*J^2 + c4*J^3.
double eval_poly(const std::array<double, 4>& c, double J);

/// Build interpolation curves from the raw tables and validate every
/// invariant. Throws ValidationError naming the first violated field.
void finalize_config(VesselConfig& cfg);

/// Checks only; assumes curves are already built.
void validate_config(const VesselConfig& cfg);

VesselConfig config_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json config_to_json(const VesselConfig& cfg);

/// Load and fully validate a JSON config file.
VesselConfig load_config(const std::string& path);
void write_config(const VesselConfig& cfg, const std::string& path);

}  // namespace helmsim
