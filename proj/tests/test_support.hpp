#pragma once

#include <string>

#include "helmsim/vessel_config.hpp"

namespace helmsim::testing {

inline std::string data_path(const std::string& name) {
    return std::string(HELMSIM_DATA_DIR) + "/" + name;
}

/// The shipped synthetic vessel, loaded once.
inline const VesselConfig& shipped_config() {
    static const VesselConfig cfg = load_config(data_path("suzaku_synthetic.json"));
    return cfg;
}

/// A programmatic copy of the shipped vessel that tests can mutate before
/// re-finalizing.
inline VesselConfig base_config() { return shipped_config(); }

/// Ship with every hydrodynamic coefficient, wind coefficient, and
/// resistance zeroed: external forces vanish and the motion reduces to
/// rigid-body kinematics. Useful for exactness tests.
inline VesselConfig inert_config() {
    VesselConfig cfg;
    cfg.mass = {3100.0, 1.24e6, 0.0};
    cfg.derivatives = {};
    cfg.rudder.A_R = 5.8;
    cfg.rudder.x_R = -40.0;
    cfg.rudder.a_H = 0.2;
    cfg.rudder.t_R = 0.2;
    cfg.rudder.gamma_R = 0.4;
    cfg.rudder.k_prop = 1.0;
    cfg.rudder.C_L_table.rows = {{-45.0, 0.0}, {0.0, 0.0}, {45.0, 0.0}};
    cfg.rudder.C_D_table.rows = {{-45.0, 0.0}, {0.0, 0.0}, {45.0, 0.0}};
    cfg.propeller = {3.0, 0.2, 0.2, {0.3, 0.0, 0.0, 0.0}, {0.04, 0.0, 0.0, 0.0}};
    cfg.windage.A_F = 180.0;
    cfg.windage.A_L = 520.0;
    cfg.windage.L_OA = 83.0;
    cfg.windage.C_X_table.rows = {{0.0, 0.0}, {90.0, 0.0}, {180.0, 0.0}};
    cfg.windage.C_Y_table.rows = {{0.0, 0.0}, {90.0, 0.0}, {180.0, 0.0}};
    cfg.windage.C_N_table.rows = {{0.0, 0.0}, {90.0, 0.0}, {180.0, 0.0}};
    cfg.hull.B = 14.0;
    cfg.hull.L_BWL = 20.0;
    cfg.hull.L_pp = 80.0;
    cfg.hull.resistance.quadratic_r2 = 0.0;
    finalize_config(cfg);
    return cfg;
}

}  // namespace helmsim::testing
