#pragma once

#include <string>

#include "helmsim/types.hpp"

namespace helmsim {

/// Fixed trajectory CSV column order. Forces are the per-source breakdown
/// evaluated at each record's state; R_hull is the resistance magnitude.
inline constexpr const char* kTrajectoryHeader =
    "t,x,y,psi,u,v,r,u_prime,v_prime,delta,n_rps,"
    "X_rud,Y_rud,N_rud,X_thr,X_wind,Y_wind,N_wind,X_wave,R_hull";

/// Write one row per record, 9 significant digits, decimal dot.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Read a trajectory CSV. The full 20-column layout and any header-labelled
/// file carrying at least t,x,y,psi,u,v,r are accepted. Timestamps must be
/// uniformly spaced.
Trajectory read_trajectory_csv(const std::string& path);

/// Controls CSV for batch simulation: header `t_s,rudder_deg,rpm`,
/// zero-order hold between rows.
ControlSeries load_controls_csv(const std::string& path);

}  // namespace helmsim
