#pragma once

#include <array>
#include <optional>
#include <string>

namespace metasim {

enum class RoomKind { Library, Arena, Gallery };

std::string to_string(RoomKind kind);
RoomKind room_kind_from_string(const std::string& name);

// Static per-room-type parameters: service bounds, quality weights, scaling
// exponents, VE/DT primitives and traffic rates.
struct VRoomProfile {
  RoomKind kind = RoomKind::Library;

  int bitrate_min = 0;  // Mbps
  int bitrate_max = 0;
  int framerate_min = 0;  // frames/s
  int framerate_max = 0;
  double eps_min = 0.0;  // structural-accuracy bounds, in [0,1]
  double eps_max = 0.0;
  double beta_min = 0.0;  // behavioral-accuracy bounds, in [0,1]
  double beta_max = 0.0;

  double omega = 0.0;       // average client rotation speed, deg/s
  double kappa_comp = 0.0;  // frame-rate scaling exponents
  double kappa_net = 0.0;
  double w_sigma = 0.0;  // SSIM / VMAF priority weights, sum to 1
  double w_eta = 0.0;
  double theta_comp = 0.0;  // user-count scaling exponents
  double theta_net = 0.0;
  double lambda_density = 0.0;  // density exponent
  double iota = 0.0;            // sharing-efficiency factor, in [0,1]

  double polygons = 0.0;  // VE primitives
  double objects = 0.0;
  double interaction_points = 0.0;
  double sensors = 0.0;  // DT primitives
  double state_vars = 0.0;
  double update_freq = 0.0;  // Hz

  int capacity = 1;  // max concurrent clients

  double w_q = 0.0;  // immersion component weights, sum to 1
  double w_f = 0.0;
  double w_a = 0.0;

  double arrival_rate = 0.0;  // Poisson rates, clients/timestep
  double departure_rate = 0.0;

  // Throws std::invalid_argument on an inconsistent parameter set.
  void validate() const;

  // Admissible behavioral-accuracy grid {beta_min, beta_min+step, ...}.
  int beta_grid_size(double beta_step) const;
  double beta_from_index(int index, double beta_step) const;
  int beta_nearest_index(double beta, double beta_step) const;

  static VRoomProfile library();
  static VRoomProfile arena();
  static VRoomProfile gallery();
  static VRoomProfile canonical(RoomKind kind);
};

// System-wide constants shared by every room.
struct GlobalParams {
  std::array<double, 5> ssim_coeffs{0.65, 0.368, 1.23e-3, 0.85, 1.23e-3};
  std::array<double, 4> vmaf_coeffs{36.13, -1.66e-2, 11.62, -6.07e-3};
  double k_comp = 0.01;  // unit prices, currency per resource unit
  double k_net = 0.01;
  double p_max = 1e5;  // VE normalization ceilings
  double o_max = 100.0;
  double a_max = 10.0;
  double n_max = 100.0;  // DT normalization ceilings
  double sv_max = 100.0;
  double u_max = 10.0;
  double phi_dt = 0.1;  // DT network scaling factor
  // Fixed temporal accuracy; when absent, temporal accuracy is derived from
  // the room's DT update frequency via lambda_temporal.
  std::optional<double> tau_fixed = 1.0;
  double lambda_temporal = 0.5;  // accuracy-reduction rate, 1/Hz
  double beta_grid_step = 0.05;
  // When true the VE network term tracks the allocated bitrate instead of
  // the room's fixed minimum.
  bool net_ve_uses_allocated_bitrate = true;

  void validate() const;
};

}  // namespace metasim
