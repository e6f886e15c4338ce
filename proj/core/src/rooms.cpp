#include "metasim/rooms.hpp"

#include <cmath>
#include <stdexcept>

namespace metasim {

namespace {

constexpr double kWeightTol = 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string to_string(RoomKind kind) {
  switch (kind) {
    case RoomKind::Library: return "library";
    case RoomKind::Arena: return "arena";
    case RoomKind::Gallery: return "gallery";
  }
  throw std::invalid_argument("unknown room kind");
}

RoomKind room_kind_from_string(const std::string& name) {
  if (name == "library") return RoomKind::Library;
  if (name == "arena") return RoomKind::Arena;
  if (name == "gallery") return RoomKind::Gallery;
  throw std::invalid_argument("unknown room kind: " + name);
}

void VRoomProfile::validate() const {
  require(bitrate_min > 0 && bitrate_min <= bitrate_max, "bitrate bounds");
  require(framerate_min > 0 && framerate_min <= framerate_max, "framerate bounds");
  require(eps_min >= 0.0 && eps_min <= eps_max && eps_max <= 1.0, "eps bounds");
  require(beta_min >= 0.0 && beta_min <= beta_max && beta_max <= 1.0, "beta bounds");
  require(std::abs(w_sigma + w_eta - 1.0) <= kWeightTol, "w_sigma + w_eta must be 1");
  require(std::abs(w_q + w_f + w_a - 1.0) <= kWeightTol, "w_q + w_f + w_a must be 1");
  require(iota >= 0.0 && iota <= 1.0, "iota in [0,1]");
  require(capacity >= 1, "capacity >= 1");
  require(polygons >= 0.0 && objects >= 0.0 && interaction_points >= 0.0, "VE primitives");
  require(sensors >= 0.0 && state_vars >= 0.0 && update_freq >= 0.0, "DT primitives");
  require(arrival_rate >= 0.0 && departure_rate >= 0.0, "traffic rates");
  require(omega >= 0.0, "omega");
}

int VRoomProfile::beta_grid_size(double beta_step) const {
  return static_cast<int>(std::floor((beta_max - beta_min) / beta_step + 1e-9)) + 1;
}

double VRoomProfile::beta_from_index(int index, double beta_step) const {
  return beta_min + index * beta_step;
}

int VRoomProfile::beta_nearest_index(double beta, double beta_step) const {
  const int last = beta_grid_size(beta_step) - 1;
  const int idx = static_cast<int>(std::llround((beta - beta_min) / beta_step));
  return std::max(0, std::min(last, idx));
}

VRoomProfile VRoomProfile::library() {
  VRoomProfile p;
  p.kind = RoomKind::Library;
  p.bitrate_min = 20;
  p.bitrate_max = 25;
  p.framerate_min = 30;
  p.framerate_max = 60;
  p.eps_min = 0.6;
  p.eps_max = 1.0;
  p.beta_min = 0.5;
  p.beta_max = 1.0;
  p.omega = 400.0;
  p.kappa_comp = 1.1;
  p.kappa_net = 0.5;
  p.w_sigma = 0.5;
  p.w_eta = 0.5;
  p.theta_comp = 0.7;
  p.theta_net = 0.9;
  p.lambda_density = 0.8;
  p.iota = 0.6;
  p.polygons = 2e5;
  p.objects = 50.0;
  p.interaction_points = 5.0;
  p.sensors = 50.0;
  p.state_vars = 30.0;
  p.update_freq = 2.0;
  p.capacity = 10;
  p.w_q = 1.0 / 3.0;
  p.w_f = 1.0 / 3.0;
  p.w_a = 1.0 / 3.0;
  p.arrival_rate = 0.4;
  p.departure_rate = 0.7;
  return p;
}

VRoomProfile VRoomProfile::arena() {
  VRoomProfile p = library();
  p.kind = RoomKind::Arena;
  p.bitrate_min = 30;
  p.bitrate_max = 50;
  p.framerate_min = 60;
  p.framerate_max = 120;
  p.eps_min = 0.5;
  p.eps_max = 1.0;
  p.beta_min = 0.5;
  p.beta_max = 1.0;
  p.omega = 720.0;
  p.w_sigma = 0.3;
  p.w_eta = 0.7;
  p.theta_comp = 0.85;
  p.theta_net = 0.85;
  p.lambda_density = 0.8;
  p.iota = 0.5;
  p.polygons = 5e5;
  p.objects = 200.0;
  p.interaction_points = 30.0;
  p.sensors = 200.0;
  p.state_vars = 100.0;
  p.update_freq = 10.0;
  p.capacity = 100;
  return p;
}

VRoomProfile VRoomProfile::gallery() {
  VRoomProfile p = library();
  p.kind = RoomKind::Gallery;
  p.bitrate_min = 25;
  p.bitrate_max = 35;
  p.framerate_min = 30;
  p.framerate_max = 60;
  p.eps_min = 0.8;
  p.eps_max = 1.0;
  p.beta_min = 0.3;
  p.beta_max = 1.0;
  p.omega = 400.0;
  p.w_sigma = 0.7;
  p.w_eta = 0.3;
  p.theta_comp = 0.7;
  p.theta_net = 0.8;
  p.lambda_density = 0.7;
  p.iota = 0.8;
  p.polygons = 3e5;
  p.objects = 20.0;
  p.interaction_points = 15.0;
  p.sensors = 30.0;
  p.state_vars = 20.0;
  p.update_freq = 1.0;
  p.capacity = 10;
  return p;
}

VRoomProfile VRoomProfile::canonical(RoomKind kind) {
  switch (kind) {
    case RoomKind::Library: return library();
    case RoomKind::Arena: return arena();
    case RoomKind::Gallery: return gallery();
  }
  throw std::invalid_argument("unknown room kind");
}

void GlobalParams::validate() const {
  require(k_comp > 0.0 && k_net > 0.0, "unit prices must be positive");
  require(p_max > 0.0 && o_max > 0.0 && a_max > 0.0, "VE ceilings must be positive");
  require(n_max > 0.0 && sv_max > 0.0 && u_max > 0.0, "DT ceilings must be positive");
  require(phi_dt > 0.0, "phi_dt must be positive");
  if (tau_fixed) require(*tau_fixed > 0.0 && *tau_fixed <= 1.0, "tau_fixed in (0,1]");
  require(lambda_temporal > 0.0, "lambda_temporal must be positive");
  require(beta_grid_step > 0.0, "beta_grid_step must be positive");
}

}  // namespace metasim
