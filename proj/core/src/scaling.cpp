#include "metasim/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metasim {

double base_comp_ve(const VRoomProfile& room, const GlobalParams& params) {
  return room.polygons / params.p_max + room.objects / params.o_max +
         room.interaction_points / params.a_max;
}

double base_comp_dt(const VRoomProfile& room, const GlobalParams& params) {
  return room.sensors / params.n_max + room.state_vars / params.sv_max +
         room.update_freq / params.u_max;
}

double base_net_ve(const AllocationDecision& d, const VRoomProfile& room,
                   const GlobalParams& params) {
  if (!params.net_ve_uses_allocated_bitrate) return room.bitrate_min;
  return std::max<double>(d.bitrate, room.bitrate_min);
}

double base_net_dt(const AllocationDecision& d, const VRoomProfile& room,
                   const GlobalParams& params) {
  return params.phi_dt * room.bitrate_min * d.beta;
}

double scale(double base, double framerate, int clients, const VRoomProfile& room,
             double kappa, double theta) {
  if (framerate < room.framerate_min) throw std::domain_error("scale: framerate below room minimum");
  if (clients < 0 || clients > room.capacity) throw std::domain_error("scale: clients outside [0, capacity]");
  if (clients == 0) return 0.0;
  const double frame_term = std::pow(framerate / static_cast<double>(room.framerate_min), kappa);
  const double count_term = std::pow(static_cast<double>(clients), theta);
  const double fill = static_cast<double>(clients) / static_cast<double>(room.capacity);
  const double density_term = 1.0 - room.iota * (1.0 - std::pow(fill, room.lambda_density));
  return base * frame_term * count_term * density_term;
}

ResourceDemand demand(const AllocationDecision& d, int clients, const VRoomProfile& room,
                      const GlobalParams& params) {
  ResourceDemand r;
  r.comp_ve = scale(base_comp_ve(room, params), d.framerate, clients, room,
                    room.kappa_comp, room.theta_comp);
  r.comp_dt = scale(base_comp_dt(room, params), d.framerate, clients, room,
                    room.kappa_comp, room.theta_comp);
  r.net_ve = scale(base_net_ve(d, room, params), d.framerate, clients, room,
                   room.kappa_net, room.theta_net);
  r.net_dt = scale(base_net_dt(d, room, params), d.framerate, clients, room,
                   room.kappa_net, room.theta_net);
  r.total_cost = params.k_comp * (r.comp_ve + r.comp_dt) + params.k_net * (r.net_ve + r.net_dt);
  return r;
}

}  // namespace metasim
