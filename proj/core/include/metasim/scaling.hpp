#pragma once

#include "metasim/decision.hpp"
#include "metasim/rooms.hpp"

namespace metasim {

// Scaled per-Head resource requirements and their price.
struct ResourceDemand {
  double comp_ve = 0.0;  // compute units
  double comp_dt = 0.0;
  double net_ve = 0.0;  // network units, Mbps-equivalent
  double net_dt = 0.0;
  double total_cost = 0.0;  // currency
};

// Normalized VE primitives; may exceed 1, the ceilings are soft scales.
double base_comp_ve(const VRoomProfile& room, const GlobalParams& params);

// Normalized DT primitives.
double base_comp_dt(const VRoomProfile& room, const GlobalParams& params);

// VE network base: the allocated bitrate (floored at the room minimum), or
// the room minimum when net_ve_uses_allocated_bitrate is off.
double base_net_ve(const AllocationDecision& d, const VRoomProfile& room,
                   const GlobalParams& params);

// DT network base: phi * room minimum bitrate * behavioral accuracy.
double base_net_dt(const AllocationDecision& d, const VRoomProfile& room,
                   const GlobalParams& params);

// Frame-rate and population scaling applied to a base requirement:
//   base * (f/f_min)^kappa * clients^theta * (1 - iota*(1 - (clients/V)^Lambda))
// Zero clients consume nothing.
double scale(double base, double framerate, int clients, const VRoomProfile& room,
             double kappa, double theta);

// Full scaled demand for one Head plus its monetary cost.
ResourceDemand demand(const AllocationDecision& d, int clients, const VRoomProfile& room,
                      const GlobalParams& params);

}  // namespace metasim
