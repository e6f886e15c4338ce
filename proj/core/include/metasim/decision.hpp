#pragma once

#include "metasim/rooms.hpp"

namespace metasim {

// Control vector for one Head at one timestep.
struct AllocationDecision {
  int bitrate = 0;    // Mbps
  int framerate = 0;  // frames/s
  double beta = 0.0;  // behavioral accuracy, on the room's grid

  friend bool operator==(const AllocationDecision&, const AllocationDecision&) = default;
};

// Clamp an arbitrary continuous triple to the room bounds, round bitrate and
// framerate to the nearest integer and snap beta to the nearest grid point.
AllocationDecision project_decision(double bitrate, double framerate, double beta,
                                    const VRoomProfile& room, double beta_step);

// Map a [0,1]^3 vector affinely onto the admissible grid; 0 selects the room
// minima and 1 the maxima.
AllocationDecision project_unit_decision(double b01, double f01, double beta01,
                                         const VRoomProfile& room, double beta_step);

bool decision_admissible(const AllocationDecision& d, const VRoomProfile& room,
                         double beta_step);

}  // namespace metasim
