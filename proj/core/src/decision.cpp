#include "metasim/decision.hpp"

#include <algorithm>
#include <cmath>

namespace metasim {

namespace {

int clamp_round(double x, int lo, int hi) {
  const int r = static_cast<int>(std::llround(x));
  return std::max(lo, std::min(hi, r));
}

}  // namespace

AllocationDecision project_decision(double bitrate, double framerate, double beta,
                                    const VRoomProfile& room, double beta_step) {
  AllocationDecision d;
  d.bitrate = clamp_round(bitrate, room.bitrate_min, room.bitrate_max);
  d.framerate = clamp_round(framerate, room.framerate_min, room.framerate_max);
  d.beta = room.beta_from_index(room.beta_nearest_index(beta, beta_step), beta_step);
  return d;
}

AllocationDecision project_unit_decision(double b01, double f01, double beta01,
                                         const VRoomProfile& room, double beta_step) {
  const auto unit = [](double x) { return std::max(0.0, std::min(1.0, x)); };
  AllocationDecision d;
  d.bitrate = room.bitrate_min +
              static_cast<int>(std::llround(unit(b01) * (room.bitrate_max - room.bitrate_min)));
  d.framerate =
      room.framerate_min +
      static_cast<int>(std::llround(unit(f01) * (room.framerate_max - room.framerate_min)));
  const int last = room.beta_grid_size(beta_step) - 1;
  const int idx = static_cast<int>(std::llround(unit(beta01) * last));
  d.beta = room.beta_from_index(idx, beta_step);
  return d;
}

bool decision_admissible(const AllocationDecision& d, const VRoomProfile& room,
                         double beta_step) {
  if (d.bitrate < room.bitrate_min || d.bitrate > room.bitrate_max) return false;
  if (d.framerate < room.framerate_min || d.framerate > room.framerate_max) return false;
  const int idx = room.beta_nearest_index(d.beta, beta_step);
  return std::abs(room.beta_from_index(idx, beta_step) - d.beta) <= 1e-9;
}

}  // namespace metasim
