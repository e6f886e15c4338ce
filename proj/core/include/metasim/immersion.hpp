#pragma once

#include <span>

#include "metasim/decision.hpp"
#include "metasim/rooms.hpp"

namespace metasim {

// Per-component quality scores for one Head under one allocation.
struct ImmersionBreakdown {
  double ssim = 0.0;              // [e0, 1)
  double vmaf = 0.0;              // [0, 100]
  double qope = 0.0;              // raw weighted perceptual quality
  double qope_norm = 0.0;         // [0, 1]
  double framerate_norm = 0.0;    // [0, 1]
  double dt_accuracy = 0.0;       // raw harmonic mean
  double dt_accuracy_norm = 0.0;  // [0, 1]
  double immersion = 0.0;         // [0, 1]
};

// Structural-similarity surrogate, floored at e0. Requires bitrate > 0.
double ssim(double bitrate, double omega, const GlobalParams& params);

// Streaming-smoothness surrogate, capped at 100. Requires bitrate > 0.
double vmaf(double bitrate, double omega, const GlobalParams& params);

struct QopeResult {
  double raw = 0.0;
  double normalized = 0.0;
};

// Weighted perceptual quality; VMAF is rescaled to [0,1] before mixing, and
// the normalized value is min-max scaled between the room's bitrate bounds.
QopeResult qope(double bitrate, const VRoomProfile& room, const GlobalParams& params);

// Min-max normalized responsiveness over the room's frame-rate range.
double framerate_norm(double framerate, const VRoomProfile& room);

// Weakest-link DT fidelity: harmonic mean of the three accuracies, zero if
// any component is zero. All arguments must lie in [0,1].
double dt_accuracy(double eps, double beta, double tau);

// Mean saturating freshness over per-DT update frequencies.
double temporal_accuracy(std::span<const double> update_freqs, double lambda);

// Temporal accuracy actually in force: the fixed value when configured,
// otherwise derived from the room's DT update frequency.
double effective_tau(const VRoomProfile& room, const GlobalParams& params);

// Composite immersion score with all intermediate fields populated.
// DT-accuracy normalization spans the controllable beta range with the
// Head's structural accuracy and the temporal accuracy held fixed.
ImmersionBreakdown immersion(const AllocationDecision& decision, double head_eps,
                             const VRoomProfile& room, const GlobalParams& params);

}  // namespace metasim
