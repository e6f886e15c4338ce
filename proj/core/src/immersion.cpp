#include "metasim/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metasim {

namespace {

double minmax(double x, double lo, double hi) {
  if (hi == lo) return 1.0;
  return std::clamp((x - lo) / (hi - lo), 0.0, 1.0);
}

}  // namespace

double ssim(double bitrate, double omega, const GlobalParams& params) {
  if (bitrate <= 0.0) throw std::domain_error("ssim: bitrate must be positive");
  const auto& e = params.ssim_coeffs;
  return std::max(e[0], 1.0 - (e[1] + e[2] * omega) * std::pow(bitrate, -(e[3] + e[4] * omega)));
}

double vmaf(double bitrate, double omega, const GlobalParams& params) {
  if (bitrate <= 0.0) throw std::domain_error("vmaf: bitrate must be positive");
  const auto& j = params.vmaf_coeffs;
  return std::min(100.0, j[0] + j[1] * omega + j[2] * bitrate + j[3] * omega * bitrate);
}

QopeResult qope(double bitrate, const VRoomProfile& room, const GlobalParams& params) {
  if (bitrate < room.bitrate_min || bitrate > room.bitrate_max)
    throw std::domain_error("qope: bitrate outside room bounds");
  const auto raw_at = [&](double b) {
    return room.w_sigma * ssim(b, room.omega, params) +
           room.w_eta * (vmaf(b, room.omega, params) / 100.0);
  };
  QopeResult r;
  r.raw = raw_at(bitrate);
  r.normalized = minmax(r.raw, raw_at(room.bitrate_min), raw_at(room.bitrate_max));
  return r;
}

double framerate_norm(double framerate, const VRoomProfile& room) {
  if (framerate < room.framerate_min || framerate > room.framerate_max)
    throw std::domain_error("framerate_norm: framerate outside room bounds");
  return minmax(framerate, room.framerate_min, room.framerate_max);
}

double dt_accuracy(double eps, double beta, double tau) {
  if (eps < 0.0 || eps > 1.0 || beta < 0.0 || beta > 1.0 || tau < 0.0 || tau > 1.0)
    throw std::domain_error("dt_accuracy: arguments must lie in [0,1]");
  if (eps == 0.0 || beta == 0.0 || tau == 0.0) return 0.0;
  return 3.0 / (1.0 / eps + 1.0 / beta + 1.0 / tau);
}

double temporal_accuracy(std::span<const double> update_freqs, double lambda) {
  if (update_freqs.empty()) throw std::domain_error("temporal_accuracy: empty frequency list");
  if (lambda <= 0.0) throw std::domain_error("temporal_accuracy: lambda must be positive");
  double sum = 0.0;
  for (double f : update_freqs) {
    if (f < 0.0) throw std::domain_error("temporal_accuracy: negative frequency");
    sum += 1.0 - std::exp(-lambda * f);
  }
  return sum / static_cast<double>(update_freqs.size());
}

double effective_tau(const VRoomProfile& room, const GlobalParams& params) {
  if (params.tau_fixed) return *params.tau_fixed;
  const double f = room.update_freq;
  return temporal_accuracy(std::span<const double>(&f, 1), params.lambda_temporal);
}

ImmersionBreakdown immersion(const AllocationDecision& decision, double head_eps,
                             const VRoomProfile& room, const GlobalParams& params) {
  if (!decision_admissible(decision, room, params.beta_grid_step))
    throw std::domain_error("immersion: decision outside the admissible grid");
  if (head_eps < room.eps_min || head_eps > room.eps_max)
    throw std::domain_error("immersion: head_eps outside room bounds");

  ImmersionBreakdown b;
  b.ssim = ssim(decision.bitrate, room.omega, params);
  b.vmaf = vmaf(decision.bitrate, room.omega, params);
  const QopeResult q = qope(decision.bitrate, room, params);
  b.qope = q.raw;
  b.qope_norm = q.normalized;
  b.framerate_norm = framerate_norm(decision.framerate, room);

  const double tau = effective_tau(room, params);
  b.dt_accuracy = dt_accuracy(head_eps, decision.beta, tau);
  b.dt_accuracy_norm = minmax(b.dt_accuracy, dt_accuracy(head_eps, room.beta_min, tau),
                              dt_accuracy(head_eps, room.beta_max, tau));

  b.immersion = room.w_q * b.qope_norm + room.w_f * b.framerate_norm +
                room.w_a * b.dt_accuracy_norm;
  return b;
}

}  // namespace metasim
