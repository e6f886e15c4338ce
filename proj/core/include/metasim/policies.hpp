#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "metasim/env.hpp"

namespace metasim {

struct PolicyDecision {
  std::vector<AllocationDecision> decisions;  // one per Head
  std::vector<double> donations;              // one per MSP; empty outside cooperative mode
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual PolicyDecision decide(const Environment& env) = 0;
};

struct HeadSolution {
  AllocationDecision decision;
  double immersion = 0.0;
  double cost = 0.0;
  bool meets_threshold = false;
};

// Exhaustive per-Head search over the full admissible grid: cheapest
// allocation meeting the threshold, ties broken lexicographically on
// (bitrate, framerate, beta); the argmax-immersion allocation when no grid
// point reaches the threshold.
HeadSolution solve_head_cheapest(const VRoomProfile& room, const GlobalParams& params,
                                 double head_eps, int clients, double threshold);

// Recognized names: saving, average, max, random, myopic, each optionally
// with a "-gcp" suffix for the credit-pool variant (full-surplus donation,
// automatic pool withdrawal on deficit).
std::unique_ptr<Policy> make_policy(const std::string& name, std::uint64_t seed);

bool is_known_policy(const std::string& name);

}  // namespace metasim
