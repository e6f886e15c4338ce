#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "metasim/decision.hpp"
#include "metasim/immersion.hpp"
#include "metasim/rng.hpp"
#include "metasim/rooms.hpp"
#include "metasim/scaling.hpp"

namespace metasim {

// Reward shaping: immersion threshold, cap and term weights.
struct RewardConfig {
  double i_threshold = 0.85;
  double i_max = 1.0;
  double w_imm = 1.0;
  double w_fin = 2.0;

  void validate() const;
};

// Piece-wise efficiency score of one served request: full marks inside a 10%
// band above the threshold, decreasing credit for over-allocation, a penalty
// below the threshold.
double phi_efficiency(double immersion, double threshold);

// Head-level satisfaction indicator z.
bool satisfaction(double immersion, bool request_active, double threshold);

// All-or-nothing MSP indicator L: true iff the active set is non-empty and
// every active Head is satisfied.
bool msp_fulfillment(std::span<const bool> z_of_active_heads);

// Double-Poisson population update, clamped to [0, capacity].
int update_clients(int clients, const VRoomProfile& room, Rng& rng);

enum class RequestMode {
  QuotaDriven,   // Heads post requests until the owning MSP's quota of
                 // completed requests is reached
  AlwaysActive,  // every Head posts a request at every timestep
};

struct MspSpec {
  double initial_budget = 150.0;
  int quota = 50;
};

struct HeadSpec {
  int msp = 0;
  VRoomProfile room;
  double eps_head = -1.0;  // negative selects the midpoint of [eps_min, eps_max]
  int dt_count = 1;
};

struct EnvConfig {
  GlobalParams params;
  std::vector<MspSpec> msps;
  std::vector<HeadSpec> heads;
  int horizon = 100;
  RewardConfig reward;
  bool cooperative = false;
  double withdraw_cap_ratio = std::numeric_limits<double>::infinity();
  int stuck_cutoff = 10;
  RequestMode request_mode = RequestMode::QuotaDriven;

  void validate() const;
};

// Dynamic state of one Head.
struct HeadState {
  int head_id = 0;
  int msp = 0;
  int clients = 0;
  double eps_head = 0.0;
  bool request_active = false;
  int dt_count = 1;
};

// Dynamic state of one provider.
struct MspState {
  int msp_id = 0;
  double budget = 0.0;
  double initial_budget = 0.0;
  int quota = 0;
  int fulfilled_count = 0;  // all-or-nothing step successes (sum of L)
  int completed_count = 0;  // executed Head-level requests
  std::vector<int> head_ids;
};

// Shared credit pool with per-MSP deposit/withdraw accounting.
struct GcpLedger {
  double pool = 0.0;
  std::vector<double> cumulative_deposits;
  std::vector<double> cumulative_withdrawals;
  double withdraw_cap_ratio = std::numeric_limits<double>::infinity();

  // Largest additional withdrawal the per-MSP cap still allows.
  double withdraw_headroom(int msp) const;
};

struct HeadStepRecord {
  bool active = false;
  bool executed = false;   // request served (owning MSP not dropped)
  double immersion = 0.0;  // zero when not executed
  bool satisfied = false;  // z
  int clients = 0;         // population at service time
};

struct MspStepRecord {
  bool fulfilled = false;  // L
  bool dropped = false;
  double cost = 0.0;        // settled cost, zero when dropped
  double donation = 0.0;    // D
  double withdrawal = 0.0;  // W
  double budget_after = 0.0;
};

struct StepOutcome {
  int t = 0;  // step index starting at 0
  std::vector<HeadStepRecord> heads;
  std::vector<MspStepRecord> msps;
  double pool_after = 0.0;
  double sum_phi = 0.0;
  double reward = 0.0;
  bool terminal = false;
  bool stuck_halt = false;
};

// Discrete-time episode engine covering both the independent-budget and the
// shared-credit-pool settings. One instance owns its RNG and is
// single-threaded; instances are independent.
class Environment {
 public:
  Environment(EnvConfig config, std::uint64_t seed);

  // Start a new episode; the RNG stream continues across episodes.
  void reset();
  // Start a new episode from a fresh seed.
  void reset(std::uint64_t seed);

  // Advance one timestep. `decisions` holds one entry per Head (projected
  // onto the admissible grid by the caller or via project_* helpers);
  // `donation_fractions` holds one entry per MSP and is only accepted in
  // cooperative mode.
  StepOutcome step(std::span<const AllocationDecision> decisions,
                   std::span<const double> donation_fractions = {});

  std::vector<double> observation() const;
  int observation_size() const;
  // Flat action dimension: 3 per Head, plus 1 per MSP in cooperative mode.
  int action_size() const;

  int num_heads() const { return static_cast<int>(heads_.size()); }
  int num_msps() const { return static_cast<int>(msps_.size()); }
  int timestep() const { return t_; }
  bool done() const { return done_; }
  double threshold() const { return config_.reward.i_threshold; }

  const EnvConfig& config() const { return config_; }
  const std::vector<HeadState>& heads() const { return heads_; }
  const std::vector<MspState>& msps() const { return msps_; }
  const VRoomProfile& room(int head) const { return config_.heads[head].room; }
  const GcpLedger& ledger() const { return ledger_; }

  int stuck_counter() const { return stuck_counter_; }
  double total_settled_cost() const { return settled_cost_total_; }
  double initial_budget_total() const { return initial_budget_total_; }
  // Episode count of executed requests with immersion in (0, i_max].
  int executed_positive_count() const { return executed_positive_; }

 private:
  void refresh_request_flags();
  bool stuck_state() const;
  double cheapest_cost(int msp) const;

  EnvConfig config_;
  Rng rng_;
  std::vector<HeadState> heads_;
  std::vector<MspState> msps_;
  GcpLedger ledger_;
  int t_ = 0;
  bool done_ = false;
  int stuck_counter_ = 0;
  double settled_cost_total_ = 0.0;
  double initial_budget_total_ = 0.0;
  int executed_positive_ = 0;
};

}  // namespace metasim
