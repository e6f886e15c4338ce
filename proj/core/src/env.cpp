#include "metasim/env.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace metasim {

void RewardConfig::validate() const {
  if (!(i_threshold > 0.0 && i_threshold <= i_max && i_max <= 1.0))
    throw std::invalid_argument("reward: need 0 < i_threshold <= i_max <= 1");
  if (w_imm < 0.0 || w_fin < 0.0) throw std::invalid_argument("reward: negative weight");
}

double phi_efficiency(double immersion, double threshold) {
  if (immersion < threshold) return -1.0;
  if (immersion <= 1.1 * threshold) return 1.5;
  return 0.5 - std::min(0.3, (immersion - threshold) / threshold);
}

bool satisfaction(double immersion, bool request_active, double threshold) {
  return request_active && immersion >= threshold;
}

bool msp_fulfillment(std::span<const bool> z_of_active_heads) {
  if (z_of_active_heads.empty()) return false;
  return std::all_of(z_of_active_heads.begin(), z_of_active_heads.end(),
                     [](bool z) { return z; });
}

int update_clients(int clients, const VRoomProfile& room, Rng& rng) {
  const int arrivals = rng.poisson(room.arrival_rate);
  const int departures = rng.poisson(room.departure_rate);
  return std::clamp(clients + arrivals - departures, 0, room.capacity);
}

double GcpLedger::withdraw_headroom(int msp) const {
  if (!std::isfinite(withdraw_cap_ratio)) return std::numeric_limits<double>::infinity();
  return std::max(0.0, withdraw_cap_ratio * cumulative_deposits[msp] -
                           cumulative_withdrawals[msp]);
}

void EnvConfig::validate() const {
  params.validate();
  reward.validate();
  if (msps.empty()) throw std::invalid_argument("env: no MSPs configured");
  if (heads.empty()) throw std::invalid_argument("env: no Heads configured");
  if (horizon < 1) throw std::invalid_argument("env: horizon must be >= 1");
  if (stuck_cutoff < 1) throw std::invalid_argument("env: stuck_cutoff must be >= 1");
  if (withdraw_cap_ratio < 0.0) throw std::invalid_argument("env: negative withdraw cap");
  for (const MspSpec& m : msps) {
    if (m.initial_budget < 0.0) throw std::invalid_argument("env: negative budget");
    if (m.quota < 0) throw std::invalid_argument("env: negative quota");
  }
  for (const HeadSpec& h : heads) {
    if (h.msp < 0 || h.msp >= static_cast<int>(msps.size()))
      throw std::invalid_argument("env: head references an unknown MSP");
    h.room.validate();
    if (h.eps_head >= 0.0 && (h.eps_head < h.room.eps_min || h.eps_head > h.room.eps_max))
      throw std::invalid_argument("env: eps_head outside room bounds");
    if (h.dt_count < 1) throw std::invalid_argument("env: dt_count must be >= 1");
  }
}

Environment::Environment(EnvConfig config, std::uint64_t seed)
    : config_(std::move(config)), rng_(seed) {
  config_.validate();
  initial_budget_total_ = 0.0;
  for (const MspSpec& m : config_.msps) initial_budget_total_ += m.initial_budget;
  reset();
}

void Environment::reset(std::uint64_t seed) {
  rng_ = Rng(seed);
  reset();
}

void Environment::reset() {
  const int m_count = static_cast<int>(config_.msps.size());
  const int h_count = static_cast<int>(config_.heads.size());

  msps_.assign(m_count, MspState{});
  for (int m = 0; m < m_count; ++m) {
    msps_[m].msp_id = m;
    msps_[m].budget = config_.msps[m].initial_budget;
    msps_[m].initial_budget = config_.msps[m].initial_budget;
    msps_[m].quota = config_.msps[m].quota;
  }

  heads_.assign(h_count, HeadState{});
  for (int h = 0; h < h_count; ++h) {
    const HeadSpec& spec = config_.heads[h];
    HeadState& head = heads_[h];
    head.head_id = h;
    head.msp = spec.msp;
    head.dt_count = spec.dt_count;
    head.eps_head = spec.eps_head >= 0.0 ? spec.eps_head
                                         : 0.5 * (spec.room.eps_min + spec.room.eps_max);
    // Rooms start with a non-zero population in [1, ceil(capacity/2)].
    head.clients = rng_.uniform_int(1, (spec.room.capacity + 1) / 2);
    msps_[spec.msp].head_ids.push_back(h);
  }

  ledger_ = GcpLedger{};
  ledger_.pool = 0.0;
  ledger_.cumulative_deposits.assign(m_count, 0.0);
  ledger_.cumulative_withdrawals.assign(m_count, 0.0);
  ledger_.withdraw_cap_ratio = config_.withdraw_cap_ratio;

  t_ = 0;
  done_ = false;
  stuck_counter_ = 0;
  settled_cost_total_ = 0.0;
  executed_positive_ = 0;
  refresh_request_flags();
}

void Environment::refresh_request_flags() {
  for (HeadState& head : heads_) {
    if (config_.request_mode == RequestMode::AlwaysActive) {
      head.request_active = true;
    } else {
      const MspState& owner = msps_[head.msp];
      head.request_active = owner.completed_count < owner.quota;
    }
  }
}

double Environment::cheapest_cost(int msp) const {
  double cost = 0.0;
  for (int h : msps_[msp].head_ids) {
    if (!heads_[h].request_active) continue;
    const VRoomProfile& room = config_.heads[h].room;
    AllocationDecision d{room.bitrate_min, room.framerate_min, room.beta_min};
    cost += demand(d, heads_[h].clients, room, config_.params).total_cost;
  }
  return cost;
}

bool Environment::stuck_state() const {
  if (config_.request_mode == RequestMode::QuotaDriven) {
    const bool all_quotas_met = std::all_of(
        msps_.begin(), msps_.end(),
        [](const MspState& m) { return m.completed_count >= m.quota; });
    if (all_quotas_met) return true;
  }
  bool any_active = false;
  for (int m = 0; m < num_msps(); ++m) {
    const bool active = std::any_of(
        msps_[m].head_ids.begin(), msps_[m].head_ids.end(),
        [&](int h) { return heads_[h].request_active; });
    if (!active) continue;
    any_active = true;
    double support = 0.0;
    if (config_.cooperative)
      support = std::min(ledger_.pool, ledger_.withdraw_headroom(m));
    if (cheapest_cost(m) <= msps_[m].budget + support) return false;
  }
  return any_active;
}

StepOutcome Environment::step(std::span<const AllocationDecision> decisions,
                              std::span<const double> donation_fractions) {
  if (done_) throw std::logic_error("step: episode already finished");
  if (static_cast<int>(decisions.size()) != num_heads())
    throw std::invalid_argument("step: decision vector length mismatch");
  if (config_.cooperative) {
    if (static_cast<int>(donation_fractions.size()) != num_msps())
      throw std::invalid_argument("step: donation vector length mismatch");
    for (double d : donation_fractions)
      if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("step: donation fraction outside [0,1]");
  } else if (!donation_fractions.empty()) {
    throw std::invalid_argument("step: donations are only accepted in cooperative mode");
  }

  const int m_count = num_msps();
  const int h_count = num_heads();

  StepOutcome out;
  out.t = t_;
  out.heads.assign(h_count, HeadStepRecord{});
  out.msps.assign(m_count, MspStepRecord{});

  // Admissibility is enforced by projection onto the room grids.
  std::vector<AllocationDecision> applied(h_count);
  for (int h = 0; h < h_count; ++h) {
    const VRoomProfile& room = config_.heads[h].room;
    applied[h] = project_decision(decisions[h].bitrate, decisions[h].framerate,
                                  decisions[h].beta, room, config_.params.beta_grid_step);
    out.heads[h].active = heads_[h].request_active;
    out.heads[h].clients = heads_[h].clients;
  }

  // Stage 1: per-MSP cost of serving the active set.
  std::vector<double> cost(m_count, 0.0);
  std::vector<bool> has_active(m_count, false);
  for (int m = 0; m < m_count; ++m) {
    for (int h : msps_[m].head_ids) {
      if (!heads_[h].request_active) continue;
      has_active[m] = true;
      cost[m] += demand(applied[h], heads_[h].clients, config_.heads[h].room,
                        config_.params).total_cost;
    }
  }

  // Stage 2: deficit coverage from the pool, ascending deficit first so the
  // start-of-step credits serve as many MSPs as possible.
  std::vector<bool> serves(m_count, false);
  std::vector<double> withdrawal(m_count, 0.0);
  std::vector<int> deficit_order;
  for (int m = 0; m < m_count; ++m) {
    if (!has_active[m]) continue;
    if (cost[m] <= msps_[m].budget) {
      serves[m] = true;
    } else if (config_.cooperative) {
      deficit_order.push_back(m);
    }
  }
  std::sort(deficit_order.begin(), deficit_order.end(), [&](int a, int b) {
    const double wa = cost[a] - msps_[a].budget;
    const double wb = cost[b] - msps_[b].budget;
    if (wa != wb) return wa < wb;
    return a < b;
  });
  double pool_available = ledger_.pool;
  for (int m : deficit_order) {
    const double deficit = cost[m] - msps_[m].budget;
    if (deficit <= pool_available && deficit <= ledger_.withdraw_headroom(m)) {
      serves[m] = true;
      withdrawal[m] = deficit;
      pool_available -= deficit;
    }
  }

  // Stages 3-5: surpluses, donations, budget updates.
  std::vector<double> donation(m_count, 0.0);
  for (int m = 0; m < m_count; ++m) {
    MspStepRecord& rec = out.msps[m];
    rec.dropped = has_active[m] && !serves[m];
    if (has_active[m] && serves[m]) {
      rec.cost = cost[m];
      rec.withdrawal = withdrawal[m];
      settled_cost_total_ += cost[m];
      msps_[m].completed_count += static_cast<int>(std::count_if(
          msps_[m].head_ids.begin(), msps_[m].head_ids.end(),
          [&](int h) { return heads_[h].request_active; }));
    }
    if (!rec.dropped) {
      const double surplus = std::max(0.0, msps_[m].budget - (serves[m] ? cost[m] : 0.0));
      const double delta = config_.cooperative ? donation_fractions[m] : 0.0;
      donation[m] = delta * surplus;
      rec.donation = donation[m];
      msps_[m].budget = surplus - donation[m];
    }
    rec.budget_after = msps_[m].budget;
  }

  // Stage 6: pool recursion and ledger accounting.
  if (config_.cooperative) {
    double deposits = 0.0;
    double withdrawals = 0.0;
    for (int m = 0; m < m_count; ++m) {
      deposits += donation[m];
      withdrawals += withdrawal[m];
      ledger_.cumulative_deposits[m] += donation[m];
      ledger_.cumulative_withdrawals[m] += withdrawal[m];
    }
    ledger_.pool += deposits - withdrawals;
  }
  out.pool_after = ledger_.pool;

  // Immersion, satisfaction and fulfillment for the served sets.
  for (int m = 0; m < m_count; ++m) {
    std::vector<bool> z_active;
    for (int h : msps_[m].head_ids) {
      HeadStepRecord& rec = out.heads[h];
      if (!rec.active) continue;
      if (serves[m]) {
        rec.executed = true;
        rec.immersion = immersion(applied[h], heads_[h].eps_head, config_.heads[h].room,
                                  config_.params).immersion;
        rec.satisfied = satisfaction(rec.immersion, true, config_.reward.i_threshold);
        if (rec.immersion > 0.0 && rec.immersion <= config_.reward.i_max)
          ++executed_positive_;
      }
      z_active.push_back(rec.satisfied);
      out.sum_phi += phi_efficiency(rec.immersion, config_.reward.i_threshold);
    }
    out.msps[m].fulfilled = msp_fulfillment(z_active);
    if (out.msps[m].fulfilled) ++msps_[m].fulfilled_count;
  }

  // Population dynamics, request regeneration and halting bookkeeping.
  for (HeadState& head : heads_)
    head.clients = update_clients(head.clients, config_.heads[head.head_id].room, rng_);
  ++t_;
  refresh_request_flags();
  if (stuck_state())
    ++stuck_counter_;
  else
    stuck_counter_ = 0;

  out.stuck_halt = stuck_counter_ >= config_.stuck_cutoff;
  out.terminal = t_ >= config_.horizon || out.stuck_halt;
  done_ = out.terminal;

  out.reward = config_.reward.w_imm * out.sum_phi;
  if (out.terminal) out.reward += config_.reward.w_fin * executed_positive_;
  return out;
}

std::vector<double> Environment::observation() const {
  std::vector<double> obs;
  obs.reserve(observation_size());
  for (const MspState& m : msps_)
    obs.push_back(m.initial_budget > 0.0 ? m.budget / m.initial_budget : 0.0);
  for (const MspState& m : msps_)
    obs.push_back(m.quota > 0 ? static_cast<double>(m.fulfilled_count) / m.quota : 0.0);
  for (const HeadState& h : heads_)
    obs.push_back(static_cast<double>(h.clients) / config_.heads[h.head_id].room.capacity);
  for (const HeadState& h : heads_) obs.push_back(h.request_active ? 1.0 : 0.0);
  obs.push_back(static_cast<double>(t_) / config_.horizon);
  if (config_.cooperative) {
    obs.push_back(initial_budget_total_ > 0.0 ? ledger_.pool / initial_budget_total_ : 0.0);
    obs.push_back(static_cast<double>(stuck_counter_) / config_.stuck_cutoff);
  }
  return obs;
}

int Environment::observation_size() const {
  return 2 * num_msps() + 2 * num_heads() + 1 + (config_.cooperative ? 2 : 0);
}

int Environment::action_size() const {
  return 3 * num_heads() + (config_.cooperative ? num_msps() : 0);
}

}  // namespace metasim
