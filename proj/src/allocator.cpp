#include "cbrs/allocator.hpp"

#include <algorithm>
#include <limits>

namespace cbrs {

int SlotEnvironment::demand_of(CbsdId k) const {
  auto it = demands.find(k);
  if (it == demands.end())
    throw InputError("cbsd " + std::to_string(k) + " is not active at slot " +
                     std::to_string(t));
  return it->second;
}

bool SlotEnvironment::is_active(CbsdId k) const { return demands.count(k) != 0; }

Tier SlotEnvironment::tier_of(CbsdId k) const {
  if (std::binary_search(active_pals.begin(), active_pals.end(), k)) return Tier::Pal;
  if (std::binary_search(active_gaas.begin(), active_gaas.end(), k)) return Tier::Gaa;
  throw InputError("cbsd " + std::to_string(k) + " is not active at slot " +
                   std::to_string(t));
}

TierInput SlotEnvironment::tier_input(Tier tier) const {
  return TierInput{tier == Tier::Pal ? active_pals : active_gaas,
                   pool.eligible(tier), tier};
}

void SlotEnvironment::validate() const {
  if (t < 0) throw InputError("slot index must be non-negative");
  for (ChannelId s : available) pool.check_channel(s);
  auto check_sorted = [](const std::vector<CbsdId>& v, const char* what) {
    if (!std::is_sorted(v.begin(), v.end()) ||
        std::adjacent_find(v.begin(), v.end()) != v.end())
      throw InputError(std::string(what) + " must be strictly ascending");
  };
  check_sorted(active_pals, "active_pals");
  check_sorted(active_gaas, "active_gaas");
  for (CbsdId p : active_pals)
    if (std::binary_search(active_gaas.begin(), active_gaas.end(), p))
      throw InputError("cbsd " + std::to_string(p) + " listed in both tiers");
  std::size_t active_total = active_pals.size() + active_gaas.size();
  if (demands.size() != active_total)
    throw InputError("demands must cover exactly the active CBSDs");
  for (const auto& [k, d] : demands) {
    if (d < 0) throw InputError("demand must be non-negative");
    if (!std::binary_search(active_pals.begin(), active_pals.end(), k) &&
        !std::binary_search(active_gaas.begin(), active_gaas.end(), k))
      throw InputError("demand listed for inactive cbsd " + std::to_string(k));
  }
  for (CbsdId g : active_gaas)
    if (!r.contains(g))
      throw InputError("active GAA " + std::to_string(g) +
                       " missing from the interference matrix");
}

namespace {

// Previous assignments of this tier's members, ascending (channel, cbsd) —
// the retention scan order.
std::vector<std::pair<ChannelId, CbsdId>> prev_pairs(const AllocationState& prev,
                                                     const TierInput& input) {
  std::vector<std::pair<ChannelId, CbsdId>> pairs;
  for (CbsdId k : input.cbsds)
    for (ChannelId s : prev.channels_of(k)) pairs.emplace_back(s, k);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool retention_ok(const SlotEnvironment& env, const AllocationState& scratch,
                  const TierInput& input, CbsdId k, ChannelId s) {
  if (!env.available.count(s) || !input.eligible.count(s)) return false;
  if (input.tier == Tier::Pal) return !scratch.occupied_by_pal(s);
  if (scratch.occupied_by_pal(s)) return false;
  // A kept channel is re-vetted against the incumbents' constraints only in
  // mutual mode; in literal mode an admitted GAA keeps its channel while the
  // grant and PAL occupancy allow, which is what keeps a steady network at a
  // fixed point.
  if (env.feasibility_mode == FeasibilityMode::Mutual)
    return feasible_for_gaa(scratch, k, s, env.r, FeasibilityMode::Mutual);
  return true;
}

}  // namespace

Classification classify(const SlotEnvironment& env, const AllocationState& prev,
                        const TierInput& input, const AllocationState& working) {
  Classification out;
  AllocationState scratch = working;
  std::map<CbsdId, int> retained_count;
  std::vector<std::pair<CbsdId, ChannelId>> lost;  // (cbsd, channel)

  for (const auto& [s, k] : prev_pairs(prev, input)) {
    if (retained_count[k] >= env.demand_of(k)) continue;  // already satisfied
    if (retention_ok(env, scratch, input, k, s)) {
      scratch.set(k, input.tier, s);
      out.allocated.emplace_back(k, s);
      ++retained_count[k];
    } else {
      lost.emplace_back(k, s);
    }
  }

  std::sort(lost.begin(), lost.end());
  out.moved.reserve(lost.size());
  for (const auto& [k, s] : lost) out.moved.push_back(k);

  for (CbsdId k : input.cbsds) {
    auto it = retained_count.find(k);
    const int kept = it == retained_count.end() ? 0 : it->second;
    if (env.demand_of(k) > kept) out.remaining.push_back(k);
  }
  return out;
}

std::optional<ChannelId> msc(const SlotEnvironment& env,
                             const AllocationState& working,
                             const AllocationState& prev, CbsdId k,
                             const TierInput& input) {
  std::optional<ChannelId> best;
  double best_cost = std::numeric_limits<double>::infinity();

  for (ChannelId s : input.eligible) {
    if (!env.available.count(s)) continue;
    if (working.occupied_by_pal(s)) continue;
    if (working.get(k, s)) continue;  // binary assignment: no double grant

    double cost;
    if (input.tier == Tier::Pal) {
      // Least GAAs on the channel in the previous slot, so the fewest get
      // displaced when the PAL takes it.
      cost = static_cast<double>(prev.gaa_count_on(s));
    } else {
      if (!feasible_for_gaa(working, k, s, env.r, env.feasibility_mode)) continue;
      cost = cochannel_interference(working, k, s, env.r);
    }
    if (cost < best_cost) {  // ties resolve to the lowest channel index
      best_cost = cost;
      best = s;
    }
  }
  return best;
}

void tbsa(const SlotEnvironment& env, const AllocationState& prev,
          const TierInput& input, AllocationState& working,
          std::vector<AssignmentRecord>* order) {
  const Classification cls = classify(env, prev, input, working);

  auto record = [&](CbsdId k, ChannelId s, bool retained) {
    if (order) order->push_back({k, s, input.tier, retained});
  };

  for (const auto& [k, s] : cls.allocated) {
    working.set(k, input.tier, s);
    record(k, s, true);
  }

  for (CbsdId k : cls.moved) {
    if (env.unmet(working, k) <= 0) continue;
    if (auto s = msc(env, working, prev, k, input)) {
      working.set(k, input.tier, *s);
      record(k, *s, false);
    }
    // No suitable channel: the unit goes unserved this slot.
  }

  for (CbsdId k : cls.remaining) {
    const int need = env.unmet(working, k);
    for (int i = 0; i < need; ++i) {
      auto s = msc(env, working, prev, k, input);
      if (!s) break;
      working.set(k, input.tier, *s);
      record(k, *s, false);
    }
  }
}

StepResult mtc_step_traced(const SlotEnvironment& env, const AllocationState& prev) {
  env.validate();
  if (!prev.empty() || prev.num_channels() > 0) {
    if (prev.slot() != env.t - 1)
      throw InputError("previous state is for slot " + std::to_string(prev.slot()) +
                       ", expected " + std::to_string(env.t - 1));
    if (prev.num_channels() != env.pool.total())
      throw InputError("previous state channel count differs from pool");
  }

  StepResult result{AllocationState(env.t, env.pool.total()), {}};
  const AllocationState prior =
      prev.num_channels() > 0 ? prev : AllocationState(env.t - 1, env.pool.total());

  tbsa(env, prior, env.tier_input(Tier::Pal), result.state, &result.order);
  tbsa(env, prior, env.tier_input(Tier::Gaa), result.state, &result.order);
  return result;
}

AllocationState mtc_step(const SlotEnvironment& env, const AllocationState& prev) {
  return mtc_step_traced(env, prev).state;
}

}  // namespace cbrs
