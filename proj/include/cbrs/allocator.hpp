// Per-slot channel allocation: a tier-sequential pass (PALs first, then
// GAAs) that keeps each CBSD on its previous channel whenever conditions
// allow, and otherwise picks the least-loaded / least-interfered channel.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cbrs/core.hpp"
#include "cbrs/interference.hpp"

namespace cbrs {

// One tier's slice of the allocation problem: which devices to place and
// which channels they may use.
struct TierInput {
  std::vector<CbsdId> cbsds;      // ascending id
  std::set<ChannelId> eligible;
  Tier tier = Tier::Gaa;
};

// Everything the allocator needs to know about one time slot.
struct SlotEnvironment {
  int t = 0;
  std::set<ChannelId> available;             // SAS grant for this slot
  std::vector<CbsdId> active_pals;           // ascending id
  std::vector<CbsdId> active_gaas;           // ascending id
  std::map<CbsdId, int> demands;             // active CBSDs only
  std::map<CbsdId, Cbsd> roster;             // all declared CBSDs, active or not
  InterferenceMatrix r;
  ChannelPool pool;
  FeasibilityMode feasibility_mode = FeasibilityMode::PaperLiteral;

  int demand_of(CbsdId k) const;             // InputError for unknown k
  bool is_active(CbsdId k) const;
  Tier tier_of(CbsdId k) const;              // InputError for unknown k
  TierInput tier_input(Tier tier) const;
  int unmet(const AllocationState& state, CbsdId k) const {
    return unmet_demand(state, k, demand_of(k));
  }
  // Structural sanity: sorted active lists, demands matching actives,
  // availability within the pool, GAAs covered by the matrix.
  void validate() const;
};

// Retention outcome for one tier in one slot.
//   allocated: (cbsd, channel) pairs carried over from the previous slot.
//   moved:     one entry per previous assignment that could not be kept,
//              ascending (cbsd, channel).
//   remaining: tier members with unmet demand after retention, ascending.
struct Classification {
  std::vector<std::pair<CbsdId, ChannelId>> allocated;
  std::vector<CbsdId> moved;
  std::vector<CbsdId> remaining;
};

// Chronological record of one write into the slot's state.
struct AssignmentRecord {
  CbsdId cbsd = 0;
  ChannelId channel = 0;
  Tier tier = Tier::Gaa;
  bool retained = false;

  bool operator==(const AssignmentRecord&) const = default;
};

struct StepResult {
  AllocationState state;
  std::vector<AssignmentRecord> order;  // for replay validation and traces
};

// Split the tier members into Allocated / Moved / Remaining against the
// previous slot. `working` is the in-progress slot state (all-zero for the
// PAL pass, PAL-filled for the GAA pass); it is not modified.
Classification classify(const SlotEnvironment& env, const AllocationState& prev,
                        const TierInput& input, const AllocationState& working);

// Pick the most suitable channel for k, or nothing when no eligible
// available channel works. PALs prefer the channel with the fewest GAAs in
// the previous slot; GAAs the feasible channel with the least co-channel
// interference. Ties break to the lowest channel index.
std::optional<ChannelId> msc(const SlotEnvironment& env,
                             const AllocationState& working,
                             const AllocationState& prev, CbsdId k,
                             const TierInput& input);

// Run one tier's allocation into `working`: write retentions, then place
// moved CBSDs, then fill remaining demand.
void tbsa(const SlotEnvironment& env, const AllocationState& prev,
          const TierInput& input, AllocationState& working,
          std::vector<AssignmentRecord>* order = nullptr);

// One full slot: PAL pass, then GAA pass against the PAL-updated state.
// prev.slot() must be env.t - 1 (use an empty state for the first slot).
AllocationState mtc_step(const SlotEnvironment& env, const AllocationState& prev);
StepResult mtc_step_traced(const SlotEnvironment& env, const AllocationState& prev);

}  // namespace cbrs
