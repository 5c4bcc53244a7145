// Core domain model for tiered CBRS channel allocation: channel pools,
// CBSDs, per-slot allocation matrices and the GAA interference matrix.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbrs {

using CbsdId = std::int32_t;
using ChannelId = std::int32_t;  // 0-based index into the channel universe

enum class Tier { Pal, Gaa };

const char* to_string(Tier tier);
Tier tier_from_string(const std::string& name);

// Bad runtime input (unknown ids, slot mismatches, malformed states).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad scenario or model configuration detected before/while building a run.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds a hard size guard (exhaustive oracle).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-slot demand: either a constant number of channels or an explicit
// slot -> units map (absent slots count as zero demand).
class DemandSchedule {
 public:
  DemandSchedule() = default;

  static DemandSchedule constant(int units);
  static DemandSchedule per_slot(std::map<int, int> by_slot);

  int at(int slot) const;
  bool is_constant() const { return constant_.has_value(); }
  int constant_value() const;
  const std::map<int, int>& slots() const { return by_slot_; }

  bool operator==(const DemandSchedule&) const = default;

 private:
  std::optional<int> constant_{0};
  std::map<int, int> by_slot_;
};

// One PAL or GAA device. Positions are only needed when the interference
// matrix is derived from a propagation model.
struct Cbsd {
  CbsdId id = 0;
  Tier tier = Tier::Gaa;
  std::optional<std::pair<double, double>> position;
  DemandSchedule demand;
  int arrival = 0;                   // first active slot
  std::optional<int> departure;      // one past the last active slot

  bool active_at(int slot) const {
    return slot >= arrival && (!departure || slot < *departure);
  }
  // Zero outside the active interval.
  int demand_at(int slot) const { return active_at(slot) ? demand.at(slot) : 0; }

  bool operator==(const Cbsd&) const = default;
};

// The channel universe plus the PAL-eligible and GAA-eligible subsets.
// The subsets may overlap (shared channels).
class ChannelPool {
 public:
  ChannelPool() = default;
  ChannelPool(int total, std::set<ChannelId> pal_set, std::set<ChannelId> gaa_set);

  int total() const { return total_; }
  const std::set<ChannelId>& pal_set() const { return pal_set_; }
  const std::set<ChannelId>& gaa_set() const { return gaa_set_; }
  const std::set<ChannelId>& eligible(Tier tier) const {
    return tier == Tier::Pal ? pal_set_ : gaa_set_;
  }
  bool valid_channel(ChannelId s) const { return s >= 0 && s < total_; }
  void check_channel(ChannelId s) const;

  bool operator==(const ChannelPool&) const = default;

 private:
  int total_ = 0;
  std::set<ChannelId> pal_set_;
  std::set<ChannelId> gaa_set_;
};

// Symmetric pairwise received powers between GAAs plus the sharing
// threshold gamma. Construction rejects asymmetry, nonzero diagonals and
// negative entries.
class InterferenceMatrix {
 public:
  InterferenceMatrix() = default;
  // dense is row-major over gaa_ids in the given order.
  InterferenceMatrix(std::vector<CbsdId> gaa_ids, std::vector<double> dense,
                     double gamma);

  double at(CbsdId j, CbsdId jp) const;
  double gamma() const { return gamma_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<CbsdId>& ids() const { return ids_; }
  bool contains(CbsdId id) const;

  bool operator==(const InterferenceMatrix&) const = default;

 private:
  std::size_t index_of(CbsdId id) const;

  std::vector<CbsdId> ids_;       // ascending
  std::vector<double> data_;      // row-major, size() * size()
  double gamma_ = 0.0;
};

// Binary assignment matrix b_k^s for one time slot. Rows exist only for
// CBSDs holding at least one channel; each row remembers its tier so that
// occupancy queries need no external roster.
class AllocationState {
 public:
  struct Row {
    Tier tier = Tier::Gaa;
    std::vector<std::uint8_t> bits;
    bool operator==(const Row&) const = default;
  };

  AllocationState() = default;
  AllocationState(int slot, int num_channels);

  int slot() const { return slot_; }
  int num_channels() const { return num_channels_; }

  bool get(CbsdId k, ChannelId s) const;
  void set(CbsdId k, Tier tier, ChannelId s);
  void clear(CbsdId k, ChannelId s);

  // Row sum for k; zero when k holds nothing.
  int allocated_count(CbsdId k) const;
  // True iff some PAL row has bit s set.
  bool occupied_by_pal(ChannelId s) const;
  std::optional<CbsdId> pal_on(ChannelId s) const;   // lowest id
  int pal_count_on(ChannelId s) const;
  std::vector<CbsdId> gaas_on(ChannelId s) const;    // ascending
  int gaa_count_on(ChannelId s) const;
  std::vector<ChannelId> channels_of(CbsdId k) const;  // ascending

  const std::map<CbsdId, Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  // Assignment content comparison regardless of slot index.
  bool same_assignment(const AllocationState& other) const {
    return rows_ == other.rows_;
  }

  bool operator==(const AllocationState&) const = default;

 private:
  int slot_ = 0;
  int num_channels_ = 0;
  std::map<CbsdId, Row> rows_;
};

// Residual requested units: max(0, demand - allocated_count).
int unmet_demand(const AllocationState& state, CbsdId k, int demand);

// One CBSD-level disruption: active in both slots and it failed to keep as
// many of its previous channels as its current demand allows. Arrivals,
// departures and demand-drop shrinkage do not count.
bool counts_as_move(const std::vector<ChannelId>& prev_channels,
                    const std::vector<ChannelId>& now_channels,
                    int demand_now);

}  // namespace cbrs
