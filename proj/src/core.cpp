#include "cbrs/core.hpp"

#include <algorithm>
#include <cmath>

namespace cbrs {

const char* to_string(Tier tier) { return tier == Tier::Pal ? "PAL" : "GAA"; }

Tier tier_from_string(const std::string& name) {
  if (name == "PAL") return Tier::Pal;
  if (name == "GAA") return Tier::Gaa;
  throw InputError("unknown tier '" + name + "' (expected PAL or GAA)");
}

DemandSchedule DemandSchedule::constant(int units) {
  if (units < 0) throw ConfigError("demand must be non-negative");
  DemandSchedule d;
  d.constant_ = units;
  return d;
}

DemandSchedule DemandSchedule::per_slot(std::map<int, int> by_slot) {
  for (const auto& [slot, units] : by_slot) {
    if (slot < 0) throw ConfigError("demand map slot must be non-negative");
    if (units < 0) throw ConfigError("demand must be non-negative");
  }
  DemandSchedule d;
  d.constant_.reset();
  d.by_slot_ = std::move(by_slot);
  return d;
}

int DemandSchedule::at(int slot) const {
  if (constant_) return *constant_;
  auto it = by_slot_.find(slot);
  return it == by_slot_.end() ? 0 : it->second;
}

int DemandSchedule::constant_value() const {
  if (!constant_) throw InputError("demand schedule is not constant");
  return *constant_;
}

ChannelPool::ChannelPool(int total, std::set<ChannelId> pal_set,
                         std::set<ChannelId> gaa_set)
    : total_(total), pal_set_(std::move(pal_set)), gaa_set_(std::move(gaa_set)) {
  if (total_ <= 0) throw ConfigError("channel pool must have at least one channel");
  for (ChannelId s : pal_set_)
    if (s < 0 || s >= total_)
      throw ConfigError("pal_set channel " + std::to_string(s) + " outside pool");
  for (ChannelId s : gaa_set_)
    if (s < 0 || s >= total_)
      throw ConfigError("gaa_set channel " + std::to_string(s) + " outside pool");
}

void ChannelPool::check_channel(ChannelId s) const {
  if (!valid_channel(s))
    throw InputError("channel " + std::to_string(s) + " outside pool of " +
                     std::to_string(total_));
}

InterferenceMatrix::InterferenceMatrix(std::vector<CbsdId> gaa_ids,
                                       std::vector<double> dense, double gamma)
    : ids_(std::move(gaa_ids)), data_(std::move(dense)), gamma_(gamma) {
  const std::size_t n = ids_.size();
  if (data_.size() != n * n)
    throw ConfigError("interference matrix must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  if (gamma_ < 0.0) throw ConfigError("gamma must be non-negative");
  if (!std::is_sorted(ids_.begin(), ids_.end()) ||
      std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw ConfigError("interference matrix ids must be strictly ascending");
  for (std::size_t i = 0; i < n; ++i) {
    if (data_[i * n + i] != 0.0)
      throw ConfigError("interference matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (data_[i * n + j] < 0.0 || !std::isfinite(data_[i * n + j]))
        throw ConfigError("interference entries must be finite and non-negative");
      if (data_[i * n + j] != data_[j * n + i])
        throw ConfigError("interference matrix must be symmetric");
    }
  }
}

std::size_t InterferenceMatrix::index_of(CbsdId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw InputError("cbsd " + std::to_string(id) +
                     " is not a GAA of this interference matrix");
  return static_cast<std::size_t>(it - ids_.begin());
}

double InterferenceMatrix::at(CbsdId j, CbsdId jp) const {
  return data_[index_of(j) * ids_.size() + index_of(jp)];
}

bool InterferenceMatrix::contains(CbsdId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

AllocationState::AllocationState(int slot, int num_channels)
    : slot_(slot), num_channels_(num_channels) {
  if (num_channels_ <= 0) throw InputError("allocation state needs channels");
}

bool AllocationState::get(CbsdId k, ChannelId s) const {
  if (s < 0 || s >= num_channels_)
    throw InputError("channel " + std::to_string(s) + " outside state");
  auto it = rows_.find(k);
  return it != rows_.end() && it->second.bits[static_cast<std::size_t>(s)] != 0;
}

void AllocationState::set(CbsdId k, Tier tier, ChannelId s) {
  if (s < 0 || s >= num_channels_)
    throw InputError("channel " + std::to_string(s) + " outside state");
  auto [it, inserted] = rows_.try_emplace(k);
  if (inserted) {
    it->second.tier = tier;
    it->second.bits.assign(static_cast<std::size_t>(num_channels_), 0);
  } else if (it->second.tier != tier) {
    throw InputError("cbsd " + std::to_string(k) + " already present with other tier");
  }
  it->second.bits[static_cast<std::size_t>(s)] = 1;
}

void AllocationState::clear(CbsdId k, ChannelId s) {
  if (s < 0 || s >= num_channels_)
    throw InputError("channel " + std::to_string(s) + " outside state");
  auto it = rows_.find(k);
  if (it == rows_.end()) return;
  it->second.bits[static_cast<std::size_t>(s)] = 0;
  if (std::all_of(it->second.bits.begin(), it->second.bits.end(),
                  [](std::uint8_t b) { return b == 0; }))
    rows_.erase(it);
}

int AllocationState::allocated_count(CbsdId k) const {
  auto it = rows_.find(k);
  if (it == rows_.end()) return 0;
  int n = 0;
  for (std::uint8_t b : it->second.bits) n += b;
  return n;
}

bool AllocationState::occupied_by_pal(ChannelId s) const {
  if (s < 0 || s >= num_channels_)
    throw InputError("channel " + std::to_string(s) + " outside state");
  for (const auto& [id, row] : rows_)
    if (row.tier == Tier::Pal && row.bits[static_cast<std::size_t>(s)]) return true;
  return false;
}

std::optional<CbsdId> AllocationState::pal_on(ChannelId s) const {
  for (const auto& [id, row] : rows_)
    if (row.tier == Tier::Pal && row.bits[static_cast<std::size_t>(s)]) return id;
  return std::nullopt;
}

int AllocationState::pal_count_on(ChannelId s) const {
  int n = 0;
  for (const auto& [id, row] : rows_)
    if (row.tier == Tier::Pal && row.bits[static_cast<std::size_t>(s)]) ++n;
  return n;
}

std::vector<CbsdId> AllocationState::gaas_on(ChannelId s) const {
  std::vector<CbsdId> out;
  for (const auto& [id, row] : rows_)
    if (row.tier == Tier::Gaa && row.bits[static_cast<std::size_t>(s)])
      out.push_back(id);
  return out;
}

int AllocationState::gaa_count_on(ChannelId s) const {
  int n = 0;
  for (const auto& [id, row] : rows_)
    if (row.tier == Tier::Gaa && row.bits[static_cast<std::size_t>(s)]) ++n;
  return n;
}

std::vector<ChannelId> AllocationState::channels_of(CbsdId k) const {
  std::vector<ChannelId> out;
  auto it = rows_.find(k);
  if (it == rows_.end()) return out;
  for (ChannelId s = 0; s < num_channels_; ++s)
    if (it->second.bits[static_cast<std::size_t>(s)]) out.push_back(s);
  return out;
}

int unmet_demand(const AllocationState& state, CbsdId k, int demand) {
  if (demand < 0) throw InputError("demand must be non-negative");
  return std::max(0, demand - state.allocated_count(k));
}

bool counts_as_move(const std::vector<ChannelId>& prev_channels,
                    const std::vector<ChannelId>& now_channels, int demand_now) {
  // Both vectors ascending. Kept channels must cover what the CBSD could
  // still use of its previous holdings.
  std::size_t kept = 0;
  auto it = now_channels.begin();
  for (ChannelId s : prev_channels) {
    it = std::lower_bound(it, now_channels.end(), s);
    if (it != now_channels.end() && *it == s) {
      ++kept;
      ++it;
    }
  }
  const std::size_t retainable =
      std::min(prev_channels.size(), static_cast<std::size_t>(std::max(0, demand_now)));
  return kept < retainable;
}

}  // namespace cbrs
