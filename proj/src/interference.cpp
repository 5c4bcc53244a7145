#include "cbrs/interference.hpp"

#include <algorithm>
#include <cmath>

namespace cbrs {

const char* to_string(FeasibilityMode mode) {
  return mode == FeasibilityMode::PaperLiteral ? "literal" : "mutual";
}

FeasibilityMode feasibility_mode_from_string(const std::string& name) {
  if (name == "literal") return FeasibilityMode::PaperLiteral;
  if (name == "mutual") return FeasibilityMode::Mutual;
  throw ConfigError("unknown feasibility mode '" + name +
                    "' (expected literal or mutual)");
}

InterferenceMatrix build_interference_matrix(const std::vector<Cbsd>& gaas,
                                             const PropagationModel& model,
                                             double gamma) {
  if (model.mode != PropagationModel::Mode::PowerLaw)
    throw ConfigError("direct-mode matrices are supplied, not built");
  if (model.tx_power <= 0.0 || model.alpha <= 0.0 || model.min_distance <= 0.0)
    throw ConfigError("power-law model needs positive tx_power, alpha, min_distance");

  std::vector<CbsdId> ids;
  ids.reserve(gaas.size());
  for (const Cbsd& g : gaas) {
    if (g.tier != Tier::Gaa)
      throw ConfigError("interference matrix covers GAAs only");
    if (!g.position)
      throw ConfigError("cbsd " + std::to_string(g.id) +
                        " needs a position for power-law propagation");
    ids.push_back(g.id);
  }
  std::vector<std::size_t> order(gaas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return gaas[a].id < gaas[b].id; });
  std::sort(ids.begin(), ids.end());

  const std::size_t n = gaas.size();
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& pa = *gaas[order[a]].position;
      const auto& pb = *gaas[order[b]].position;
      const double dist = std::hypot(pa.first - pb.first, pa.second - pb.second);
      const double d = std::max(dist, model.min_distance);
      const double power = model.tx_power * std::pow(d, -model.alpha);
      dense[a * n + b] = power;
      dense[b * n + a] = power;
    }
  }
  return InterferenceMatrix(std::move(ids), std::move(dense), gamma);
}

double cochannel_interference(const AllocationState& state, CbsdId k, ChannelId s,
                              const InterferenceMatrix& r) {
  if (s < 0 || s >= state.num_channels())
    throw InputError("channel " + std::to_string(s) + " outside state");
  auto row = state.rows().find(k);
  if (row != state.rows().end() && row->second.tier == Tier::Pal)
    throw InputError("cbsd " + std::to_string(k) + " is a PAL");
  if (!r.contains(k))
    throw InputError("cbsd " + std::to_string(k) +
                     " is not a GAA of this interference matrix");

  double sum = 0.0;
  for (CbsdId other : state.gaas_on(s))
    if (other != k) sum += r.at(k, other);
  return sum;
}

bool feasible_for_gaa(const AllocationState& state, CbsdId k, ChannelId s,
                      const InterferenceMatrix& r, FeasibilityMode mode) {
  if (cochannel_interference(state, k, s, r) > r.gamma()) return false;
  if (mode == FeasibilityMode::Mutual) {
    for (CbsdId other : state.gaas_on(s)) {
      if (other == k) continue;
      if (cochannel_interference(state, other, s, r) + r.at(other, k) > r.gamma())
        return false;
    }
  }
  return true;
}

}  // namespace cbrs
