// GAA pairwise interference: matrix construction from a propagation model
// and the co-channel feasibility / cost expressions used by the allocator.
#pragma once

#include <vector>

#include "cbrs/core.hpp"

namespace cbrs {

// How a GAA's sharing constraint is checked when it joins a channel.
//   PaperLiteral: only the joining GAA's received interference sum.
//   Mutual:       additionally every incumbent co-channel GAA must stay
//                 under gamma after the join.
enum class FeasibilityMode { PaperLiteral, Mutual };

const char* to_string(FeasibilityMode mode);
FeasibilityMode feasibility_mode_from_string(const std::string& name);

struct PropagationModel {
  enum class Mode { Direct, PowerLaw };

  Mode mode = Mode::PowerLaw;
  double tx_power = 1.0;      // PowerLaw only, linear units
  double alpha = 2.0;         // PowerLaw path-loss exponent
  double min_distance = 1.0;  // meters; clamps the near-field singularity

  bool operator==(const PropagationModel&) const = default;
};

// r[j][j'] = tx_power * max(dist(j,j'), min_distance)^(-alpha), zero
// diagonal, symmetric by construction. Direct mode bypasses this (the
// matrix comes verbatim from the scenario).
InterferenceMatrix build_interference_matrix(const std::vector<Cbsd>& gaas,
                                             const PropagationModel& model,
                                             double gamma);

// Sum of r[k][j'] over every other GAA j' currently holding channel s.
double cochannel_interference(const AllocationState& state, CbsdId k, ChannelId s,
                              const InterferenceMatrix& r);

// Whether GAA k may join channel s given the current occupancy.
bool feasible_for_gaa(const AllocationState& state, CbsdId k, ChannelId s,
                      const InterferenceMatrix& r,
                      FeasibilityMode mode = FeasibilityMode::PaperLiteral);

}  // namespace cbrs
