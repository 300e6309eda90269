#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pubgoods/errors.hpp"

namespace pubgoods {

// Strict rankings of named alternatives. The order of `alternatives` is the
// policy axis (e.g. low < medium < high spending) against which
// single-peakedness is judged.
struct PreferenceProfile {
  std::vector<std::string> alternatives;
  // rankings[v] lists alternative indices from best to worst.
  std::vector<std::vector<int>> rankings;

  PreferenceProfile(std::vector<std::string> alternatives_,
                    std::vector<std::vector<int>> rankings_);

  static PreferenceProfile fromNames(
      std::vector<std::string> alternatives_,
      const std::vector<std::vector<std::string>>& ranking_names);

  int voterCount() const { return static_cast<int>(rankings.size()); }
  int alternativeCount() const { return static_cast<int>(alternatives.size()); }

  // Position of `alt` in voter v's ranking, 0 = best.
  int rankOf(int voter, int alt) const;
  // Axis position of voter v's top choice.
  int peakOf(int voter) const { return rankings[voter][0]; }
};

struct MajorityMatrix {
  int voters = 0;
  // wins[a][b] = number of voters ranking a above b.
  std::vector<std::vector<int>> wins;

  int alternativeCount() const { return static_cast<int>(wins.size()); }
};

MajorityMatrix pairwiseMatrix(const PreferenceProfile& profile);

// The alternative beating every other by strict majority, if any.
std::optional<int> condorcetWinner(const MajorityMatrix& matrix);

struct CycleWitness {
  bool has_cycle = false;
  // First cycle in DFS order, as alternative indices: cycle[0] beats
  // cycle[1] beats ... beats cycle.back() beats cycle[0].
  std::vector<int> cycle;
};

// Whether the strict-majority tournament has a directed cycle. A pairwise
// tie leaves the tournament undefined and raises TieError.
CycleWitness hasMajorityCycle(const MajorityMatrix& matrix);

struct SinglePeakedness {
  std::vector<bool> per_voter;
  bool overall = false;
};

// A voter is single-peaked when their ranks rise monotonically to the peak
// and fall monotonically after it along the axis order.
SinglePeakedness isSinglePeaked(const PreferenceProfile& profile);

struct MedianVoterResult {
  int alternative = -1;
  int median_voter = -1;  // first voter whose peak is the median position
};

// Median of the voters' peak positions. Requires a single-peaked profile
// (PreconditionError) and an odd electorate (AmbiguityError).
MedianVoterResult medianVoterOutcome(const PreferenceProfile& profile);

}  // namespace pubgoods
