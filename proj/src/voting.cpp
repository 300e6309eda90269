#include "pubgoods/voting.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace pubgoods {

PreferenceProfile::PreferenceProfile(std::vector<std::string> alternatives_,
                                     std::vector<std::vector<int>> rankings_)
    : alternatives(std::move(alternatives_)), rankings(std::move(rankings_)) {
  if (alternatives.empty()) {
    throw ValidationError("at least one alternative required");
  }
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    for (std::size_t j = i + 1; j < alternatives.size(); ++j) {
      if (alternatives[i] == alternatives[j]) {
        throw ValidationError("alternatives must be distinct");
      }
    }
  }
  if (rankings.empty()) {
    throw ValidationError("at least one voter required");
  }
  const std::size_t k = alternatives.size();
  for (const std::vector<int>& ranking : rankings) {
    if (ranking.size() != k) {
      throw ValidationError("ranking must cover every alternative");
    }
    std::vector<bool> seen(k, false);
    for (int alt : ranking) {
      if (alt < 0 || static_cast<std::size_t>(alt) >= k || seen[alt]) {
        throw ValidationError("ranking must be a permutation of the alternatives");
      }
      seen[alt] = true;
    }
  }
}

PreferenceProfile PreferenceProfile::fromNames(
    std::vector<std::string> alternatives_,
    const std::vector<std::vector<std::string>>& ranking_names) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < alternatives_.size(); ++i) {
    index[alternatives_[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> rankings;
  rankings.reserve(ranking_names.size());
  for (const std::vector<std::string>& names : ranking_names) {
    std::vector<int> ranking;
    ranking.reserve(names.size());
    for (const std::string& name : names) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw ValidationError("ranking names an unknown alternative: " + name);
      }
      ranking.push_back(it->second);
    }
    rankings.push_back(std::move(ranking));
  }
  return PreferenceProfile(std::move(alternatives_), std::move(rankings));
}

int PreferenceProfile::rankOf(int voter, int alt) const {
  const std::vector<int>& ranking = rankings[voter];
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    if (ranking[r] == alt) {
      return static_cast<int>(r);
    }
  }
  throw ValidationError("alternative missing from ranking");
}

MajorityMatrix pairwiseMatrix(const PreferenceProfile& profile) {
  const int k = profile.alternativeCount();
  MajorityMatrix matrix;
  matrix.voters = profile.voterCount();
  matrix.wins.assign(k, std::vector<int>(k, 0));
  for (const std::vector<int>& ranking : profile.rankings) {
    // every alternative beats everything ranked after it
    for (std::size_t r = 0; r < ranking.size(); ++r) {
      for (std::size_t s = r + 1; s < ranking.size(); ++s) {
        ++matrix.wins[ranking[r]][ranking[s]];
      }
    }
  }
  return matrix;
}

std::optional<int> condorcetWinner(const MajorityMatrix& matrix) {
  const int k = matrix.alternativeCount();
  for (int a = 0; a < k; ++a) {
    bool beats_all = true;
    for (int b = 0; b < k && beats_all; ++b) {
      if (b != a && matrix.wins[a][b] <= matrix.wins[b][a]) {
        beats_all = false;
      }
    }
    if (beats_all) {
      return a;
    }
  }
  return std::nullopt;
}

CycleWitness hasMajorityCycle(const MajorityMatrix& matrix) {
  const int k = matrix.alternativeCount();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (matrix.wins[a][b] == matrix.wins[b][a]) {
        throw TieError("pairwise tie: the majority tournament is undefined");
      }
    }
  }

  // DFS in axis order; the first back edge closes the witness cycle.
  enum class Mark { White, Gray, Black };
  std::vector<Mark> mark(k, Mark::White);
  std::vector<int> stack;

  std::function<CycleWitness(int)> visit = [&](int node) -> CycleWitness {
    mark[node] = Mark::Gray;
    stack.push_back(node);
    for (int next = 0; next < k; ++next) {
      if (next == node || matrix.wins[node][next] <= matrix.wins[next][node]) {
        continue;
      }
      if (mark[next] == Mark::Gray) {
        auto start = std::find(stack.begin(), stack.end(), next);
        return CycleWitness{true, std::vector<int>(start, stack.end())};
      }
      if (mark[next] == Mark::White) {
        CycleWitness found = visit(next);
        if (found.has_cycle) {
          return found;
        }
      }
    }
    stack.pop_back();
    mark[node] = Mark::Black;
    return CycleWitness{};
  };

  for (int a = 0; a < k; ++a) {
    if (mark[a] == Mark::White) {
      CycleWitness found = visit(a);
      if (found.has_cycle) {
        return found;
      }
    }
  }
  return CycleWitness{};
}

SinglePeakedness isSinglePeaked(const PreferenceProfile& profile) {
  const int k = profile.alternativeCount();
  SinglePeakedness result;
  result.per_voter.resize(profile.voterCount());
  result.overall = true;
  for (int v = 0; v < profile.voterCount(); ++v) {
    // score = k - rank, so higher is better along the axis
    std::vector<int> score(k);
    for (int alt = 0; alt < k; ++alt) {
      score[alt] = k - profile.rankOf(v, alt);
    }
    const int peak = profile.peakOf(v);
    bool ok = true;
    for (int pos = 0; pos + 1 <= peak; ++pos) {
      ok = ok && score[pos] < score[pos + 1];
    }
    for (int pos = peak; pos + 1 < k; ++pos) {
      ok = ok && score[pos] > score[pos + 1];
    }
    result.per_voter[v] = ok;
    result.overall = result.overall && ok;
  }
  return result;
}

MedianVoterResult medianVoterOutcome(const PreferenceProfile& profile) {
  const SinglePeakedness peaks = isSinglePeaked(profile);
  if (!peaks.overall) {
    throw PreconditionError("profile is not single-peaked on its axis");
  }
  if (profile.voterCount() % 2 == 0) {
    throw AmbiguityError("median voter undefined for an even electorate");
  }
  std::vector<int> positions(profile.voterCount());
  for (int v = 0; v < profile.voterCount(); ++v) {
    positions[v] = profile.peakOf(v);
  }
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  const int median_position = sorted[sorted.size() / 2];

  MedianVoterResult result;
  result.alternative = median_position;
  for (int v = 0; v < profile.voterCount(); ++v) {
    if (positions[v] == median_position) {
      result.median_voter = v;
      break;
    }
  }
  return result;
}

}  // namespace pubgoods
