#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kmbc/prob.hpp"
#include "kmbc/rankings.hpp"

namespace kmbc {

/// Text distribution format: the first line lists the alphabet letters, each
/// further line is `<bitstring> <rational-or-decimal>`. Unlisted worlds have
/// mass 0; `#` starts a comment.
ProbDist load_dist_text(std::istream& in);
void save_dist_text(const ProbDist& dist, std::ostream& out);

/// JSON mirror: {"alphabet": [...], "mass": {"10110": "3/20", ...}}.
ProbDist load_dist_json(std::istream& in);
void save_dist_json(const ProbDist& dist, std::ostream& out);

/// Dispatches on the .json extension.
ProbDist load_dist_file(const std::string& path);
void save_dist_file(const ProbDist& dist, const std::string& path);

/// Ranking file: alphabet line, then `<bitstring> <rank>` for every world.
struct RankingFile {
  Alphabet alphabet;
  std::vector<unsigned> ranks;
};
RankingFile load_ranking_text(std::istream& in);
RankingFile load_ranking_file(const std::string& path);

}  // namespace kmbc
