#pragma once

#include <vector>

#include "kmbc/change.hpp"
#include "kmbc/prob.hpp"

namespace kmbc {

/// A total ranking of all worlds with the models of phi exactly at rank 0
/// and ranks forming a contiguous range 0..max. Construction validates
/// faithfulness strictly.
class FaithfulRanking {
 public:
  FaithfulRanking(Formula phi, Alphabet alphabet, std::vector<unsigned> ranks);

  /// Builds the ranking from a total preorder given as its ordered level
  /// sets (most preferred first). The first level must be the models of phi.
  static FaithfulRanking from_levels(Formula phi, const Alphabet& alphabet,
                                     const std::vector<WorldSet>& levels);

  const Formula& phi() const { return phi_; }
  const Alphabet& alphabet() const { return alphabet_; }
  unsigned rank(World w) const { return ranks_.at(w); }
  const std::vector<unsigned>& ranks() const { return ranks_; }
  unsigned max_rank() const { return max_rank_; }
  WorldSet level(unsigned r) const;

 private:
  Formula phi_;
  Alphabet alphabet_;
  std::vector<unsigned> ranks_;
  unsigned max_rank_ = 0;
};

/// A full-support distribution faithful to the ranking: mass strictly
/// decreases with rank and is equal within a rank. World w gets
/// (m - rank(w)) / sum over all w' of (m - rank(w')), with m = 1 + max rank.
ProbDist dist_from_ranking(const FaithfulRanking& r);

/// Contraction induced by the ranking: models of phi plus all minimal-rank
/// counter-models of alpha.
Formula ranked_contract(const Formula& alpha, const FaithfulRanking& r);

struct RepresentationReport {
  struct Mismatch {
    Formula alpha;
    Formula ranked;
    Formula km;
  };
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Checks, for each alpha, that the ranked contraction coincides with the
/// knowledge-measure contraction under dist_from_ranking(r).
RepresentationReport representation_check(const FaithfulRanking& r,
                                          const std::vector<Formula>& alphas);

}  // namespace kmbc
