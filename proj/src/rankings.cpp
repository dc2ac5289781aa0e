#include "kmbc/rankings.hpp"

#include <algorithm>

namespace kmbc {

FaithfulRanking::FaithfulRanking(Formula phi, Alphabet alphabet, std::vector<unsigned> ranks)
    : phi_(std::move(phi)), alphabet_(std::move(alphabet)), ranks_(std::move(ranks)) {
  if (ranks_.size() != alphabet_.world_count())
    throw error("ranking must assign a rank to each of the " +
                std::to_string(alphabet_.world_count()) + " worlds");

  max_rank_ = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<bool> used(max_rank_ + 1, false);
  for (unsigned r : ranks_) used[r] = true;
  for (unsigned r = 0; r <= max_rank_; ++r)
    if (!used[r]) throw error("ranks must form a contiguous range starting at 0");

  WorldSet phi_models = models(phi_, alphabet_);
  if (phi_models.empty()) throw error("ranking requires a satisfiable formula");
  for (std::size_t w = 0; w < ranks_.size(); ++w) {
    bool is_model = phi_models.contains(static_cast<World>(w));
    if (is_model && ranks_[w] != 0)
      throw error("model " + world_to_bits(static_cast<World>(w), alphabet_) +
                  " must have rank 0");
    if (!is_model && ranks_[w] == 0)
      throw error("non-model " + world_to_bits(static_cast<World>(w), alphabet_) +
                  " must have rank >= 1");
  }
}

FaithfulRanking FaithfulRanking::from_levels(Formula phi, const Alphabet& alphabet,
                                             const std::vector<WorldSet>& levels) {
  std::vector<unsigned> ranks(alphabet.world_count(), 0);
  std::vector<bool> seen(alphabet.world_count(), false);
  for (std::size_t r = 0; r < levels.size(); ++r) {
    if (levels[r].empty()) throw error("preorder level " + std::to_string(r) + " is empty");
    for (World w : levels[r].to_vector()) {
      if (seen[w])
        throw error("world " + world_to_bits(w, alphabet) + " occurs in two preorder levels");
      seen[w] = true;
      ranks[w] = static_cast<unsigned>(r);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw error("preorder must cover every world");
  return FaithfulRanking(std::move(phi), alphabet, std::move(ranks));
}

WorldSet FaithfulRanking::level(unsigned r) const {
  WorldSet out(alphabet_.size());
  for (std::size_t w = 0; w < ranks_.size(); ++w)
    if (ranks_[w] == r) out.insert(static_cast<World>(w));
  return out;
}

ProbDist dist_from_ranking(const FaithfulRanking& r) {
  const unsigned m = r.max_rank() + 1;
  Rational total = 0;
  for (unsigned rk : r.ranks()) total += m - rk;
  std::vector<Rational> mass;
  mass.reserve(r.ranks().size());
  for (unsigned rk : r.ranks()) mass.emplace_back(Rational(m - rk) / total);
  return ProbDist(r.alphabet(), std::move(mass));
}

Formula ranked_contract(const Formula& alpha, const FaithfulRanking& r) {
  for (const std::string& l : letters(alpha))
    if (!r.alphabet().contains(l)) throw error("formula letter '" + l + "' not in alphabet");

  WorldSet counter = models(alpha, r.alphabet()).complement();
  WorldSet result = models(r.phi(), r.alphabet());
  if (!counter.empty()) {
    unsigned best = r.max_rank() + 1;
    for (World w : counter.to_vector()) best = std::min(best, r.rank(w));
    for (World w : counter.to_vector())
      if (r.rank(w) == best) result.insert(w);
  }
  return formula_of_worlds(result, r.alphabet());
}

RepresentationReport representation_check(const FaithfulRanking& r,
                                          const std::vector<Formula>& alphas) {
  RepresentationReport report;
  ProbDist dist = dist_from_ranking(r);
  for (const Formula& alpha : alphas) {
    Formula ranked = ranked_contract(alpha, r);
    ChangeReport km = contract(r.phi(), alpha, dist);
    ++report.checked;
    if (!equivalent(ranked, km.result, r.alphabet()))
      report.mismatches.push_back({alpha, ranked, km.result});
  }
  return report;
}

}  // namespace kmbc
