#pragma once

// Independent oracles for the belief-change operators. Everything here works
// on plain world masks with integer weights, so the expected values are
// derived by brute-force enumeration rather than through the library's
// closed-form paths.

#include <cstdint>
#include <vector>

#include "kmbc/change.hpp"
#include "kmbc/prob.hpp"

namespace kmbc::test {

/// Brute-force world universe: n letters, one integer weight per world
/// (mass = weight / total). Formulas are model masks (bit w = world w).
struct MaskUniverse {
  std::size_t n_letters;
  std::vector<unsigned> weights;

  std::size_t n_worlds() const { return std::size_t{1} << n_letters; }

  std::uint32_t full_mask() const {
    return n_worlds() >= 32 ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << n_worlds()) - 1;
  }

  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (std::size_t w = 0; w < weights.size(); ++w)
      if (weights[w] > 0) m |= std::uint32_t{1} << w;
    return m;
  }

  unsigned long weight_of(std::uint32_t mask) const {
    unsigned long total = 0;
    for (std::size_t w = 0; w < weights.size(); ++w)
      if ((mask >> w) & 1u) total += weights[w];
    return total;
  }

  ProbDist dist(const Alphabet& a) const {
    unsigned long total = weight_of(full_mask());
    std::vector<Rational> mass;
    mass.reserve(weights.size());
    for (unsigned w : weights) mass.emplace_back(Rational(w, total));
    return ProbDist(a, std::move(mass));
  }
};

inline std::uint32_t ws_to_mask(const WorldSet& s) {
  std::uint32_t m = 0;
  for (World w : s.to_vector()) m |= std::uint32_t{1} << w;
  return m;
}

/// All remainder masks of phi by alpha: the inclusion-minimal sets S with
/// possible-models(phi) <= S <= support and S not inside the models of
/// alpha; when no candidate exists the possible models of phi themselves.
/// Derived by enumerating every candidate and testing single-element
/// removals for minimality.
inline std::vector<std::uint32_t> remainder_masks_oracle(const MaskUniverse& u,
                                                         std::uint32_t phi_mask,
                                                         std::uint32_t alpha_mask) {
  const std::uint32_t supp = u.support();
  const std::uint32_t phi_plus = phi_mask & supp;

  std::vector<std::uint32_t> qualifying;
  std::vector<std::uint32_t> free;
  for (std::size_t w = 0; w < u.n_worlds(); ++w) {
    std::uint32_t bit = std::uint32_t{1} << w;
    if ((supp & bit) && !(phi_plus & bit)) free.push_back(bit);
  }
  for (std::uint32_t sub = 0;; ++sub) {
    std::uint32_t s = phi_plus;
    for (std::size_t b = 0; b < free.size(); ++b)
      if ((sub >> b) & 1u) s |= free[b];
    if ((s & ~alpha_mask) != 0) qualifying.push_back(s);
    if (sub + 1 >= (std::uint32_t{1} << free.size())) break;
  }
  if (qualifying.empty()) return {phi_plus};

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s : qualifying) {
    bool is_minimal = true;
    for (std::size_t w = 0; w < u.n_worlds() && is_minimal; ++w) {
      std::uint32_t bit = std::uint32_t{1} << w;
      if ((s & bit) && !(phi_plus & bit) && (((s & ~bit) & ~alpha_mask) != 0)) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(s);
  }
  return minimal;
}

/// Contraction by enumeration: the union of the maximal-weight remainders.
inline std::uint32_t contract_oracle(const MaskUniverse& u, std::uint32_t phi_mask,
                                     std::uint32_t alpha_mask) {
  std::vector<std::uint32_t> rem = remainder_masks_oracle(u, phi_mask, alpha_mask);
  unsigned long best = 0;
  for (std::uint32_t s : rem) best = std::max(best, u.weight_of(s));
  std::uint32_t out = 0;
  for (std::uint32_t s : rem)
    if (u.weight_of(s) == best) out |= s;
  return out;
}

/// Full-meet contraction by enumeration: the union of all remainders.
inline std::uint32_t full_meet_oracle(const MaskUniverse& u, std::uint32_t phi_mask,
                                      std::uint32_t alpha_mask) {
  std::uint32_t out = 0;
  for (std::uint32_t s : remainder_masks_oracle(u, phi_mask, alpha_mask)) out |= s;
  return out;
}

/// Mask transliteration of the closed-form contraction, used as the inner
/// operator of the definitional severe-withdrawal oracle below. Its own
/// agreement with the library is established by contract_oracle sweeps.
inline std::uint32_t contract_mask(const MaskUniverse& u, std::uint32_t phi_mask,
                                   std::uint32_t alpha_mask) {
  const std::uint32_t supp = u.support();
  const std::uint32_t phi_plus = phi_mask & supp;
  const std::uint32_t counter = supp & ~alpha_mask;
  if ((phi_plus & ~alpha_mask) != 0) return phi_plus;
  if (counter == 0) return phi_plus;
  unsigned best = 0;
  for (std::size_t w = 0; w < u.n_worlds(); ++w)
    if ((counter >> w) & 1u) best = std::max(best, u.weights[w]);
  std::uint32_t minset = 0;
  for (std::size_t w = 0; w < u.n_worlds(); ++w)
    if (((counter >> w) & 1u) && u.weights[w] == best) minset |= std::uint32_t{1} << w;
  return phi_plus | minset;
}

/// Severe withdrawal by its definition: the conjunction (mask intersection)
/// of every beta whose contraction of alpha & beta still entails beta,
/// quantifying beta over all world subsets.
inline std::uint32_t severe_oracle(const MaskUniverse& u, std::uint32_t phi_mask,
                                   std::uint32_t alpha_mask) {
  const std::uint32_t supp = u.support();
  const std::uint32_t phi_plus = phi_mask & supp;
  if ((supp & ~alpha_mask) == 0) return phi_plus;  // alpha is P-tautological

  std::uint32_t out = u.full_mask();
  for (std::uint32_t beta = 0;; ++beta) {
    std::uint32_t contracted = contract_mask(u, phi_mask, alpha_mask & beta);
    if ((contracted & ~beta) == 0) out &= beta;
    if (beta == u.full_mask()) break;
  }
  return out;
}

}  // namespace kmbc::test
