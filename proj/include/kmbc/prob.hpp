#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kmbc/logic.hpp"

namespace kmbc {

/// Exact rational number. All probability arithmetic in this library is
/// exact; floating point only appears in reported knowledge-measure values.
using Rational = mpq_class;

/// Parses "3/20", "0.35", "1", "-2" into an exact rational.
Rational rational_from_string(const std::string& text);

/// Canonical rendering: "3/20", "0", "1".
std::string rational_to_string(const Rational& q);

/// A probability distribution over all 2^n worlds of an alphabet. Masses are
/// exact nonnegative rationals summing to exactly 1; violations are
/// construction errors, never silently renormalised.
class ProbDist {
 public:
  ProbDist(Alphabet alphabet, std::vector<Rational> mass);

  /// Masses for the listed worlds; every unlisted world gets mass 0.
  static ProbDist from_pairs(const Alphabet& alphabet,
                             const std::vector<std::pair<World, Rational>>& pairs);

  static ProbDist uniform(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  const Rational& mass(World w) const { return mass_.at(w); }
  const std::vector<Rational>& masses() const { return mass_; }

  /// Worlds of non-zero mass.
  const WorldSet& support() const { return support_; }

  bool operator==(const ProbDist& other) const {
    return alphabet_ == other.alphabet_ && mass_ == other.mass_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Rational> mass_;
  WorldSet support_;
};

/// Total mass of a world set.
Rational prob(const WorldSet& ws, const ProbDist& dist);

/// Probability of a formula: the summed mass of its models.
Rational prob(const Formula& f, const ProbDist& dist);

/// Conditional probability P(f | given); error if P(given) = 0.
Rational conditional_prob(const Formula& f, const Formula& given, const ProbDist& dist);

/// Extension of the distribution to a superset alphabet: each world's mass is
/// split uniformly over its extensions.
ProbDist extend(const ProbDist& dist, const Alphabet& to);

/// Marginal distribution on a subset alphabet: each coarse world collects the
/// mass of all its extensions.
ProbDist marginalize(const ProbDist& dist, const Alphabet& to);

/// Disjunction of all zero-mass worlds (false when the support is full).
Formula p_zero_formula(const ProbDist& dist);

/// Models of f that carry non-zero mass.
WorldSet possible_models(const Formula& f, const ProbDist& dist);

/// f P-entails g: every non-zero-mass model of f is a model of g.
bool p_entails(const Formula& f, const Formula& g, const ProbDist& dist);
bool p_strictly_entails(const Formula& f, const Formula& g, const ProbDist& dist);
bool p_equivalent(const Formula& f, const Formula& g, const ProbDist& dist);
bool p_consistent(const Formula& f, const ProbDist& dist);

/// Exact test P(f & g) == P(f) * P(g).
bool p_independent(const Formula& f, const Formula& g, const ProbDist& dist);

}  // namespace kmbc
