#pragma once

#include <utility>
#include <vector>

#include "kmbc/measures.hpp"
#include "kmbc/prob.hpp"

namespace kmbc {

enum class ChangeOp { Contraction, FullMeetContraction, SevereWithdrawal, Expansion, Revision };

std::string to_string(ChangeOp op);

/// Outcome of a belief-change operation. The result formula is always the
/// canonical formula of the result worlds; callers needing a syntactic shape
/// (e.g. expansion's plain conjunction) build it themselves.
struct ChangeReport {
  ChangeOp op{};
  Formula result;
  WorldSet result_worlds;
  /// Information loss L (contraction, withdrawal), gain G (expansion) or
  /// change R (revision). L and G are nonnegative; R may be negative.
  KmValue measure;
};

/// The remainders of phi by alpha. In the principal case (phi P-entails
/// alpha, alpha not P-tautological) there is one remainder per possible
/// counter-world of alpha, with probability P(base) + mass(w); otherwise the
/// set collapses to the single formula describing the possible models of phi.
struct RemainderSet {
  WorldSet base;  // possible models of phi
  bool principal = false;
  std::vector<std::pair<World, Rational>> candidates;

  std::vector<Formula> formulas(const Alphabet& alphabet) const;
};

/// Nested system of spheres centred on the possible models of phi. Annuli
/// partition the remaining possible worlds into equal-mass classes of
/// strictly decreasing mass.
struct SphereSystem {
  WorldSet center;
  std::vector<std::pair<Rational, WorldSet>> annuli;

  /// center plus the first i annuli.
  WorldSet sphere(std::size_t i) const;
  /// Smallest sphere intersecting target; error if no sphere does.
  WorldSet smallest_sphere_meeting(const WorldSet& target) const;
};

/// All maximal-mass worlds of the set (the exact tie set); empty for empty.
WorldSet max_mass_worlds(const WorldSet& ws, const ProbDist& dist);

/// Every inclusion-maximal weakening of phi that avoids P-entailing alpha,
/// one formula per candidate world set. Exhaustive enumeration, capped at
/// 4 letters; the closed-form operators below are the production path.
std::vector<Formula> possible_remainders(const Formula& phi, const Formula& alpha,
                                         const ProbDist& dist);

RemainderSet remainders(const Formula& phi, const Formula& alpha, const ProbDist& dist);

/// Contraction: keeps the possible models of phi and, when phi P-entails
/// alpha, adds all maximal-mass possible counter-worlds of alpha.
ChangeReport contract(const Formula& phi, const Formula& alpha, const ProbDist& dist);

/// Full-meet baseline: adds every possible counter-world of alpha.
ChangeReport full_meet_contract(const Formula& phi, const Formula& alpha, const ProbDist& dist);

/// Expansion is plain conjunction.
Formula expand(const Formula& phi, const Formula& alpha);

/// Expansion with its information gain G = -log2 P(alpha | phi).
ChangeReport expand_report(const Formula& phi, const Formula& alpha, const ProbDist& dist);

/// Revision: the maximal-mass possible models of alpha when phi P-entails
/// ~alpha, the possible models of phi & alpha otherwise. Agrees with
/// contracting ~alpha and conjoining alpha.
ChangeReport revise(const Formula& phi, const Formula& alpha, const ProbDist& dist);

/// Severe withdrawal: the whole smallest sphere meeting the possible
/// counter-worlds of alpha (the possible models of phi when alpha is
/// P-tautological).
ChangeReport severe_withdraw(const Formula& phi, const Formula& alpha, const ProbDist& dist);

SphereSystem spheres(const Formula& phi, const ProbDist& dist);

/// Closed forms for the change measures, computed from exact probability
/// ratios. Each must agree with the definitional measure in the reports.
KmValue contraction_loss_closed_form(const Formula& phi, const Formula& alpha,
                                     const ProbDist& dist);
KmValue severe_loss_closed_form(const Formula& phi, const Formula& alpha, const ProbDist& dist);
KmValue expansion_gain_closed_form(const Formula& phi, const Formula& alpha,
                                   const ProbDist& dist);
KmValue revision_change_closed_form(const Formula& phi, const Formula& alpha,
                                    const ProbDist& dist);

}  // namespace kmbc
