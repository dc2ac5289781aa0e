#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kmbc/change.hpp"

namespace kmbc {

enum class Family { Contraction, Severe, Revision, Iterated };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

using ChangeFn = std::function<ChangeReport(const Formula&, const Formula&, const ProbDist&)>;

/// A concrete instance that replays a postulate verdict: the distribution
/// plus the formulas involved, all as re-parseable strings.
struct Witness {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> dist;  // bitstring -> rational
  std::string phi;
  std::string alpha;
  std::string beta;  // empty when unused
  std::string psi;   // empty when unused
  std::string postulate;
  Family family{};

  ProbDist load_dist() const;
};

struct PostulateCheck {
  std::string name;
  /// Informational entries report expected violations (recovery under severe
  /// withdrawal, C2 under iterated revision) and do not affect passed().
  bool informational = false;
  unsigned long long checked = 0;
  unsigned long long failed = 0;
  std::optional<Witness> witness;  // first failing instance, shrunk
};

struct PostulateReport {
  Family family{};
  unsigned letters = 0;
  unsigned long long cases = 0;
  unsigned long long seed = 0;
  std::vector<PostulateCheck> checks;

  bool passed() const;
  const PostulateCheck* find(const std::string& name) const;
};

/// Single-instance checkers. Each evaluates the full postulate list of its
/// family on the given operator and inputs; antecedent-false postulates
/// count as satisfied.
PostulateReport check_contraction(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                                  const Formula& beta, const ProbDist& dist);
PostulateReport check_severe(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                             const Formula& beta, const ProbDist& dist);
PostulateReport check_revision(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                               const Formula& beta, const ProbDist& dist);
/// phi, alpha and psi must all be P-consistent (the framework revises
/// P-satisfiable beliefs only).
PostulateReport check_iterated(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                               const Formula& psi, const ProbDist& dist);

/// Randomised harness: deterministic per seed. Distributions draw integer
/// weights from a small grid; formulas are random world subsets. Failing
/// instances are shrunk (masses zeroed or reduced, worlds dropped from the
/// formulas) before being recorded as witnesses. For the severe family the
/// recovery postulate is evaluated informationally; for the iterated family
/// C2 is informational.
PostulateReport fuzz(Family family, unsigned letters, unsigned long long cases,
                     unsigned long long seed);

/// Re-evaluates the witnessed postulate with the family's operator;
/// returns true when the postulate holds (a faithful witness returns false).
bool replay(const Witness& w);

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PostulateReport& r);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace kmbc
