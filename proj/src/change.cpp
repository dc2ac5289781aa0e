#include "kmbc/change.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kmbc {

std::string to_string(ChangeOp op) {
  switch (op) {
    case ChangeOp::Contraction: return "contraction";
    case ChangeOp::FullMeetContraction: return "full-meet contraction";
    case ChangeOp::SevereWithdrawal: return "severe withdrawal";
    case ChangeOp::Expansion: return "expansion";
    case ChangeOp::Revision: return "revision";
  }
  return "?";
}

namespace {

void require_p_consistent(const Formula& phi, const ProbDist& dist) {
  if (!p_consistent(phi, dist))
    throw error("belief formula has no possible model under the distribution");
}

ChangeReport make_report(ChangeOp op, WorldSet worlds, KmValue measure, const ProbDist& dist) {
  ChangeReport r;
  r.op = op;
  r.result = formula_of_worlds(worlds, dist.alphabet());
  r.result_worlds = std::move(worlds);
  r.measure = measure;
  return r;
}

KmValue log2_of_ratio(const Rational& num, const Rational& den) {
  if (den == 0) return KmValue::infinity();
  Rational r = num / den;
  if (r == 1) return KmValue::finite(0.0);
  return KmValue::finite(std::log2(r.get_d()));
}

}  // namespace

WorldSet max_mass_worlds(const WorldSet& ws, const ProbDist& dist) {
  WorldSet out(ws.n_letters());
  Rational best = -1;
  for (World w : ws.to_vector()) {
    const Rational& m = dist.mass(w);
    if (m > best) best = m;
  }
  if (best < 0) return out;
  for (World w : ws.to_vector())
    if (dist.mass(w) == best) out.insert(w);
  return out;
}

std::vector<Formula> RemainderSet::formulas(const Alphabet& alphabet) const {
  std::vector<Formula> out;
  if (!principal) {
    out.push_back(formula_of_worlds(base, alphabet));
    return out;
  }
  for (const auto& [w, q] : candidates) {
    (void)q;
    WorldSet s = base;
    s.insert(w);
    out.push_back(formula_of_worlds(s, alphabet));
  }
  return out;
}

std::vector<Formula> possible_remainders(const Formula& phi, const Formula& alpha,
                                         const ProbDist& dist) {
  if (dist.alphabet().size() > 4)
    throw error("possible-remainder enumeration is capped at 4 letters");
  require_p_consistent(phi, dist);

  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_models = models(alpha, dist.alphabet());
  std::vector<Formula> out;

  if (dist.support().is_subset_of(alpha_models)) {  // true P-entails alpha
    out.push_back(formula_of_worlds(phi_plus, dist.alphabet()));
    return out;
  }

  // Candidate world sets S with phi_plus <= S <= support and S not inside
  // the models of alpha; one representative formula per set.
  const std::vector<World> free = (dist.support() - phi_plus).to_vector();
  const std::size_t k = free.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    WorldSet s = phi_plus;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) s.insert(free[b]);
    if (!s.is_subset_of(alpha_models)) out.push_back(formula_of_worlds(s, dist.alphabet()));
  }
  return out;
}

RemainderSet remainders(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  RemainderSet rs;
  rs.base = possible_models(phi, dist);

  const WorldSet alpha_models = models(alpha, dist.alphabet());
  const WorldSet not_alpha_plus = dist.support() - alpha_models;
  const bool phi_entails_alpha = rs.base.is_subset_of(alpha_models);
  rs.principal = phi_entails_alpha && !not_alpha_plus.empty();
  if (!rs.principal) return rs;

  const Rational base_prob = prob(rs.base, dist);
  for (World w : not_alpha_plus.to_vector())
    rs.candidates.emplace_back(w, base_prob + dist.mass(w));
  return rs;
}

ChangeReport contract(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_models = models(alpha, dist.alphabet());

  WorldSet worlds = phi_plus;
  if (phi_plus.is_subset_of(alpha_models))
    worlds = phi_plus | max_mass_worlds(dist.support() - alpha_models, dist);

  KmValue loss = km_of_prob(prob(phi, dist)) - km_of_prob(prob(worlds, dist));
  return make_report(ChangeOp::Contraction, std::move(worlds), loss, dist);
}

ChangeReport full_meet_contract(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_models = models(alpha, dist.alphabet());

  WorldSet worlds = phi_plus;
  if (phi_plus.is_subset_of(alpha_models)) worlds = phi_plus | (dist.support() - alpha_models);

  KmValue loss = km_of_prob(prob(phi, dist)) - km_of_prob(prob(worlds, dist));
  return make_report(ChangeOp::FullMeetContraction, std::move(worlds), loss, dist);
}

Formula expand(const Formula& phi, const Formula& alpha) { return land(phi, alpha); }

ChangeReport expand_report(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  WorldSet worlds = possible_models(expand(phi, alpha), dist);
  KmValue gain = km_of_prob(prob(worlds, dist)) - km_of_prob(prob(phi, dist));
  return make_report(ChangeOp::Expansion, std::move(worlds), gain, dist);
}

ChangeReport revise(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_plus = possible_models(alpha, dist);

  WorldSet worlds = (phi_plus & alpha_plus).empty() ? max_mass_worlds(alpha_plus, dist)
                                                    : phi_plus & alpha_plus;
  KmValue change = km_of_prob(prob(worlds, dist)) - km_of_prob(prob(phi, dist));
  return make_report(ChangeOp::Revision, std::move(worlds), change, dist);
}

SphereSystem spheres(const Formula& phi, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  SphereSystem ss;
  ss.center = possible_models(phi, dist);

  std::map<Rational, WorldSet, std::greater<Rational>> by_mass;
  for (World w : (dist.support() - ss.center).to_vector()) {
    auto [it, inserted] = by_mass.try_emplace(dist.mass(w), dist.alphabet().size());
    it->second.insert(w);
  }
  for (auto& [mass, worlds] : by_mass) ss.annuli.emplace_back(mass, std::move(worlds));
  return ss;
}

WorldSet SphereSystem::sphere(std::size_t i) const {
  WorldSet s = center;
  for (std::size_t k = 0; k < i && k < annuli.size(); ++k) s = s | annuli[k].second;
  return s;
}

WorldSet SphereSystem::smallest_sphere_meeting(const WorldSet& target) const {
  WorldSet s = center;
  if (s.intersects(target)) return s;
  for (const auto& [mass, worlds] : annuli) {
    (void)mass;
    s = s | worlds;
    if (s.intersects(target)) return s;
  }
  throw error("no sphere meets the target world set");
}

ChangeReport severe_withdraw(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet alpha_models = models(alpha, dist.alphabet());
  const WorldSet not_alpha_plus = dist.support() - alpha_models;

  WorldSet worlds = not_alpha_plus.empty()
                        ? possible_models(phi, dist)
                        : spheres(phi, dist).smallest_sphere_meeting(not_alpha_plus);
  KmValue loss = km_of_prob(prob(phi, dist)) - km_of_prob(prob(worlds, dist));
  return make_report(ChangeOp::SevereWithdrawal, std::move(worlds), loss, dist);
}

KmValue contraction_loss_closed_form(const Formula& phi, const Formula& alpha,
                                     const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_models = models(alpha, dist.alphabet());
  if (!phi_plus.is_subset_of(alpha_models)) return KmValue::finite(0.0);

  Rational top = prob(max_mass_worlds(dist.support() - alpha_models, dist), dist);
  return log2_of_ratio(prob(phi, dist) + top, prob(phi, dist));
}

KmValue severe_loss_closed_form(const Formula& phi, const Formula& alpha, const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet not_alpha_plus = dist.support() - models(alpha, dist.alphabet());
  if (not_alpha_plus.empty()) return KmValue::finite(0.0);

  WorldSet sigma = spheres(phi, dist).smallest_sphere_meeting(not_alpha_plus);
  return log2_of_ratio(prob(sigma, dist), prob(phi, dist));
}

KmValue expansion_gain_closed_form(const Formula& phi, const Formula& alpha,
                                   const ProbDist& dist) {
  require_p_consistent(phi, dist);
  Rational joint = prob(expand(phi, alpha), dist);
  if (joint == 0) return KmValue::infinity();
  return log2_of_ratio(prob(phi, dist), joint);
}

KmValue revision_change_closed_form(const Formula& phi, const Formula& alpha,
                                    const ProbDist& dist) {
  require_p_consistent(phi, dist);
  const WorldSet phi_plus = possible_models(phi, dist);
  const WorldSet alpha_plus = possible_models(alpha, dist);
  if (!(phi_plus & alpha_plus).empty()) return expansion_gain_closed_form(phi, alpha, dist);

  Rational denom = prob(max_mass_worlds(alpha_plus, dist), dist);
  if (denom == 0) return KmValue::infinity();
  return log2_of_ratio(prob(phi, dist), denom);
}

}  // namespace kmbc
