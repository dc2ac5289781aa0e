#include "kmbc/postulates.hpp"

#include <algorithm>
#include <random>

namespace kmbc {

std::string to_string(Family f) {
  switch (f) {
    case Family::Contraction: return "contraction";
    case Family::Severe: return "severe";
    case Family::Revision: return "revision";
    case Family::Iterated: return "iterated";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "contraction") return Family::Contraction;
  if (name == "severe") return Family::Severe;
  if (name == "revision") return Family::Revision;
  if (name == "iterated") return Family::Iterated;
  throw error("unknown postulate family '" + name + "'");
}

ProbDist Witness::load_dist() const {
  Alphabet a(alphabet);
  std::vector<std::pair<World, Rational>> pairs;
  for (const auto& [bits, q] : dist) pairs.emplace_back(world_from_bits(bits, a), rational_from_string(q));
  return ProbDist::from_pairs(a, pairs);
}

bool PostulateReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PostulateCheck& c) { return c.informational || c.failed == 0; });
}

const PostulateCheck* PostulateReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

using Verdicts = std::vector<std::pair<std::string, bool>>;

// P-equivalent variants of alpha obtained by toggling zero-mass models, so
// extensionality is exercised non-vacuously under every distribution.
std::vector<Formula> equivalent_variants(const Formula& alpha, const ProbDist& dist) {
  const Alphabet& ab = dist.alphabet();
  WorldSet plus = possible_models(alpha, dist);
  WorldSet with_all_zero = plus | dist.support().complement();
  return {formula_of_worlds(plus, ab), formula_of_worlds(with_all_zero, ab)};
}

Verdicts eval_contraction(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                          const Formula& beta, const ProbDist& dist) {
  const Formula r_a = op(phi, alpha, dist).result;
  const Formula r_b = op(phi, beta, dist).result;
  const Formula ab = land(alpha, beta);
  const Formula r_ab = op(phi, ab, dist).result;

  bool extensionality = true;
  for (const Formula& v : equivalent_variants(alpha, dist))
    extensionality = extensionality && p_equivalent(r_a, op(phi, v, dist).result, dist);
  if (p_equivalent(alpha, beta, dist))
    extensionality = extensionality && p_equivalent(r_a, r_b, dist);

  Verdicts v;
  v.emplace_back("(-1) inclusion", p_entails(phi, r_a, dist));
  v.emplace_back("(-2) vacuity", p_entails(phi, alpha, dist) || p_equivalent(r_a, phi, dist));
  v.emplace_back("(-3) success", p_entails(top(), alpha, dist) || !p_entails(r_a, alpha, dist));
  v.emplace_back("(-4) extensionality", extensionality);
  v.emplace_back("(-5) recovery", p_entails(land(r_a, alpha), phi, dist));
  v.emplace_back("(-6) conjunctive overlap", p_entails(r_ab, lor(r_a, r_b), dist));
  v.emplace_back("(-7) conjunctive inclusion",
                 p_entails(r_ab, alpha, dist) || p_entails(r_a, r_ab, dist));
  return v;
}

Verdicts eval_severe(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                     const Formula& beta, const ProbDist& dist) {
  const Formula r_a = op(phi, alpha, dist).result;
  const Formula r_ab = op(phi, land(alpha, beta), dist).result;
  const bool alpha_p_taut = p_entails(top(), alpha, dist);

  bool extensionality = true;
  for (const Formula& v : equivalent_variants(alpha, dist))
    extensionality = extensionality && p_equivalent(r_a, op(phi, v, dist).result, dist);
  if (p_equivalent(alpha, beta, dist))
    extensionality = extensionality && p_equivalent(r_a, op(phi, beta, dist).result, dist);

  Verdicts v;
  v.emplace_back("(=1) inclusion", p_entails(phi, r_a, dist));
  v.emplace_back("(=2) vacuity", (p_entails(phi, alpha, dist) && !alpha_p_taut) ||
                                     p_equivalent(r_a, phi, dist));
  v.emplace_back("(=3) success", alpha_p_taut || !p_entails(r_a, alpha, dist));
  v.emplace_back("(=4) extensionality", extensionality);
  v.emplace_back("(=6a) antitony", alpha_p_taut || p_entails(r_ab, r_a, dist));
  v.emplace_back("(=7) conjunctive inclusion",
                 p_entails(r_ab, alpha, dist) || p_entails(r_a, r_ab, dist));
  return v;
}

Verdicts eval_revision(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                       const Formula& beta, const ProbDist& dist) {
  const Formula r_a = op(phi, alpha, dist).result;
  const Formula r_ab = op(phi, land(alpha, beta), dist).result;

  bool extensionality = true;
  for (const Formula& v : equivalent_variants(alpha, dist))
    extensionality = extensionality && p_equivalent(r_a, op(phi, v, dist).result, dist);
  if (p_equivalent(alpha, beta, dist))
    extensionality = extensionality && p_equivalent(r_a, op(phi, beta, dist).result, dist);

  Verdicts v;
  v.emplace_back("(*1) inclusion", p_entails(land(phi, alpha), r_a, dist));
  v.emplace_back("(*2) vacuity",
                 p_entails(phi, lnot(alpha), dist) || p_equivalent(r_a, land(phi, alpha), dist));
  v.emplace_back("(*3) success", p_entails(r_a, alpha, dist));
  v.emplace_back("(*4) extensionality", extensionality);
  v.emplace_back("(*5) consistency", !p_consistent(alpha, dist) || p_consistent(r_a, dist));
  v.emplace_back("(*6) superexpansion", p_entails(land(r_a, beta), r_ab, dist));
  v.emplace_back("(*7) subexpansion",
                 p_entails(r_a, lnot(beta), dist) || p_entails(r_ab, land(r_a, beta), dist));
  return v;
}

Verdicts eval_iterated(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                       const Formula& psi, const ProbDist& dist) {
  if (!p_consistent(phi, dist) || !p_consistent(alpha, dist) || !p_consistent(psi, dist))
    throw error("iterated-revision checks need P-consistent phi, alpha and psi");

  const Formula after_alpha = op(phi, alpha, dist).result;
  const Formula twice = op(after_alpha, psi, dist).result;
  const Formula once = op(phi, psi, dist).result;

  Verdicts v;
  v.emplace_back("(C1)", !p_entails(psi, alpha, dist) || p_equivalent(twice, once, dist));
  v.emplace_back("(C2)", !p_entails(psi, lnot(alpha), dist) || p_equivalent(twice, once, dist));
  v.emplace_back("(C3)", !p_entails(once, alpha, dist) || p_entails(twice, alpha, dist));
  v.emplace_back("(C4)", p_entails(once, lnot(alpha), dist) || !p_entails(twice, lnot(alpha), dist));
  return v;
}

ChangeFn standard_op(Family family) {
  switch (family) {
    case Family::Contraction: return [](const Formula& p, const Formula& a, const ProbDist& d) { return contract(p, a, d); };
    case Family::Severe: return [](const Formula& p, const Formula& a, const ProbDist& d) { return severe_withdraw(p, a, d); };
    default: return [](const Formula& p, const Formula& a, const ProbDist& d) { return revise(p, a, d); };
  }
}

Verdicts eval_family(Family family, const ChangeFn& op, const Formula& phi, const Formula& alpha,
                     const Formula& third, const ProbDist& dist) {
  switch (family) {
    case Family::Contraction: return eval_contraction(op, phi, alpha, third, dist);
    case Family::Severe: {
      Verdicts v = eval_severe(op, phi, alpha, third, dist);
      // Expected violation, reported informationally: severe withdrawal is
      // not an AGM contraction precisely because recovery can fail.
      const Formula r_a = op(phi, alpha, dist).result;
      v.emplace_back("(-5) recovery", p_entails(land(r_a, alpha), phi, dist));
      return v;
    }
    case Family::Revision: return eval_revision(op, phi, alpha, third, dist);
    case Family::Iterated: return eval_iterated(op, phi, alpha, third, dist);
  }
  throw std::logic_error("unreachable family");
}

bool is_informational(Family family, const std::string& postulate) {
  return (family == Family::Severe && postulate == "(-5) recovery") ||
         (family == Family::Iterated && postulate == "(C2)");
}

// ---------------------------------------------------------------------------
// Fuzzing

struct Instance {
  Alphabet alphabet;
  std::vector<unsigned> weights;  // world -> grid weight; masses are w/sum
  std::uint32_t phi_mask = 0;
  std::uint32_t alpha_mask = 0;
  std::uint32_t third_mask = 0;  // beta or psi

  ProbDist dist() const {
    unsigned long total = 0;
    for (unsigned w : weights) total += w;
    std::vector<Rational> mass;
    mass.reserve(weights.size());
    for (unsigned w : weights) mass.emplace_back(Rational(w, total));
    return ProbDist(alphabet, std::move(mass));
  }

  Formula formula_of(std::uint32_t mask) const {
    WorldSet s(alphabet.size());
    for (std::size_t w = 0; w < alphabet.world_count(); ++w)
      if ((mask >> w) & 1u) s.insert(static_cast<World>(w));
    return formula_of_worlds(s, alphabet);
  }

  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t w = 0; w < weights.size(); ++w)
      if (weights[w] > 0) m |= std::uint32_t{1} << w;
    return m;
  }
};

bool instance_valid(Family family, const Instance& ins) {
  std::uint32_t supp = ins.support_mask();
  if (supp == 0) return false;
  if ((ins.phi_mask & supp) == 0) return false;
  if (family == Family::Iterated &&
      ((ins.alpha_mask & supp) == 0 || (ins.third_mask & supp) == 0))
    return false;
  return true;
}

bool postulate_holds(Family family, const ChangeFn& op, const Instance& ins,
                     const std::string& postulate) {
  ProbDist dist = ins.dist();
  Verdicts v = eval_family(family, op, ins.formula_of(ins.phi_mask),
                           ins.formula_of(ins.alpha_mask), ins.formula_of(ins.third_mask), dist);
  for (const auto& [name, holds] : v)
    if (name == postulate) return holds;
  throw std::logic_error("postulate '" + postulate + "' not in family " + to_string(family));
}

// Greedy minimisation: zero out masses, lower them to 1, and drop worlds
// from the formulas, as long as the failure replays.
Instance shrink(Family family, const ChangeFn& op, Instance ins, const std::string& postulate) {
  auto still_fails = [&](const Instance& candidate) {
    return instance_valid(family, candidate) && !postulate_holds(family, op, candidate, postulate);
  };
  bool improved = true;
  int rounds = 0;
  while (improved && rounds++ < 32) {
    improved = false;
    for (std::size_t w = 0; w < ins.weights.size(); ++w) {
      if (ins.weights[w] == 0) continue;
      Instance c = ins;
      c.weights[w] = 0;
      if (still_fails(c)) { ins = c; improved = true; continue; }
      if (ins.weights[w] > 1) {
        c = ins;
        c.weights[w] = 1;
        if (still_fails(c)) { ins = c; improved = true; }
      }
    }
    for (std::uint32_t* mask : {&ins.phi_mask, &ins.alpha_mask, &ins.third_mask}) {
      for (std::size_t w = 0; w < ins.weights.size(); ++w) {
        if (!((*mask >> w) & 1u)) continue;
        Instance c = ins;
        std::uint32_t m = *mask & ~(std::uint32_t{1} << w);
        if (mask == &ins.phi_mask) c.phi_mask = m;
        else if (mask == &ins.alpha_mask) c.alpha_mask = m;
        else c.third_mask = m;
        if (still_fails(c)) { ins = c; improved = true; }
      }
    }
  }
  return ins;
}

Witness make_witness(Family family, const Instance& ins, const std::string& postulate) {
  Witness w;
  w.family = family;
  w.postulate = postulate;
  w.alphabet = ins.alphabet.letters();
  ProbDist dist = ins.dist();
  for (World world : dist.support().to_vector())
    w.dist.emplace_back(world_to_bits(world, ins.alphabet),
                        rational_to_string(dist.mass(world)));
  std::sort(w.dist.begin(), w.dist.end());
  w.phi = to_string(ins.formula_of(ins.phi_mask));
  w.alpha = to_string(ins.formula_of(ins.alpha_mask));
  std::string third = to_string(ins.formula_of(ins.third_mask));
  if (family == Family::Iterated)
    w.psi = third;
  else
    w.beta = third;
  return w;
}

PostulateReport report_from_verdicts(Family family, const Verdicts& verdicts,
                                     const std::function<Witness(const std::string&)>& witness_fn) {
  PostulateReport report;
  report.family = family;
  report.cases = 1;
  for (const auto& [name, holds] : verdicts) {
    PostulateCheck c;
    c.name = name;
    c.informational = is_informational(family, name);
    c.checked = 1;
    c.failed = holds ? 0 : 1;
    if (!holds && witness_fn) c.witness = witness_fn(name);
    report.checks.push_back(std::move(c));
  }
  return report;
}

PostulateReport check_single(Family family, const ChangeFn& op, const Formula& phi,
                             const Formula& alpha, const Formula& third, const ProbDist& dist) {
  Verdicts v = eval_family(family, op, phi, alpha, third, dist);
  auto witness_fn = [&](const std::string& postulate) {
    Witness w;
    w.family = family;
    w.postulate = postulate;
    w.alphabet = dist.alphabet().letters();
    for (World world : dist.support().to_vector())
      w.dist.emplace_back(world_to_bits(world, dist.alphabet()),
                          rational_to_string(dist.mass(world)));
    std::sort(w.dist.begin(), w.dist.end());
    w.phi = to_string(phi);
    w.alpha = to_string(alpha);
    if (family == Family::Iterated)
      w.psi = to_string(third);
    else
      w.beta = to_string(third);
    return w;
  };
  PostulateReport r = report_from_verdicts(family, v, witness_fn);
  r.letters = static_cast<unsigned>(dist.alphabet().size());
  return r;
}

}  // namespace

PostulateReport check_contraction(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                                  const Formula& beta, const ProbDist& dist) {
  return check_single(Family::Contraction, op, phi, alpha, beta, dist);
}

PostulateReport check_severe(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                             const Formula& beta, const ProbDist& dist) {
  return check_single(Family::Severe, op, phi, alpha, beta, dist);
}

PostulateReport check_revision(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                               const Formula& beta, const ProbDist& dist) {
  return check_single(Family::Revision, op, phi, alpha, beta, dist);
}

PostulateReport check_iterated(const ChangeFn& op, const Formula& phi, const Formula& alpha,
                               const Formula& psi, const ProbDist& dist) {
  return check_single(Family::Iterated, op, phi, alpha, psi, dist);
}

PostulateReport fuzz(Family family, unsigned letters, unsigned long long cases,
                     unsigned long long seed) {
  if (letters == 0 || letters > 4) throw error("fuzzing supports 1 to 4 letters");

  static const std::vector<std::string> names = {"p", "q", "r", "s"};
  Alphabet alphabet(std::vector<std::string>(names.begin(), names.begin() + letters));
  const std::size_t n_worlds = alphabet.world_count();
  const std::uint32_t full = n_worlds == 32 ? ~std::uint32_t{0}
                                            : (std::uint32_t{1} << n_worlds) - 1;

  ChangeFn op = standard_op(family);

  PostulateReport report;
  report.family = family;
  report.letters = letters;
  report.cases = cases;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<std::uint32_t>(rng() % bound); };

  for (unsigned long long i = 0; i < cases; ++i) {
    Instance ins;
    ins.alphabet = alphabet;
    do {
      ins.weights.assign(n_worlds, 0);
      for (auto& w : ins.weights) w = draw(5);
      ins.phi_mask = draw(full) + 1;  // nonempty
      ins.alpha_mask = rng() & full;
      ins.third_mask = rng() & full;
    } while (!instance_valid(family, ins));

    Verdicts v = eval_family(family, op, ins.formula_of(ins.phi_mask),
                             ins.formula_of(ins.alpha_mask), ins.formula_of(ins.third_mask),
                             ins.dist());
    for (const auto& [name, holds] : v) {
      PostulateCheck* entry = nullptr;
      for (auto& c : report.checks)
        if (c.name == name) entry = &c;
      if (!entry) {
        report.checks.push_back({name, is_informational(family, name), 0, 0, std::nullopt});
        entry = &report.checks.back();
      }
      ++entry->checked;
      if (!holds) {
        ++entry->failed;
        if (!entry->witness)
          entry->witness = make_witness(family, shrink(family, op, ins, name), name);
      }
    }
  }
  return report;
}

bool replay(const Witness& w) {
  ProbDist dist = w.load_dist();
  const Alphabet& ab = dist.alphabet();
  Formula phi = parse(w.phi, ab);
  Formula alpha = parse(w.alpha, ab);
  const std::string& third_text = w.family == Family::Iterated ? w.psi : w.beta;
  Formula third = third_text.empty() ? top() : parse(third_text, ab);

  Verdicts v = eval_family(w.family, standard_op(w.family), phi, alpha, third, dist);
  for (const auto& [name, holds] : v)
    if (name == w.postulate) return holds;
  throw error("witness names unknown postulate '" + w.postulate + "'");
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json dist = nlohmann::json::object();
  for (const auto& [bits, q] : w.dist) dist[bits] = q;
  nlohmann::json j{{"family", to_string(w.family)},
                   {"postulate", w.postulate},
                   {"alphabet", w.alphabet},
                   {"dist", dist},
                   {"phi", w.phi},
                   {"alpha", w.alpha}};
  if (!w.beta.empty()) j["beta"] = w.beta;
  if (!w.psi.empty()) j["psi"] = w.psi;
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  w.family = family_from_string(j.at("family").get<std::string>());
  w.postulate = j.at("postulate").get<std::string>();
  w.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  for (const auto& [bits, q] : j.at("dist").items())
    w.dist.emplace_back(bits, q.get<std::string>());
  std::sort(w.dist.begin(), w.dist.end());
  w.phi = j.at("phi").get<std::string>();
  w.alpha = j.at("alpha").get<std::string>();
  w.beta = j.value("beta", "");
  w.psi = j.value("psi", "");
  return w;
}

nlohmann::json to_json(const PostulateReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc{{"postulate", c.name},
                      {"informational", c.informational},
                      {"checked", c.checked},
                      {"failed", c.failed}};
    if (c.witness) jc["witness"] = to_json(*c.witness);
    checks.push_back(std::move(jc));
  }
  return nlohmann::json{{"family", to_string(r.family)}, {"letters", r.letters},
                        {"cases", r.cases},              {"seed", r.seed},
                        {"checks", checks},              {"passed", r.passed()}};
}

}  // namespace kmbc
