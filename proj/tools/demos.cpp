#include "demos.hpp"

#include <iostream>

#include "kmbc/change.hpp"
#include "kmbc/rankings.hpp"
#include "output.hpp"

namespace kmbc::cli {

namespace {

ProbDist dist_of(const Alphabet& a,
                 const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::pair<World, Rational>> pairs;
  for (const auto& [bits, q] : entries)
    pairs.emplace_back(world_from_bits(bits, a), rational_from_string(q));
  return ProbDist::from_pairs(a, pairs);
}

void print_dist(const ProbDist& d) {
  std::cout << "distribution over {";
  for (std::size_t i = 0; i < d.alphabet().size(); ++i)
    std::cout << (i ? ", " : "") << d.alphabet().letter(i);
  std::cout << "}:\n";
  for (World w : d.support().to_vector())
    std::cout << "  " << world_to_bits(w, d.alphabet()) << "  "
              << world_to_literals(w, d.alphabet()) << "  " << rational_to_string(d.mass(w))
              << "\n";
}

std::string km3(const KmValue& v) { return measure_text(v, 3); }

int demo_running_example() {
  Alphabet a = Alphabet::from_string("b p o f w");
  Formula kb = parse("b & (b -> f) & (p -> b) & (o -> b) & ~(p & o)", a);
  ProbDist d = dist_of(a, {{"11011", "0.1"},
                           {"10111", "0.1"},
                           {"10011", "0.15"},
                           {"11001", "0.15"},
                           {"10101", "0.2"},
                           {"10001", "0.2"},
                           {"01011", "0.07"},
                           {"01010", "0.03"}});

  std::cout << "KB = " << to_string(kb) << "\n";
  print_dist(d);

  WorldSet kb_models = models(kb, a);
  std::cout << "models of KB (" << kb_models.count() << "):\n";
  print_world_list(std::cout, kb_models, a);
  std::cout << "possible models of KB (" << possible_models(kb, d).count() << "):\n";
  print_world_list(std::cout, possible_models(kb, d), a);

  std::cout << "P(KB) = " << rational_to_string(prob(kb, d)) << "\n";
  std::cout << "kappa_S(KB) = " << km3(shannon_km(kb, d)) << "\n";
  std::cout << "kappa_h(KB) = " << km3(hartley_km(kb)) << "\n";

  Formula f = parse("f", a);
  std::cout << "\ncontract KB by f\n";
  std::cout << "possible counter-worlds of f:\n";
  print_world_list(std::cout, possible_models(lnot(f), d), a);

  RemainderSet rs = remainders(kb, f, d);
  std::cout << "remainders:\n";
  for (const auto& [w, p] : rs.candidates)
    std::cout << "  KB-worlds + " << world_to_bits(w, a) << "  P = " << rational_to_string(p)
              << "  kappa_S = " << km3(km_of_prob(p)) << "\n";

  ChangeReport con = contract(kb, f, d);
  std::cout << "result worlds:\n";
  print_world_list(std::cout, con.result_worlds, a);
  Formula compact = lor(kb, parse("b & ~p & ~f & w", a));
  std::cout << "result is P-equivalent to KB | (b & ~p & ~f & w): "
            << (p_equivalent(con.result, compact, d) ? "yes" : "NO") << "\n";
  std::cout << "P(result) = " << rational_to_string(prob(con.result_worlds, d))
            << "  kappa_S = " << km3(km_of_prob(prob(con.result_worlds, d))) << "\n";
  std::cout << "loss = " << km3(con.measure) << "  (closed form "
            << km3(contraction_loss_closed_form(kb, f, d)) << ")\n";

  ChangeReport sev = severe_withdraw(kb, f, d);
  std::cout << "\nsevere withdrawal of f\n";
  std::cout << "result worlds:\n";
  print_world_list(std::cout, sev.result_worlds, a);
  std::cout << "loss = " << km3(sev.measure) << "  (closed form "
            << km3(severe_loss_closed_form(kb, f, d)) << ")\n";
  return 0;
}

int demo_table1() {
  Alphabet a = Alphabet::from_string("a b c");
  Formula phi = parse("a & b", a);
  FaithfulRanking r = FaithfulRanking::from_levels(
      phi, a,
      {models(phi, a), models(parse("(a & ~b) | (~a & b)", a), a),
       models(parse("~a & ~b", a), a)});
  ProbDist d = dist_from_ranking(r);

  std::cout << "ranking centred on " << to_string(phi) << ":\n";
  for (unsigned rank = r.max_rank() + 1; rank-- > 0;) {
    WorldSet level = r.level(rank);
    World sample = static_cast<World>(level.first());
    std::cout << "  rank " << rank << ":";
    for (World w : level.to_vector()) std::cout << " " << world_to_bits(w, a);
    std::cout << "   P = " << rational_to_string(d.mass(sample))
              << "   kappa_S = " << km3(km_of_prob(d.mass(sample))) << "\n";
  }

  ChangeReport con = contract(phi, parse("b", a), d);
  std::cout << "contract (a & b) by b: result";
  for (World w : con.result_worlds.to_vector()) std::cout << " " << world_to_bits(w, a);
  std::cout << "\n  equivalent to a: "
            << (equivalent(con.result, parse("a", a), a) ? "yes" : "NO") << "\n";

  ChangeReport rev = revise(phi, parse("~b", a), d);
  std::cout << "revise (a & b) by ~b: result";
  for (World w : rev.result_worlds.to_vector()) std::cout << " " << world_to_bits(w, a);
  std::cout << "\n  equivalent to a & ~b: "
            << (equivalent(rev.result, parse("a & ~b", a), a) ? "yes" : "NO") << "\n";
  std::cout << "  change = " << km3(rev.measure) << "\n";
  return 0;
}

int demo_c2_counterexample() {
  Alphabet a = Alphabet::from_string("p q");
  ProbDist d = dist_of(a, {{"10", "0.6"}, {"11", "0.2"}, {"00", "0.1"}, {"01", "0.1"}});
  print_dist(d);
  std::cout << "kappa_S per world:\n";
  for (World w : d.support().to_vector())
    std::cout << "  " << world_to_bits(w, a) << "  " << km3(km_of_prob(d.mass(w))) << "\n";

  Formula phi = parse("(p & q) | (~p & ~q)", a);
  Formula alpha = parse("~p & q", a);
  Formula psi = parse("p", a);
  std::cout << "phi = " << to_string(phi) << "\nalpha = " << to_string(alpha)
            << "\npsi = " << to_string(psi) << "\n";

  ChangeReport once = revise(phi, psi, d);
  ChangeReport via_alpha = revise(phi, alpha, d);
  ChangeReport twice = revise(via_alpha.result, psi, d);

  auto show = [&](const char* label, const ChangeReport& r) {
    std::cout << label << " -> worlds {";
    bool first = true;
    for (World w : r.result_worlds.to_vector()) {
      std::cout << (first ? "" : ", ") << world_to_bits(w, a);
      first = false;
    }
    std::cout << "}\n";
  };
  show("revise phi by psi          ", once);
  show("revise phi by alpha        ", via_alpha);
  show("revise (phi * alpha) by psi", twice);

  bool violated = !p_equivalent(twice.result, once.result, d);
  std::cout << "psi P-entails ~alpha, yet the two routes differ: C2 "
            << (violated ? "violated" : "holds") << "\n";
  return violated ? 0 : 2;
}

int demo_pets() {
  Alphabet a = Alphabet::from_string("p d c");
  ProbDist d = dist_of(a, {{"000", "0.3"}, {"101", "0.3"}, {"110", "0.25"}, {"111", "0.15"}});
  print_dist(d);

  Formula phi = parse("~p", a);
  std::cout << "phi = " << to_string(phi) << "\n";

  ChangeReport keep = revise(phi, parse("~d", a), d);
  std::cout << "revise by ~d: worlds {";
  for (World w : keep.result_worlds.to_vector()) std::cout << " " << world_to_bits(w, a);
  std::cout << " }  P-equivalent to ~p: "
            << (p_equivalent(keep.result, phi, d) ? "yes" : "NO") << "\n";

  ChangeReport dog = revise(phi, parse("d", a), d);
  std::cout << "revise by d: worlds {";
  for (World w : dog.result_worlds.to_vector()) std::cout << " " << world_to_bits(w, a);
  std::cout << " }\n";

  ChangeReport back = revise(dog.result, parse("~d", a), d);
  std::cout << "then revise by ~d: worlds {";
  for (World w : back.result_worlds.to_vector()) std::cout << " " << world_to_bits(w, a);
  std::cout << " }\n";
  Formula open_cat = parse("(~p & ~d & ~c) | (p & ~d & c)", a);
  std::cout << "  P-equivalent to (~p & ~d & ~c) | (p & ~d & c): "
            << (p_equivalent(back.result, open_cat, d) ? "yes" : "NO") << "\n";
  std::cout << "  differs from revising phi by ~d directly: "
            << (p_equivalent(back.result, keep.result, d) ? "NO" : "yes") << "\n";
  return 0;
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"running-example", "table1", "c2-counterexample", "pets"};
}

int run_demo(const std::string& name) {
  if (name == "running-example") return demo_running_example();
  if (name == "table1") return demo_table1();
  if (name == "c2-counterexample") return demo_c2_counterexample();
  if (name == "pets") return demo_pets();
  throw error("unknown demo '" + name + "' (available: running-example, table1, "
              "c2-counterexample, pets)");
}

}  // namespace kmbc::cli
