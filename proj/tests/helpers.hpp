#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kmbc/change.hpp"
#include "kmbc/measures.hpp"
#include "kmbc/prob.hpp"

namespace kmbc::test {

/// Canonicalized rational literal for comparisons against library output.
inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline ProbDist make_dist(const Alphabet& a,
                          const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::pair<World, Rational>> pairs;
  for (const auto& [bits, q] : entries)
    pairs.emplace_back(world_from_bits(bits, a), rational_from_string(q));
  return ProbDist::from_pairs(a, pairs);
}

inline WorldSet ws_of(const Alphabet& a, const std::vector<std::string>& bits) {
  WorldSet s(a.size());
  for (const auto& b : bits) s.insert(world_from_bits(b, a));
  return s;
}

inline WorldSet ws_of_mask(std::size_t n_letters, std::uint32_t mask) {
  WorldSet s(n_letters);
  for (std::size_t w = 0; w < (std::size_t{1} << n_letters); ++w)
    if ((mask >> w) & 1u) s.insert(static_cast<World>(w));
  return s;
}

// Running example: birds over {b, p, o, f, w}.
inline const Alphabet& birds_alphabet() {
  static const Alphabet a = Alphabet::from_string("b p o f w");
  return a;
}

inline Formula birds_kb() {
  return parse("b & (b -> f) & (p -> b) & (o -> b) & ~(p & o)", birds_alphabet());
}

inline const ProbDist& birds_dist() {
  static const ProbDist d = make_dist(birds_alphabet(), {
                                                            {"11011", "1/10"},   // b p -o f w
                                                            {"10111", "1/10"},   // b -p o f w
                                                            {"10011", "3/20"},   // b -p -o f w
                                                            {"11001", "3/20"},   // b p -o -f w
                                                            {"10101", "1/5"},    // b -p o -f w
                                                            {"10001", "1/5"},    // b -p -o -f w
                                                            {"01011", "7/100"},  // -b p -o f w
                                                            {"01010", "3/100"},  // -b p -o f -w
                                                        });
  return d;
}

// Three-letter ranking example over {a, b, c} centred on a & b:
// rank 0 = {abc, ab-c} (mass 3/16), rank 1 = four worlds (2/16),
// rank 2 = {-a-bc, -a-b-c} (1/16).
inline const Alphabet& abc_alphabet() {
  static const Alphabet a = Alphabet::from_string("a b c");
  return a;
}

inline const ProbDist& abc_ranked_dist() {
  static const ProbDist d = make_dist(abc_alphabet(), {
                                                          {"111", "3/16"},
                                                          {"110", "3/16"},
                                                          {"101", "2/16"},
                                                          {"100", "2/16"},
                                                          {"011", "2/16"},
                                                          {"010", "2/16"},
                                                          {"001", "1/16"},
                                                          {"000", "1/16"},
                                                      });
  return d;
}

// Two-letter distribution used by the double-revision counterexample.
inline const Alphabet& pq_alphabet() {
  static const Alphabet a = Alphabet::from_string("p q");
  return a;
}

inline const ProbDist& pq_dist() {
  static const ProbDist d = make_dist(pq_alphabet(), {
                                                         {"10", "3/5"},   // p -q
                                                         {"11", "1/5"},   // p q
                                                         {"00", "1/10"},  // -p -q
                                                         {"01", "1/10"},  // -p q
                                                     });
  return d;
}

// Pet-ownership distribution over {p, d, c}.
inline const Alphabet& pets_alphabet() {
  static const Alphabet a = Alphabet::from_string("p d c");
  return a;
}

inline const ProbDist& pets_dist() {
  static const ProbDist d = make_dist(pets_alphabet(), {
                                                           {"000", "3/10"},  // -p -d -c
                                                           {"101", "3/10"},  // p -d c
                                                           {"110", "1/4"},   // p d -c
                                                           {"111", "3/20"},  // p d c
                                                       });
  return d;
}

// Deterministic grid distributions for small exhaustive sweeps: weights over
// a small integer grid, including ties and zero-mass worlds.
inline std::vector<ProbDist> grid_dists(const Alphabet& a) {
  const std::size_t n = a.world_count();
  std::vector<std::vector<unsigned>> weight_sets;
  std::vector<unsigned> uniform(n, 1);
  weight_sets.push_back(uniform);
  std::vector<unsigned> tiered(n), gappy(n);
  for (std::size_t w = 0; w < n; ++w) {
    tiered[w] = static_cast<unsigned>(1 + (w % 3));
    gappy[w] = static_cast<unsigned>((w * 2 + 1) % 5);  // hits 0 for some worlds
  }
  if (std::all_of(gappy.begin(), gappy.end(), [](unsigned x) { return x == 0; })) gappy[0] = 1;
  weight_sets.push_back(tiered);
  weight_sets.push_back(gappy);

  std::vector<ProbDist> out;
  for (const auto& ws : weight_sets) {
    unsigned long total = 0;
    for (unsigned w : ws) total += w;
    std::vector<Rational> mass;
    for (unsigned w : ws) mass.emplace_back(Rational(w, total));
    out.emplace_back(a, std::move(mass));
  }
  return out;
}

inline bool close(const KmValue& v, double expected, double tol) {
  return !v.is_infinite() && std::abs(v.value() - expected) <= tol;
}

inline bool close(const KmValue& a, const KmValue& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace kmbc::test
