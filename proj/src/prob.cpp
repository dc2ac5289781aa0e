#include "kmbc/prob.hpp"

#include <algorithm>
#include <cctype>

namespace kmbc {

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw error("empty number");

  auto all_digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };

  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  std::string body = s.substr(i);

  Rational q;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw error("malformed rational '" + text + "'");
    q = Rational(mpz_class(num), mpz_class(den));
    if (q.get_den() == 0) throw error("zero denominator in '" + text + "'");
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw error("malformed decimal '" + text + "'");
    mpz_class scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    q = Rational(mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp)), scale);
  } else {
    if (!all_digits(body)) throw error("malformed number '" + text + "'");
    q = Rational(mpz_class(body));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

ProbDist::ProbDist(Alphabet alphabet, std::vector<Rational> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)), support_(alphabet_.size()) {
  if (mass_.size() != alphabet_.world_count())
    throw error("distribution must assign a mass to each of the " +
                std::to_string(alphabet_.world_count()) + " worlds");
  Rational total = 0;
  for (std::size_t w = 0; w < mass_.size(); ++w) {
    mass_[w].canonicalize();
    if (mass_[w] < 0)
      throw error("negative mass " + rational_to_string(mass_[w]) + " at world " +
                  world_to_bits(static_cast<World>(w), alphabet_));
    if (mass_[w] > 0) support_.insert(static_cast<World>(w));
    total += mass_[w];
  }
  if (total != 1)
    throw error("masses sum to " + rational_to_string(total) + ", expected exactly 1");
}

ProbDist ProbDist::from_pairs(const Alphabet& alphabet,
                              const std::vector<std::pair<World, Rational>>& pairs) {
  std::vector<Rational> mass(alphabet.world_count(), Rational(0));
  std::vector<bool> seen(alphabet.world_count(), false);
  for (const auto& [w, q] : pairs) {
    if (w >= alphabet.world_count()) throw error("world index out of range for alphabet");
    if (seen[w]) throw error("world " + world_to_bits(w, alphabet) + " listed twice");
    seen[w] = true;
    mass[w] = q;
  }
  return ProbDist(alphabet, std::move(mass));
}

ProbDist ProbDist::uniform(const Alphabet& alphabet) {
  std::vector<Rational> mass(alphabet.world_count(),
                             Rational(1, static_cast<unsigned long>(alphabet.world_count())));
  return ProbDist(alphabet, std::move(mass));
}

Rational prob(const WorldSet& ws, const ProbDist& dist) {
  if (ws.n_letters() != dist.alphabet().size()) throw error("world set over a different alphabet");
  Rational total = 0;
  for (World w : ws.to_vector()) total += dist.mass(w);
  return total;
}

Rational prob(const Formula& f, const ProbDist& dist) {
  return prob(models(f, dist.alphabet()), dist);
}

Rational conditional_prob(const Formula& f, const Formula& given, const ProbDist& dist) {
  Rational pg = prob(given, dist);
  if (pg == 0) throw error("conditioning on a zero-probability formula");
  return prob(land(f, given), dist) / pg;
}

ProbDist extend(const ProbDist& dist, const Alphabet& to) {
  const Alphabet& from = dist.alphabet();
  if (!from.subset_of(to)) throw error("target alphabet is not a superset");
  std::vector<Rational> mass(to.world_count(), Rational(0));
  for (std::size_t w = 0; w < from.world_count(); ++w) {
    if (dist.mass(static_cast<World>(w)) == 0) continue;
    WorldSet ext = extend_world(static_cast<World>(w), from, to);
    Rational share = dist.mass(static_cast<World>(w)) /
                     Rational(static_cast<unsigned long>(ext.count()));
    for (World v : ext.to_vector()) mass[v] = share;
  }
  return ProbDist(to, std::move(mass));
}

ProbDist marginalize(const ProbDist& dist, const Alphabet& to) {
  const Alphabet& from = dist.alphabet();
  if (!to.subset_of(from)) throw error("target alphabet is not a subset");
  std::vector<Rational> mass(to.world_count(), Rational(0));
  for (std::size_t v = 0; v < to.world_count(); ++v) {
    WorldSet ext = extend_world(static_cast<World>(v), to, from);
    Rational total = 0;
    for (World w : ext.to_vector()) total += dist.mass(w);
    mass[v] = total;
  }
  return ProbDist(to, std::move(mass));
}

Formula p_zero_formula(const ProbDist& dist) {
  return formula_of_worlds(dist.support().complement(), dist.alphabet());
}

WorldSet possible_models(const Formula& f, const ProbDist& dist) {
  return models(f, dist.alphabet()) & dist.support();
}

bool p_entails(const Formula& f, const Formula& g, const ProbDist& dist) {
  return possible_models(f, dist).is_subset_of(models(g, dist.alphabet()));
}

bool p_strictly_entails(const Formula& f, const Formula& g, const ProbDist& dist) {
  return p_entails(f, g, dist) && !p_entails(g, f, dist);
}

bool p_equivalent(const Formula& f, const Formula& g, const ProbDist& dist) {
  return possible_models(f, dist) == possible_models(g, dist);
}

bool p_consistent(const Formula& f, const ProbDist& dist) {
  return !possible_models(f, dist).empty();
}

bool p_independent(const Formula& f, const Formula& g, const ProbDist& dist) {
  WorldSet mf = models(f, dist.alphabet());
  WorldSet mg = models(g, dist.alphabet());
  return prob(mf & mg, dist) == prob(mf, dist) * prob(mg, dist);
}

}  // namespace kmbc
