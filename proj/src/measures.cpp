#include "kmbc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace kmbc {

double KmValue::value_or_inf() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

KmValue KmValue::operator+(const KmValue& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return finite(value_ + other.value_);
}

KmValue KmValue::operator-(const KmValue& other) const {
  if (other.infinite_) {
    if (infinite_) throw std::logic_error("inf - inf in knowledge-measure arithmetic");
    throw std::logic_error("subtracting an infinite knowledge measure");
  }
  if (infinite_) return infinity();
  return finite(value_ - other.value_);
}

std::string to_string(const KmValue& v, int decimals) {
  if (v.is_infinite()) return "inf";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v.value();
  return os.str();
}

KmValue km_of_prob(const Rational& p) {
  if (p < 0 || p > 1) throw error("probability out of [0,1]");
  if (p == 0) return KmValue::infinity();
  if (p == 1) return KmValue::finite(0.0);
  return KmValue::finite(-std::log2(p.get_d()));
}

KmValue shannon_km(const Formula& f, const ProbDist& dist) {
  return km_of_prob(prob(f, dist));
}

KmValue km_with_base(const Formula& f, const ProbDist& dist, double base) {
  if (!(base > 1.0)) throw error("knowledge-measure base must be > 1");
  KmValue s = shannon_km(f, dist);
  if (s.is_infinite()) return s;
  return KmValue::finite(s.value() / std::log2(base));
}

KmValue hartley_km(const Formula& f) {
  if (f.conn() == Conn::Top) return KmValue::finite(0.0);
  if (f.conn() == Conn::Bottom) return KmValue::infinity();
  Alphabet own(letters(f));
  WorldSet m = models(f, own);
  if (m.empty()) return KmValue::infinity();
  return KmValue::finite(static_cast<double>(own.size()) -
                         std::log2(static_cast<double>(m.count())));
}

Substitution::Substitution(std::vector<std::pair<std::size_t, bool>> targets)
    : targets_(std::move(targets)) {
  std::vector<bool> hit(targets_.size(), false);
  for (const auto& [j, neg] : targets_) {
    (void)neg;
    if (j >= targets_.size() || hit[j])
      throw error("substitution targets must cover each letter exactly once");
    hit[j] = true;
  }
}

Substitution Substitution::identity(std::size_t n) {
  std::vector<std::pair<std::size_t, bool>> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = {i, false};
  return Substitution(std::move(t));
}

World Substitution::apply(World w) const {
  World out = 0;
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    bool bit = (w >> i) & 1u;
    const auto& [j, neg] = targets_[i];
    if (bit != neg) out |= World{1} << j;
  }
  return out;
}

WorldSet Substitution::apply(const WorldSet& ws) const {
  WorldSet out(ws.n_letters());
  for (World w : ws.to_vector()) out.insert(apply(w));
  return out;
}

Substitution Substitution::inverse() const {
  std::vector<std::pair<std::size_t, bool>> t(targets_.size());
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    const auto& [j, neg] = targets_[i];
    t[j] = {i, neg};
  }
  return Substitution(std::move(t));
}

bool any_substitution(std::size_t n, const std::function<bool(const Substitution&)>& fn) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      std::vector<std::pair<std::size_t, bool>> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = {perm[i], ((signs >> i) & 1u) != 0};
      if (fn(Substitution(std::move(t)))) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

constexpr std::size_t s_entailment_cap = 8;

bool s_entails_sets(const WorldSet& a, const WorldSet& b, std::size_t n) {
  return any_substitution(
      n, [&](const Substitution& theta) { return theta.apply(a).is_subset_of(b); });
}

}  // namespace

bool s_entails(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  if (alphabet.size() > s_entailment_cap)
    throw error("s-entailment search is capped at " + std::to_string(s_entailment_cap) +
                " letters");
  return s_entails_sets(models(f, alphabet), models(g, alphabet), alphabet.size());
}

bool s_strictly_entails(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  return s_entails(f, g, alphabet) && !s_entails(g, f, alphabet);
}

bool s_equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  return s_entails(f, g, alphabet) && s_entails(g, f, alphabet);
}

}  // namespace kmbc
