#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "kmbc/prob.hpp"

namespace kmbc {

/// Extended-real knowledge-measure value: a finite double or +infinity.
/// Knowledge measures themselves are nonnegative; signed values appear only
/// in change measures (revision may gain information).
class KmValue {
 public:
  KmValue() = default;

  static KmValue finite(double v) { return KmValue(v, false); }
  static KmValue infinity() { return KmValue(0.0, true); }

  bool is_infinite() const { return infinite_; }

  /// Finite value; throws if infinite.
  double value() const {
    if (infinite_) throw error("value is infinite");
    return value_;
  }

  /// Finite value or +inf as a double (display helper).
  double value_or_inf() const;

  KmValue operator+(const KmValue& other) const;
  /// Extended-real subtraction; inf - inf is an internal error.
  KmValue operator-(const KmValue& other) const;

  bool operator==(const KmValue& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }
  bool operator<(const KmValue& other) const {
    if (infinite_) return false;
    return other.infinite_ || value_ < other.value_;
  }
  bool operator<=(const KmValue& other) const { return *this < other || *this == other; }

 private:
  KmValue(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_ = 0.0;
  bool infinite_ = false;
};

std::string to_string(const KmValue& v, int decimals = 3);

/// -log2 of an exact probability; 0 maps to +infinity, 1 to exactly 0.
KmValue km_of_prob(const Rational& p);

/// Shannon knowledge measure: -log2 P(f).
KmValue shannon_km(const Formula& f, const ProbDist& dist);

/// Base-b member of the knowledge-measure family: shannon_km / log2(b).
/// Requires base > 1.
KmValue km_with_base(const Formula& f, const ProbDist& dist, double base);

/// Uniform-case measure over the formula's own letters:
/// |letters(f)| - log2 |models over letters(f)|; +infinity if unsatisfiable.
KmValue hartley_km(const Formula& f);

/// A letter-to-literal renaming covering the alphabet bijectively: each
/// letter occurs exactly once as a source and exactly once (possibly
/// negated) as a target.
class Substitution {
 public:
  /// targets[i] = (letter index, negated) for source letter i.
  explicit Substitution(std::vector<std::pair<std::size_t, bool>> targets);

  static Substitution identity(std::size_t n);

  std::size_t size() const { return targets_.size(); }
  World apply(World w) const;
  WorldSet apply(const WorldSet& ws) const;
  Substitution inverse() const;

 private:
  std::vector<std::pair<std::size_t, bool>> targets_;
};

/// Calls fn for each of the n! * 2^n substitutions; stops early when fn
/// returns true and reports whether that happened.
bool any_substitution(std::size_t n, const std::function<bool(const Substitution&)>& fn);

/// f s-entails g: some substitution maps the models of f into the models
/// of g. The search is brute force; alphabets above 8 letters are rejected.
bool s_entails(const Formula& f, const Formula& g, const Alphabet& alphabet);
bool s_strictly_entails(const Formula& f, const Formula& g, const Alphabet& alphabet);
bool s_equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet);

}  // namespace kmbc
