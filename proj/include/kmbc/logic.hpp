#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kmbc {

/// Base class for all errors raised on invalid input.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 0-based character position into the input text.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A world is a complete truth assignment: bit i holds the truth value of
/// letter i of the ambient alphabet.
using World = std::uint32_t;

/// Ordered list of distinct propositional letters. The order is load-bearing:
/// it fixes the bit position of each letter in a World.
class Alphabet {
 public:
  static constexpr std::size_t max_letters = 16;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  /// Parses a whitespace- or comma-separated letter list, e.g. "b p o f w".
  static Alphabet from_string(const std::string& text);

  std::size_t size() const { return letters_.size(); }
  std::size_t world_count() const { return std::size_t{1} << letters_.size(); }
  const std::string& letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<std::size_t> index_of(const std::string& letter) const;
  bool contains(const std::string& letter) const;
  bool subset_of(const Alphabet& other) const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> letters_;
};

/// A set of worlds over one alphabet, stored positionally (bit w = membership
/// of world w). Immutable by convention once built; mutators exist for
/// construction only.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t n_letters)
      : n_(n_letters), bits_(std::size_t{1} << n_letters) {}
  WorldSet(std::size_t n_letters, std::initializer_list<World> worlds) : WorldSet(n_letters) {
    for (World w : worlds) insert(w);
  }

  static WorldSet full(std::size_t n_letters) {
    WorldSet s(n_letters);
    s.bits_.set();
    return s;
  }

  std::size_t n_letters() const { return n_; }
  std::size_t universe_size() const { return bits_.size(); }

  bool contains(World w) const { return bits_.test(w); }
  void insert(World w) { bits_.set(check(w)); }
  void erase(World w) { bits_.reset(check(w)); }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_subset_of(const WorldSet& other) const {
    require_same(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const WorldSet& other) const {
    require_same(other);
    return bits_.intersects(other.bits_);
  }

  WorldSet operator|(const WorldSet& other) const { return combined(other, /*mode=*/0); }
  WorldSet operator&(const WorldSet& other) const { return combined(other, /*mode=*/1); }
  WorldSet operator-(const WorldSet& other) const { return combined(other, /*mode=*/2); }
  WorldSet complement() const {
    WorldSet r = *this;
    r.bits_.flip();
    return r;
  }

  bool operator==(const WorldSet& other) const { return n_ == other.n_ && bits_ == other.bits_; }
  bool operator!=(const WorldSet& other) const { return !(*this == other); }

  std::vector<World> to_vector() const;

  /// First member, or universe_size() if empty.
  std::size_t first() const { return bits_.find_first() == boost::dynamic_bitset<>::npos ? bits_.size() : bits_.find_first(); }

 private:
  World check(World w) const {
    if (w >= bits_.size()) throw error("world index out of range for alphabet");
    return w;
  }
  void require_same(const WorldSet& other) const {
    if (n_ != other.n_) throw error("world sets over different alphabets");
  }
  WorldSet combined(const WorldSet& other, int mode) const;

  std::size_t n_ = 0;
  boost::dynamic_bitset<> bits_;
};

enum class Conn : std::uint8_t { Atom, Not, And, Or, Implies, Iff, Top, Bottom };

/// Immutable propositional formula. Subtrees are shared; copying is cheap.
/// The constants Top/Bottom never occur below another connective: the
/// combinators below absorb them.
class Formula {
 public:
  Formula() = default;

  Conn conn() const { return node().conn; }
  const std::string& letter() const { return node().letter; }
  Formula lhs() const { return Formula(node().lhs); }
  Formula rhs() const { return Formula(node().rhs); }

  bool valid() const { return node_ != nullptr; }
  bool is_constant() const { return conn() == Conn::Top || conn() == Conn::Bottom; }

  /// Structural equality.
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Conn conn;
    std::string letter;                   // Atom only
    std::shared_ptr<const Node> lhs, rhs; // Not uses lhs only
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const {
    if (!node_) throw std::logic_error("use of empty Formula");
    return *node_;
  }
  static Formula make(Conn c, std::string letter, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;

  friend Formula atom(std::string letter);
  friend Formula top();
  friend Formula bottom();
  friend Formula lnot(Formula f);
  friend Formula land(Formula a, Formula b);
  friend Formula lor(Formula a, Formula b);
  friend Formula implies(Formula a, Formula b);
  friend Formula iff(Formula a, Formula b);
};

Formula atom(std::string letter);
Formula top();
Formula bottom();
Formula lnot(Formula f);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);

/// Conjunction/disjunction over a list; empty list yields Top/Bottom.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

/// Parses the concrete grammar: `~ & | -> <->`, parentheses, `true`/`false`;
/// precedence ~ > & > | > -> > <->, `->` right-associative, the rest
/// left-associative. Every identifier must belong to the alphabet, and the
/// constants may only form the whole formula.
Formula parse(const std::string& text, const Alphabet& alphabet);

/// Minimal-parentheses rendering; parse(to_string(f)) reproduces f.
std::string to_string(const Formula& f);

/// Inductive formula length: atoms and constants count 1, ~ adds 1, a binary
/// connective adds 1 plus both operands.
std::size_t length(const Formula& f);

/// Letters occurring in the formula, in first-occurrence order.
std::vector<std::string> letters(const Formula& f);

/// The models of f over the given alphabet.
WorldSet models(const Formula& f, const Alphabet& alphabet);

bool entails(const Formula& f, const Formula& g, const Alphabet& alphabet);
bool strictly_entails(const Formula& f, const Formula& g, const Alphabet& alphabet);
bool equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet);

/// Canonical formula of a world set: empty -> false, full -> true, otherwise
/// the disjunction over members of their literal conjunctions.
Formula formula_of_worlds(const WorldSet& ws, const Alphabet& alphabet);

/// Literal conjunction describing a single world.
Formula formula_of_world(World w, const Alphabet& alphabet);

/// All worlds over `to` that agree with w (a world over `from`) on `from`.
WorldSet extend_world(World w, const Alphabet& from, const Alphabet& to);

/// Renders a world as literals, e.g. "b -p o f -w".
std::string world_to_literals(World w, const Alphabet& alphabet);

/// Renders a world as a fixed-width bitstring aligned to the alphabet,
/// e.g. "10110" (leftmost character = first letter).
std::string world_to_bits(World w, const Alphabet& alphabet);

/// Parses the bitstring form; width must equal the alphabet size.
World world_from_bits(const std::string& bits, const Alphabet& alphabet);

}  // namespace kmbc
