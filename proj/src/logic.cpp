#include "kmbc/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kmbc {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw error("alphabet must contain at least one letter");
  if (letters_.size() > max_letters)
    throw error("alphabet exceeds the cap of " + std::to_string(max_letters) + " letters");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw error("empty letter name");
    if (l == "true" || l == "false") throw error("'" + l + "' is a reserved word");
    if (!(std::isalpha(static_cast<unsigned char>(l[0])) || l[0] == '_'))
      throw error("letter '" + l + "' must start with a letter or '_'");
    for (char c : l)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
        throw error("letter '" + l + "' contains an invalid character");
    if (!seen.insert(l).second) throw error("duplicate letter '" + l + "'");
  }
}

Alphabet Alphabet::from_string(const std::string& text) {
  std::vector<std::string> letters;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) letters.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) letters.push_back(std::move(cur));
  return Alphabet(std::move(letters));
}

std::optional<std::size_t> Alphabet::index_of(const std::string& letter) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == letter) return i;
  return std::nullopt;
}

bool Alphabet::contains(const std::string& letter) const { return index_of(letter).has_value(); }

bool Alphabet::subset_of(const Alphabet& other) const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](const std::string& l) { return other.contains(l); });
}

// ---------------------------------------------------------------------------
// WorldSet

std::vector<World> WorldSet::to_vector() const {
  std::vector<World> out;
  out.reserve(count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(static_cast<World>(i));
  return out;
}

WorldSet WorldSet::combined(const WorldSet& other, int mode) const {
  require_same(other);
  WorldSet r = *this;
  switch (mode) {
    case 0: r.bits_ |= other.bits_; break;
    case 1: r.bits_ &= other.bits_; break;
    default: r.bits_ -= other.bits_; break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Formula construction

Formula Formula::make(Conn c, std::string letter, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->letter = std::move(letter);
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula atom(std::string letter) { return Formula::make(Conn::Atom, std::move(letter), {}, {}); }

Formula top() {
  static const Formula t = Formula::make(Conn::Top, {}, {}, {});
  return t;
}

Formula bottom() {
  static const Formula b = Formula::make(Conn::Bottom, {}, {}, {});
  return b;
}

// The combinators absorb constants so that Top/Bottom only ever stand alone.

Formula lnot(Formula f) {
  if (f.conn() == Conn::Top) return bottom();
  if (f.conn() == Conn::Bottom) return top();
  return Formula::make(Conn::Not, {}, std::move(f), {});
}

Formula land(Formula a, Formula b) {
  if (a.conn() == Conn::Top) return b;
  if (b.conn() == Conn::Top) return a;
  if (a.conn() == Conn::Bottom || b.conn() == Conn::Bottom) return bottom();
  return Formula::make(Conn::And, {}, std::move(a), std::move(b));
}

Formula lor(Formula a, Formula b) {
  if (a.conn() == Conn::Bottom) return b;
  if (b.conn() == Conn::Bottom) return a;
  if (a.conn() == Conn::Top || b.conn() == Conn::Top) return top();
  return Formula::make(Conn::Or, {}, std::move(a), std::move(b));
}

Formula implies(Formula a, Formula b) {
  if (a.conn() == Conn::Top) return b;
  if (a.conn() == Conn::Bottom) return top();
  if (b.conn() == Conn::Top) return top();
  if (b.conn() == Conn::Bottom) return lnot(std::move(a));
  return Formula::make(Conn::Implies, {}, std::move(a), std::move(b));
}

Formula iff(Formula a, Formula b) {
  if (a.conn() == Conn::Top) return b;
  if (b.conn() == Conn::Top) return a;
  if (a.conn() == Conn::Bottom) return lnot(std::move(b));
  if (b.conn() == Conn::Bottom) return lnot(std::move(a));
  return Formula::make(Conn::Iff, {}, std::move(a), std::move(b));
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = land(std::move(acc), fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = lor(std::move(acc), fs[i]);
  return acc;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (conn() != other.conn()) return false;
  switch (conn()) {
    case Conn::Atom: return letter() == other.letter();
    case Conn::Top:
    case Conn::Bottom: return true;
    case Conn::Not: return lhs() == other.lhs();
    default: return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar
//   iff     := impl ('<->' impl)*
//   impl    := or ('->' impl)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | primary
//   primary := ident | 'true' | 'false' | '(' iff ')'

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Formula run() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void require_operand(const Formula& f, std::size_t at) const {
    if (f.is_constant())
      throw parse_error("'true'/'false' cannot occur inside a larger formula", at);
  }

  Formula parse_iff() {
    std::size_t at = pos_;
    Formula f = parse_impl();
    while (eat("<->")) {
      require_operand(f, at);
      std::size_t rhs_at = pos_;
      Formula g = parse_impl();
      require_operand(g, rhs_at);
      f = iff(std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_impl() {
    std::size_t at = pos_;
    Formula f = parse_or();
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      require_operand(f, at);
      std::size_t rhs_at = pos_;
      Formula g = parse_impl();  // right-associative
      require_operand(g, rhs_at);
      return implies(std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_or() {
    std::size_t at = pos_;
    Formula f = parse_and();
    while (peek_is('|')) {
      ++pos_;
      require_operand(f, at);
      std::size_t rhs_at = pos_;
      Formula g = parse_and();
      require_operand(g, rhs_at);
      f = lor(std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_and() {
    std::size_t at = pos_;
    Formula f = parse_unary();
    while (peek_is('&')) {
      ++pos_;
      require_operand(f, at);
      std::size_t rhs_at = pos_;
      Formula g = parse_unary();
      require_operand(g, rhs_at);
      f = land(std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '~') {
      std::size_t at = ++pos_;
      Formula f = parse_unary();
      require_operand(f, at);
      return lnot(std::move(f));
    }
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw parse_error("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      std::string word = text_.substr(start, pos_ - start);
      if (word == "true") return top();
      if (word == "false") return bottom();
      if (!alphabet_.contains(word))
        throw parse_error("unknown letter '" + word + "'", start);
      return atom(word);
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text, const Alphabet& alphabet) {
  return Parser(text, alphabet).run();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Conn c) {
  switch (c) {
    case Conn::Iff: return 1;
    case Conn::Implies: return 2;
    case Conn::Or: return 3;
    case Conn::And: return 4;
    case Conn::Not: return 5;
    default: return 6;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.conn());
  bool parens = prec < min_prec;
  if (parens) out.push_back('(');
  switch (f.conn()) {
    case Conn::Atom: out += f.letter(); break;
    case Conn::Top: out += "true"; break;
    case Conn::Bottom: out += "false"; break;
    case Conn::Not:
      out.push_back('~');
      print(f.lhs(), 5, out);
      break;
    case Conn::And:
      print(f.lhs(), 4, out);
      out += " & ";
      print(f.rhs(), 5, out);
      break;
    case Conn::Or:
      print(f.lhs(), 3, out);
      out += " | ";
      print(f.rhs(), 4, out);
      break;
    case Conn::Implies:
      print(f.lhs(), 3, out);
      out += " -> ";
      print(f.rhs(), 2, out);
      break;
    case Conn::Iff:
      print(f.lhs(), 1, out);
      out += " <-> ";
      print(f.rhs(), 2, out);
      break;
  }
  if (parens) out.push_back(')');
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

std::size_t length(const Formula& f) {
  switch (f.conn()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bottom: return 1;
    case Conn::Not: return 1 + length(f.lhs());
    default: return 1 + length(f.lhs()) + length(f.rhs());
  }
}

namespace {

void collect_letters(const Formula& f, std::vector<std::string>& out) {
  switch (f.conn()) {
    case Conn::Atom:
      if (std::find(out.begin(), out.end(), f.letter()) == out.end()) out.push_back(f.letter());
      break;
    case Conn::Top:
    case Conn::Bottom: break;
    case Conn::Not: collect_letters(f.lhs(), out); break;
    default:
      collect_letters(f.lhs(), out);
      collect_letters(f.rhs(), out);
      break;
  }
}

boost::dynamic_bitset<> eval(const Formula& f, const Alphabet& alphabet) {
  const std::size_t n_worlds = alphabet.world_count();
  switch (f.conn()) {
    case Conn::Atom: {
      auto idx = alphabet.index_of(f.letter());
      if (!idx) throw error("formula letter '" + f.letter() + "' not in alphabet");
      boost::dynamic_bitset<> bs(n_worlds);
      for (std::size_t w = 0; w < n_worlds; ++w)
        if ((w >> *idx) & 1u) bs.set(w);
      return bs;
    }
    case Conn::Top: {
      boost::dynamic_bitset<> bs(n_worlds);
      bs.set();
      return bs;
    }
    case Conn::Bottom: return boost::dynamic_bitset<>(n_worlds);
    case Conn::Not: return ~eval(f.lhs(), alphabet);
    case Conn::And: return eval(f.lhs(), alphabet) & eval(f.rhs(), alphabet);
    case Conn::Or: return eval(f.lhs(), alphabet) | eval(f.rhs(), alphabet);
    case Conn::Implies: return ~eval(f.lhs(), alphabet) | eval(f.rhs(), alphabet);
    case Conn::Iff: return ~(eval(f.lhs(), alphabet) ^ eval(f.rhs(), alphabet));
  }
  throw std::logic_error("unreachable connective");
}

}  // namespace

std::vector<std::string> letters(const Formula& f) {
  std::vector<std::string> out;
  collect_letters(f, out);
  return out;
}

WorldSet models(const Formula& f, const Alphabet& alphabet) {
  WorldSet result(alphabet.size());
  auto bs = eval(f, alphabet);
  for (auto i = bs.find_first(); i != boost::dynamic_bitset<>::npos; i = bs.find_next(i))
    result.insert(static_cast<World>(i));
  return result;
}

bool entails(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  return models(f, alphabet).is_subset_of(models(g, alphabet));
}

bool strictly_entails(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  WorldSet mf = models(f, alphabet), mg = models(g, alphabet);
  return mf.is_subset_of(mg) && mf != mg;
}

bool equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet) {
  return models(f, alphabet) == models(g, alphabet);
}

Formula formula_of_world(World w, const Alphabet& alphabet) {
  Formula acc;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    Formula lit = ((w >> i) & 1u) ? atom(alphabet.letter(i)) : lnot(atom(alphabet.letter(i)));
    acc = acc.valid() ? land(std::move(acc), std::move(lit)) : std::move(lit);
  }
  return acc;
}

Formula formula_of_worlds(const WorldSet& ws, const Alphabet& alphabet) {
  if (ws.universe_size() != alphabet.world_count())
    throw error("world set does not match alphabet");
  if (ws.empty()) return bottom();
  if (ws.count() == ws.universe_size()) return top();
  Formula acc;
  for (World w : ws.to_vector()) {
    Formula conj = formula_of_world(w, alphabet);
    acc = acc.valid() ? lor(std::move(acc), std::move(conj)) : std::move(conj);
  }
  return acc;
}

WorldSet extend_world(World w, const Alphabet& from, const Alphabet& to) {
  if (!from.subset_of(to)) throw error("'from' alphabet is not a subset of 'to'");
  if (w >= from.world_count()) throw error("world index out of range for alphabet");
  std::vector<std::size_t> free_bits;
  World base = 0;
  for (std::size_t j = 0; j < to.size(); ++j) {
    if (auto i = from.index_of(to.letter(j))) {
      if ((w >> *i) & 1u) base |= World{1} << j;
    } else {
      free_bits.push_back(j);
    }
  }
  WorldSet out(to.size());
  const std::size_t k = free_bits.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    World v = base;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) v |= World{1} << free_bits[b];
    out.insert(v);
  }
  return out;
}

std::string world_to_literals(World w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out.push_back(' ');
    if (!((w >> i) & 1u)) out.push_back('-');
    out += alphabet.letter(i);
  }
  return out;
}

std::string world_to_bits(World w, const Alphabet& alphabet) {
  std::string out(alphabet.size(), '0');
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if ((w >> i) & 1u) out[i] = '1';
  return out;
}

World world_from_bits(const std::string& bits, const Alphabet& alphabet) {
  if (bits.size() != alphabet.size())
    throw error("bitstring '" + bits + "' does not match alphabet size " +
                std::to_string(alphabet.size()));
  World w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      w |= World{1} << i;
    else if (bits[i] != '0')
      throw error("bitstring '" + bits + "' contains a character other than 0/1");
  }
  return w;
}

}  // namespace kmbc
