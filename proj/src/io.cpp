#include "kmbc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kmbc {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return in;
}

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

ProbDist load_dist_text(std::istream& in) {
  std::string line;
  Alphabet alphabet;
  bool have_alphabet = false;
  std::vector<std::pair<World, Rational>> pairs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (!have_alphabet) {
      alphabet = Alphabet(toks);
      have_alphabet = true;
      continue;
    }
    if (toks.size() != 2)
      throw error("line " + std::to_string(line_no) + ": expected '<bitstring> <mass>'");
    pairs.emplace_back(world_from_bits(toks[0], alphabet), rational_from_string(toks[1]));
  }
  if (!have_alphabet) throw error("distribution file is empty");
  return ProbDist::from_pairs(alphabet, pairs);
}

void save_dist_text(const ProbDist& dist, std::ostream& out) {
  const Alphabet& a = dist.alphabet();
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a.letter(i);
  out << "\n";
  for (World w : dist.support().to_vector())
    out << world_to_bits(w, a) << " " << rational_to_string(dist.mass(w)) << "\n";
}

ProbDist load_dist_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
  std::vector<std::pair<World, Rational>> pairs;
  for (const auto& [bits, q] : j.at("mass").items())
    pairs.emplace_back(world_from_bits(bits, alphabet),
                       rational_from_string(q.get<std::string>()));
  return ProbDist::from_pairs(alphabet, pairs);
}

void save_dist_json(const ProbDist& dist, std::ostream& out) {
  nlohmann::json mass = nlohmann::json::object();
  for (World w : dist.support().to_vector())
    mass[world_to_bits(w, dist.alphabet())] = rational_to_string(dist.mass(w));
  nlohmann::json j{{"alphabet", dist.alphabet().letters()}, {"mass", mass}};
  out << j.dump(2) << "\n";
}

ProbDist load_dist_file(const std::string& path) {
  auto in = open_file(path);
  return has_json_extension(path) ? load_dist_json(in) : load_dist_text(in);
}

void save_dist_file(const ProbDist& dist, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write '" + path + "'");
  if (has_json_extension(path))
    save_dist_json(dist, out);
  else
    save_dist_text(dist, out);
}

RankingFile load_ranking_text(std::istream& in) {
  std::string line;
  RankingFile rf;
  bool have_alphabet = false;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (!have_alphabet) {
      rf.alphabet = Alphabet(toks);
      rf.ranks.assign(rf.alphabet.world_count(), 0);
      seen.assign(rf.alphabet.world_count(), false);
      have_alphabet = true;
      continue;
    }
    if (toks.size() != 2)
      throw error("line " + std::to_string(line_no) + ": expected '<bitstring> <rank>'");
    World w = world_from_bits(toks[0], rf.alphabet);
    if (seen[w]) throw error("world " + toks[0] + " ranked twice");
    seen[w] = true;
    try {
      rf.ranks[w] = static_cast<unsigned>(std::stoul(toks[1]));
    } catch (const std::exception&) {
      throw error("line " + std::to_string(line_no) + ": malformed rank '" + toks[1] + "'");
    }
  }
  if (!have_alphabet) throw error("ranking file is empty");
  for (std::size_t w = 0; w < seen.size(); ++w)
    if (!seen[w])
      throw error("ranking is not total: world " +
                  world_to_bits(static_cast<World>(w), rf.alphabet) + " is missing");
  return rf;
}

RankingFile load_ranking_file(const std::string& path) {
  auto in = open_file(path);
  return load_ranking_text(in);
}

}  // namespace kmbc
