#pragma once

#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kmbc/change.hpp"
#include "kmbc/measures.hpp"
#include "kmbc/prob.hpp"

namespace kmbc::cli {

inline std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v;
  return os.str();
}

inline std::string measure_text(const KmValue& v, int decimals = 6) {
  return to_string(v, decimals);
}

inline nlohmann::json measure_json(const KmValue& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

inline std::string rational_text(const Rational& q, bool decimal) {
  if (!decimal) return rational_to_string(q);
  return fixed(q.get_d(), 6);
}

inline std::vector<std::string> world_bits_list(const WorldSet& ws, const Alphabet& a) {
  std::vector<std::string> out;
  for (World w : ws.to_vector()) out.push_back(world_to_bits(w, a));
  return out;
}

inline void print_world_list(std::ostream& os, const WorldSet& ws, const Alphabet& a,
                             const std::string& indent = "  ") {
  for (World w : ws.to_vector())
    os << indent << world_to_bits(w, a) << "  " << world_to_literals(w, a) << "\n";
}

}  // namespace kmbc::cli
