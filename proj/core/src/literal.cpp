#include "sixtermk/literal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sixtermk {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '+') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw std::invalid_argument("group literal: bad number '" + s + "'");
  return Int(s);
}

}  // namespace

FinAbGroup parse_group_literal(const std::string& text) {
  std::string s = strip_spaces(text);
  FinAbGroup g;
  if (s.empty() || s == "0") return g;
  for (const std::string& term : split_terms(s)) {
    if (term == "0") continue;
    if (term == "Z") {
      g.rank += 1;
    } else if (term.rfind("Z^", 0) == 0) {
      Int r = parse_int(term.substr(2));
      if (r < 0) throw std::invalid_argument("group literal: negative rank");
      g.rank += static_cast<std::size_t>(r);
    } else if (term.rfind("Z/", 0) == 0) {
      Int d = parse_int(term.substr(2));
      if (d < 2)
        throw std::invalid_argument("group literal: torsion order must be >= 2");
      g.torsion.push_back(d);
    } else {
      throw std::invalid_argument("group literal: bad term '" + term + "'");
    }
  }
  // Renormalize: the grammar does not promise invariant-factor form.
  std::vector<FinAbGroup> parts;
  parts.push_back(FinAbGroup::free_group(g.rank));
  for (const auto& d : g.torsion) parts.push_back(FinAbGroup::cyclic(d));
  return direct_sum(parts).group;
}

std::string format_group(const FinAbGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (g.rank == 1) {
    sep();
    os << "Z";
  } else if (g.rank > 1) {
    sep();
    os << "Z^" << g.rank;
  }
  for (const auto& d : g.torsion) {
    sep();
    os << "Z/" << d;
  }
  return os.str();
}

}  // namespace sixtermk
