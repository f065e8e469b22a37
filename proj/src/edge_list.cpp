#include "attralign/edge_list.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "attralign/errors.hpp"

namespace attralign {

namespace {

// Next non-blank, non-comment line; std::nullopt at end of input.
std::optional<std::string> next_line(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line;
  }
  return std::nullopt;
}

void read_two(const std::string& line, std::size_t line_no, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> a >> b) || (ss >> rest))
    throw FormatError("line " + std::to_string(line_no) + ": expected two integers, got '" +
                      line + "'");
}

}  // namespace

AttributedGraph read_edge_list(std::istream& in) {
  std::size_t line_no = 0;
  auto header = next_line(in, line_no);
  if (!header) throw FormatError("edge list: missing 'n m' header");
  std::uint64_t n = 0, m = 0;
  read_two(*header, line_no, n, m);

  GraphBuilder b(n, m);
  while (auto line = next_line(in, line_no)) {
    std::uint64_t s = 0, t = 0;
    read_two(*line, line_no, s, t);
    if (s == 0 || t == 0 || s > n + m || t > n + m)
      throw FormatError("line " + std::to_string(line_no) + ": label outside 1.." +
                        std::to_string(n + m));
    const bool s_user = s <= n;
    const bool t_user = t <= n;
    if (!s_user && !t_user)
      throw FormatError("line " + std::to_string(line_no) + ": attribute-attribute edge (" +
                        std::to_string(s) + ", " + std::to_string(t) + ")");
    if (s_user && t_user) {
      if (s == t)
        throw FormatError("line " + std::to_string(line_no) + ": self-loop on " +
                          std::to_string(s));
      b.add_user_edge(user(s - 1), user(t - 1));
    } else {
      const auto u = s_user ? s : t;
      const auto a = s_user ? t : s;
      b.add_attribute_edge(user(u - 1), attr(a - n - 1));
    }
  }
  return b.build();
}

void write_edge_list(std::ostream& out, const AttributedGraph& g) {
  const auto n = g.num_users();
  out << n << ' ' << g.num_attributes() << '\n';
  for (auto [u, v] : g.user_edges()) out << user_label(u) << ' ' << user_label(v) << '\n';
  for (auto [u, a] : g.attribute_edges()) out << user_label(u) << ' ' << attr_label(a, n) << '\n';
}

Permutation read_permutation(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<UserId> image;
  while (auto line = next_line(in, line_no)) {
    std::uint64_t i = 0, j = 0;
    read_two(*line, line_no, i, j);
    if (i != image.size() + 1)
      throw FormatError("line " + std::to_string(line_no) + ": expected user " +
                        std::to_string(image.size() + 1) + ", got " + std::to_string(i));
    if (j == 0) throw FormatError("line " + std::to_string(line_no) + ": label 0");
    image.push_back(user(j - 1));
  }
  try {
    return Permutation(std::move(image));
  } catch (const ContractViolation& e) {
    throw FormatError(std::string("permutation file: ") + e.what());
  }
}

void write_permutation(std::ostream& out, const Permutation& pi) {
  for (std::size_t i = 0; i < pi.size(); ++i)
    out << i + 1 << ' ' << user_label(pi(user(i))) << '\n';
}

}  // namespace attralign
