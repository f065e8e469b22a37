#include <charconv>
#include <istream>
#include <string>
#include <vector>

#include "attralign/errors.hpp"
#include "attralign/harness.hpp"

namespace attralign {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    auto item = trim(std::string_view(value).substr(start, comma == std::string::npos
                                                               ? std::string::npos
                                                               : comma - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& key) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw FormatError("config key '" + key + "': cannot parse '" + text + "'");
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& value, const std::string& key) {
  std::vector<T> out;
  for (const auto& item : split_list(value)) out.push_back(parse_number<T>(item, key));
  if (out.empty()) throw FormatError("config key '" + key + "' has no values");
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  auto& st = cfg.settings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("config line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(std::string_view(line).substr(0, eq));
    const auto value = trim(std::string_view(line).substr(eq + 1));
    auto one = [&]<typename T>(T) { return parse_number<T>(value, key); };

    if (key == "n") cfg.n = parse_list<std::size_t>(value, key);
    else if (key == "m") cfg.m = parse_list<std::size_t>(value, key);
    else if (key == "p") cfg.p = parse_list<double>(value, key);
    else if (key == "q") cfg.q = parse_list<double>(value, key);
    else if (key == "s_u") cfg.s_u = parse_list<double>(value, key);
    else if (key == "s_a") cfg.s_a = parse_list<double>(value, key);
    else if (key == "N") cfg.total = parse_list<std::size_t>(value, key);
    else if (key == "alpha") cfg.alpha = parse_list<double>(value, key);
    else if (key == "s") cfg.s = parse_list<double>(value, key);
    else if (key == "model") {
      if (value == "seeded") cfg.seeded_model = true;
      else if (value == "attributed") cfg.seeded_model = false;
      else throw FormatError("config key 'model': expected attributed or seeded");
    } else if (key == "algo") {
      cfg.algos.clear();
      for (const auto& name : split_list(value)) cfg.algos.push_back(parse_algorithm(name));
    } else if (key == "trials") cfg.trials = one(std::size_t{});
    else if (key == "seed") cfg.master_seed = one(std::uint64_t{});
    else if (key == "epsilon") st.epsilon = one(double{});
    else if (key == "tau") st.tau = one(double{});
    else if (key == "delta_x") st.delta_x = one(double{});
    else if (key == "delta_y") st.delta_y = one(double{});
    else if (key == "x") st.x = one(double{});
    else if (key == "y") st.y = one(double{});
    else if (key == "z") st.z = one(double{});
    else if (key == "b") st.plan.b = one(double{});
    else if (key == "d") st.plan.d = one(unsigned{});
    else if (key == "l") st.plan.l = one(unsigned{});
    else if (key == "eta") st.plan.eta = one(double{});
    else if (key == "scan") {
      if (value == "exhaustive") st.scan = RemovalScan::Exhaustive;
      else if (value == "local") st.scan = RemovalScan::Local;
      else throw FormatError("config key 'scan': expected exhaustive or local");
    } else {
      throw FormatError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace attralign
