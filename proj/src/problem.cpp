#include "cgs/problem.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace cgs {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(body);
  while (std::getline(is, cur, ',')) {
    std::string name = trim(cur);
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view content, std::string name) {
  std::optional<std::vector<std::string>> params;
  std::optional<std::vector<std::string>> vars;
  std::optional<BlockOrder> order_x;
  std::optional<BlockOrder> order_a;
  std::vector<std::pair<std::string, std::size_t>> ideal_lines;  // text, line number
  bool in_ideal = false;

  std::istringstream is{std::string(content)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    bool is_key = colon != std::string::npos &&
                  (key == "parameters" || key == "variables" || key == "order_x" ||
                   key == "order_a" || key == "ideal");
    if (!is_key) {
      if (!in_ideal) throw parse_error("expected a section header", lineno, 1);
      ideal_lines.emplace_back(line, lineno);
      continue;
    }

    std::string body = trim(line.substr(colon + 1));
    if (key == "ideal") {
      if (in_ideal) throw parse_error("duplicate 'ideal' section", lineno, 1);
      if (!body.empty()) throw parse_error("'ideal:' takes no inline value", lineno, 1);
      in_ideal = true;
      continue;
    }
    if (in_ideal) throw parse_error("'" + key + "' must come before 'ideal'", lineno, 1);
    if (key == "parameters") {
      if (params) throw parse_error("duplicate 'parameters'", lineno, 1);
      params = split_names(body);
    } else if (key == "variables") {
      if (vars) throw parse_error("duplicate 'variables'", lineno, 1);
      vars = split_names(body);
    } else {
      auto o = block_order_from_string(body);
      if (!o) throw parse_error("unknown order '" + body + "'", lineno, 1);
      if (key == "order_x") {
        if (order_x) throw parse_error("duplicate 'order_x'", lineno, 1);
        order_x = o;
      } else {
        if (order_a) throw parse_error("duplicate 'order_a'", lineno, 1);
        order_a = o;
      }
    }
  }

  if (!vars || vars->empty()) throw parse_error("missing 'variables' declaration", lineno, 1);
  if (!in_ideal) throw parse_error("missing 'ideal' section", lineno, 1);
  auto param_names = params.value_or(std::vector<std::string>{});
  if (param_names.size() > 8) throw parse_error("too many parameters (limit is 8)", lineno, 1);

  RingPtr ring;
  try {
    ring = make_ring(*vars, param_names, order_x.value_or(BlockOrder::Lex),
                     order_a.value_or(BlockOrder::DegRevLex));
  } catch (const usage_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }

  std::vector<Polynomial> gens;
  gens.reserve(ideal_lines.size());
  for (const auto& [text, ln] : ideal_lines) {
    try {
      gens.push_back(parse_polynomial(text, ring));
    } catch (const parse_error& e) {
      throw parse_error(e.raw_message(), ln, e.column());
    }
  }

  return Problem{std::move(name), std::move(ring), std::move(gens)};
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = path;
  if (auto slash = base.find_last_of('/'); slash != std::string::npos) base = base.substr(slash + 1);
  if (auto dot = base.find_last_of('.'); dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return parse_problem(buf.str(), base);
}

}  // namespace cgs
