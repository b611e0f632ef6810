#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgs/polynomial.hpp"

namespace cgs {

struct Problem {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> generators;
};

// Problem file:
//   # comment
//   parameters: c, r        (optional, default none; at most 8)
//   variables: x, y
//   order_x: lex            (optional, lex | degrevlex, default lex)
//   order_a: degrevlex      (optional, default degrevlex)
//   ideal:
//     x^2 + y^2 - 1
//     (x - c)^2 + y^2 - r
Problem parse_problem(std::string_view content, std::string name = "");

Problem load_problem_file(const std::string& path);

}  // namespace cgs
