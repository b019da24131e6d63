#pragma once

#include <stdexcept>
#include <string>

#include "ludics/core.hpp"

namespace ludics {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int l, int c = 0) : std::runtime_error(what), line(l), column(c) {}
};

// Textual forms shared by the CLI and diagnostics:
//   address  xi.0.1      action  +xi.0{0,1}  -sigma{}  #
//   base     |- xi, sigma   xi |- sigma   ;-separated for several sequents

std::string to_string(const Address& a);
std::string to_string(const Ramification& r);
std::string to_string(const Action& a);
std::string to_string(const Seq& s);
std::string to_string(const Sequent& s);
std::string to_string(const Base& b);

// design body as nested trees: { +xi{0,1} { -xi.0{0} { ... } -xi.1{0} } }
std::string design_body(const Design& d);

Address parse_address(const std::string& s);
Action parse_action(const std::string& s);
Seq parse_seq(const std::string& s);
Base parse_base(const std::string& s);

}  // namespace ludics
