#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ludics/core.hpp"
#include "ludics/formula.hpp"

namespace ludics {

// Workspace files hold named items, one per statement:
//   design NAME base BASE { TREE* }       TREE = ACTION | ACTION { TREE* }
//   path NAME base BASE [ ACTION* ]
//   net NAME = { DESIGN, ... }
//   behaviour NAME = closure { DESIGN, ... }
//   formula NAME = FEXPR
// `//` starts a comment.
struct NamedPath {
  Base base;
  Seq seq;
  bool operator==(const NamedPath&) const = default;
};

struct Workspace {
  std::map<std::string, Design> designs;
  std::map<std::string, NamedPath> paths;
  std::map<std::string, std::vector<std::string>> nets;
  std::map<std::string, std::vector<std::string>> behaviours;
  std::map<std::string, Formula> formulas;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in file order

  bool operator==(const Workspace&) const = default;
};

Workspace parse_workspace(const std::string& text);
std::string print_workspace(const Workspace& ws);

enum ExitCode { ExitPositive = 0, ExitNegative = 1, ExitUsage = 2, ExitBudget = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ludics
