#pragma once

#include <map>
#include <optional>

#include "ludics/core.hpp"

namespace ludics {

enum class CutNetProblem { Address, Cyclic, Disconnected, NoMain, SeveralMains };

struct CutNetError : DomainError {
  CutNetProblem problem;
  CutNetError(const std::string& what, CutNetProblem p) : DomainError(what), problem(p) {}
};

struct CutNet {
  std::vector<Design> designs;
  std::vector<Address> cuts;
  std::size_t main = 0;
};

// checks closedness, acyclicity, connectivity and a unique main design
CutNet make_cut_net(std::vector<Design> designs);

enum class Outcome { Converged, Diverged };

struct NormalizationResult {
  Outcome outcome = Outcome::Diverged;
  std::size_t distinguished = 0;
  Seq trace;       // local trace of the distinguished design
  Seq dual_trace;  // what the rest of the net played against it
  std::vector<Seq> local_traces;
  std::size_t steps = 0;  // positive moves, the final daimon included

  // divergence diagnostics
  std::optional<Action> failing;  // the positive action nobody could answer
  std::optional<std::size_t> failing_design;
  Ramification missed;
  std::vector<Ramification> offered;
  bool no_partner = false;
  bool empty_offer = false;
  std::string reason;

  bool converged() const { return outcome == Outcome::Converged; }
};

NormalizationResult normalize(const CutNet& net);
NormalizationResult normalize(const CutNet& net, std::size_t distinguished);

// D against the net R: every address of D's base is cut with R and conversely
NormalizationResult interact(const Design& d, const std::vector<Design>& r);
bool ortho(const Design& d, const std::vector<Design>& r);
inline bool ortho(const Design& d, const Design& e) { return ortho(d, std::vector<Design>{e}); }
// throws DomainError when the interaction diverges
Seq trace(const Design& d, const std::vector<Design>& r);

}  // namespace ludics
