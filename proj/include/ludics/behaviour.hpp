#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ludics/core.hpp"

namespace ludics {

enum class Mode { Fast, Exhaustive };

const char* mode_name(Mode m);

// LUDICS_BUDGET overrides the default of one million search nodes
std::size_t default_budget();

struct BehaviourCache;

// A behaviour presented as the biorthogonal closure of finitely many generators.
class Behaviour {
 public:
  Behaviour(Base base, std::vector<Design> generators, Mode mode = Mode::Fast,
            std::size_t budget = default_budget());

  const Base& base() const { return base_; }
  const std::vector<Design>& generators() const { return generators_; }
  Mode mode() const { return mode_; }
  std::size_t budget() const { return budget_; }
  bool positive() const { return base_.positive(); }
  // ramifications used to complete counter-designs
  const std::set<Ramification>& universe() const { return universe_; }

  Behaviour with_mode(Mode m) const { return Behaviour(base_, generators_, m, budget_); }

  BehaviourCache& cache() const { return *cache_; }

 private:
  Base base_;
  std::vector<Design> generators_;
  Mode mode_;
  std::size_t budget_;
  std::set<Ramification> universe_;
  std::shared_ptr<BehaviourCache> cache_;
};

enum class VisitReason {
  Visitable,
  NotAPath,
  NotPositiveEnded,
  DualNotAPath,
  NotInGenerator,
  CounterDesignFails,
};

const char* visit_reason_name(VisitReason r);

struct VisitReport {
  bool visitable = false;
  VisitReason reason = VisitReason::NotAPath;
  std::optional<std::size_t> generator;          // a generator containing the path
  std::optional<std::size_t> failing_generator;  // first generator the counter-design diverges against
  std::vector<Design> counter_design;            // completed design of the dual path
  std::string detail;
};

VisitReport visit(const Seq& p, const Behaviour& b);
bool visitable(const Seq& p, const Behaviour& b);

struct VisitableSet {
  std::set<Seq> paths;
  // generator index each path was drawn from; absent for the bare daimon or empty path
  std::map<Seq, std::optional<std::size_t>> provenance;
};

const VisitableSet& visitable_paths(const Behaviour& b);
std::set<Seq> dual_visitable_paths(const Behaviour& b);

// orthogonal of B presented by its counter-incarnation (simple bases only)
Behaviour orthogonal(const Behaviour& b);

// daimon-maximal material designs of the orthogonal (simple bases only)
const std::vector<Design>& counter_incarnation(const Behaviour& b);

struct Incarnation {
  std::vector<Design> designs;
  std::vector<std::string> warnings;
};

const Incarnation& incarnation(const Behaviour& b);
// material designs without the daimon
std::vector<Design> material_designs(const Behaviour& b);

std::set<Ramification> directory(const Behaviour& b);

std::set<Seq> trivial_chronicles(const Behaviour& b);
bool is_regular_path(const Seq& p, const Behaviour& b);
std::set<Seq> regular_paths(const Behaviour& b);

enum class WitnessKind { None, Chronicle, Shuffle };
enum class Side { Primal, Dual };

struct RegularityReport {
  bool regular = true;
  WitnessKind kind = WitnessKind::None;
  Side side = Side::Primal;
  Seq witness;
  Seq left, right;  // shuffle operands
  std::string detail;
};

RegularityReport is_regular(const Behaviour& b);

struct BoundsReport {
  bool essentially_finite = true;
  bool uniformly_bounded = true;
  std::size_t material_count = 0;
  std::size_t total_size = 0;
  std::size_t max_slice = 0;
};

BoundsReport bounds(const Behaviour& b);

}  // namespace ludics
