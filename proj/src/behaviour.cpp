#include <algorithm>
#include <cstdlib>
#include <functional>

#include "ludics/behaviour.hpp"
#include "ludics/interaction.hpp"
#include "ludics/text.hpp"

namespace ludics {

struct BehaviourCache {
  std::optional<VisitableSet> visitable;
  std::optional<std::vector<Design>> counter;
  std::optional<Incarnation> incarnation;
  std::optional<std::set<Seq>> trivial;
  std::map<Seq, bool> visit_memo;
};

const char* mode_name(Mode m) { return m == Mode::Fast ? "fast" : "exhaustive"; }

std::size_t default_budget() {
  if (const char* env = std::getenv("LUDICS_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

Behaviour::Behaviour(Base base, std::vector<Design> generators, Mode mode, std::size_t budget)
    : base_(std::move(base)), mode_(mode), budget_(budget), cache_(std::make_shared<BehaviourCache>()) {
  validate_base(base_);
  if (!base_.single_sequent()) throw DomainError("a behaviour has a single-sequent base");
  if (generators.empty()) throw DomainError("a behaviour needs at least one generator");
  for (const auto& g : generators) {
    if (g.base != base_)
      throw DomainError("generator on " + to_string(g.base) + " in a behaviour on " + to_string(base_));
    validate_design(g);
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
  universe_ = ramification_universe(generators_);
}

const char* visit_reason_name(VisitReason r) {
  switch (r) {
    case VisitReason::Visitable: return "visitable";
    case VisitReason::NotAPath: return "not-a-path";
    case VisitReason::NotPositiveEnded: return "not-positive-ended";
    case VisitReason::DualNotAPath: return "dual-not-a-path";
    case VisitReason::NotInGenerator: return "not-a-path-of-generator";
    case VisitReason::CounterDesignFails: return "counter-design-fails";
  }
  return "?";
}

namespace {

class Budget {
 public:
  Budget(std::size_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}
  void tick() {
    if (++used_ > limit_)
      throw ResourceError(what_ + " exceeded the budget of " + std::to_string(limit_) + " nodes", limit_);
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
  std::string what_;
};

std::vector<Design> completed_counter(const Seq& p, const Behaviour& b) {
  Net w = design_from_paths({dual(p)}, dual_base(b.base()));
  for (auto& d : w.designs) d = complete(d, b.universe());
  return w.designs;
}

// every chronicle of R1 is in R2 or cuts a chronicle of R2 short with the daimon; R1 may drop branches
bool daimon_covered(const Design& r1, const Design& r2) {
  if (r1 == r2) return false;
  for (const auto& c : r1.chronicles) {
    if (r2.contains(c)) continue;
    if (!c.back().daimon) return false;
    Seq w(c.begin(), c.end() - 1);
    if (!w.empty() && !r2.contains(w)) return false;
  }
  return true;
}

// R1 arises from R2 by replacing positive actions, with their subtrees, by the daimon.
// Every negative branch of R2 must survive unless a daimon was placed above it.
// Anything orthogonal to R2 is then orthogonal to R1.
bool is_truncation(const Design& r1, const Design& r2) {
  if (!daimon_covered(r1, r2)) return false;
  for (const auto& c : r2.chronicles) {
    if (r1.contains(c)) continue;
    bool cut = false;
    for (std::size_t n = 0; n < c.size() && !cut; ++n) {
      if (!c[n].positive()) continue;
      Seq w(c.begin(), c.begin() + n);
      w.push_back(Action::dai());
      cut = r1.contains(w);
    }
    if (!cut) return false;
  }
  return true;
}

std::vector<Design> daimon_maximal(const std::set<Design>& found) {
  std::vector<Design> out;
  for (const auto& r : found) {
    bool dominated = false;
    for (const auto& s : found)
      if (is_truncation(r, s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(r);
  }
  return out;
}

// Enumerates counter-designs R orthogonal to every generator, built exactly from the
// chronicles the generators visit. R's positive choices are explored depth first.
class CounterSearch {
 public:
  explicit CounterSearch(const Behaviour& b)
      : b_(b), rbase_(dual_base(b.base())), budget_(b.budget(), "counter-incarnation search") {}

  std::vector<Design> run() {
    search(0);
    return daimon_maximal(found_);
  }

 private:
  enum class Status { Converged, Diverged, Need };
  struct Sim {
    Status status;
    Seq rtrace;
    Seq need;
    std::vector<Action> options;
  };

  Sim simulate(const Design& g) const {
    Sim s{Status::Diverged, {}, {}, {}};
    Seq tg;
    bool g_turn = b_.positive();
    for (;;) {
      if (g_turn) {
        std::optional<Action> move;
        for (const auto& a : g.children(view(tg)))
          if (a.positive()) move = a;
        if (!move) return s;
        if (move->daimon) {
          s.status = Status::Converged;
          return s;
        }
        tg.push_back(*move);
        s.rtrace.push_back(move->flipped());
      } else {
        Seq c = view(s.rtrace);
        auto it = assign_.find(c);
        if (it == assign_.end()) {
          s.status = Status::Need;
          s.need = c;
          s.options = options(c, s.rtrace, tg, g);
          return s;
        }
        const Action& rho = it->second;
        s.rtrace.push_back(rho);
        if (rho.daimon) {
          s.status = Status::Converged;
          return s;
        }
        tg.push_back(rho.flipped());
        if (!g.contains(view(tg))) return s;
      }
      g_turn = !g_turn;
    }
  }

  std::vector<Action> options(const Seq& c, const Seq& rtrace, const Seq& tg, const Design& g) const {
    std::vector<Action> out;
    std::set<Address> used;
    for (const auto& a : rtrace)
      if (a.proper()) used.insert(a.focus);
    std::vector<Address> addrs;
    if (c.empty() && rbase_.positive()) addrs.push_back(rbase_.main_address());
    for (const auto& k : c)
      if (k.negative())
        for (int i : k.ram) addrs.push_back(k.focus.child(i));
    for (const auto& a : addrs) {
      if (used.count(a)) continue;
      Seq t = tg;
      t.push_back(Action::neg(a, {}));
      Seq prefix = view(t);
      prefix.pop_back();
      for (const auto& k : g.children(prefix))
        if (k.negative() && k.focus == a) out.push_back(Action::pos(a, k.ram));
    }
    out.push_back(Action::dai());
    return out;
  }

  void search(std::size_t k) {
    budget_.tick();
    const auto& gens = b_.generators();
    if (k == gens.size()) {
      record();
      return;
    }
    Sim s = simulate(gens[k]);
    if (s.status == Status::Converged) {
      search(k + 1);
    } else if (s.status == Status::Need) {
      for (const auto& o : s.options) {
        assign_[s.need] = o;
        search(k);
        assign_.erase(s.need);
      }
    }
  }

  void record() {
    Design r{rbase_, {}};
    for (const auto& g : b_.generators()) {
      Sim s = simulate(g);
      auto vs = views_of_prefixes(s.rtrace);
      r.chronicles.insert(vs.begin(), vs.end());
    }
    if (!design_violation(r)) found_.insert(std::move(r));
  }

  const Behaviour& b_;
  Base rbase_;
  Budget budget_;
  std::map<Seq, Action> assign_;
  std::set<Design> found_;
};

bool exhaustive_visit_check(const Seq& p, const Behaviour& b, VisitReport& r) {
  Design d = complete(design_from_paths_single({p}, b.base()), b.universe());
  const auto& ci = counter_incarnation(b);
  for (std::size_t k = 0; k < ci.size(); ++k)
    if (!ortho(d, ci[k])) {
      r.reason = VisitReason::CounterDesignFails;
      r.detail = "completed design of the path diverges against counter-incarnation member " + std::to_string(k);
      return false;
    }
  return true;
}

std::set<Action> alphabet(const std::vector<Design>& ds, bool flip) {
  std::set<Action> out;
  for (const auto& d : ds)
    for (const auto& c : d.chronicles)
      for (const auto& a : c)
        if (a.proper()) out.insert(flip ? a.flipped() : a);
  return out;
}

// positive-ended extensions of p by one or two actions drawn from an alphabet
template <class Accept>
void extend_paths(const Seq& start, const Base& base, const std::set<Action>& alpha, Budget& budget,
                  Accept accept) {
  std::function<void(Seq&)> go = [&](Seq& p) {
    budget.tick();
    std::set<Address> used;
    for (const auto& a : p)
      if (a.proper()) used.insert(a.focus);
    auto try_pos = [&](const Action& k) {
      p.push_back(k);
      if (validate_path(p, base).ok() && accept(p) && k.proper()) go(p);
      p.pop_back();
    };
    if (p.empty() && base.positive()) {
      for (const auto& k : alpha)
        if (k.positive() && !used.count(k.focus)) try_pos(k);
      try_pos(Action::dai());
      return;
    }
    for (const auto& n : alpha) {
      if (!n.negative() || used.count(n.focus)) continue;
      p.push_back(n);
      if (validate_path(p, base).ok()) {
        for (const auto& k : alpha)
          if (k.positive() && !used.count(k.focus) && k.focus != n.focus) try_pos(k);
        try_pos(Action::dai());
      }
      p.pop_back();
    }
  };
  Seq p = start;
  go(p);
}

}  // namespace

VisitReport visit(const Seq& p, const Behaviour& b) {
  VisitReport r;
  auto rep = validate_path(p, b.base());
  if (!rep.ok()) {
    r.reason = VisitReason::NotAPath;
    r.detail = std::string(condition_name(rep.condition)) + " at " + std::to_string(rep.index) + ": " + rep.detail;
    return r;
  }
  if (!positive_ended(p)) {
    r.reason = VisitReason::NotPositiveEnded;
    return r;
  }
  auto drep = validate_path(dual(p), dual_base(b.base()));
  if (!drep.ok()) {
    r.reason = VisitReason::DualNotAPath;
    r.detail = std::string(condition_name(drep.condition)) + " at " + std::to_string(drep.index) + ": " + drep.detail;
    return r;
  }
  const auto& gens = b.generators();
  for (std::size_t k = 0; k < gens.size() && !r.generator; ++k)
    if (in_design_or_truncation(p, gens[k])) r.generator = k;
  if (b.mode() == Mode::Fast && !r.generator) {
    r.reason = VisitReason::NotInGenerator;
    return r;
  }
  r.counter_design = completed_counter(p, b);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!ortho(gens[k], r.counter_design)) {
      r.reason = VisitReason::CounterDesignFails;
      r.failing_generator = k;
      r.detail = "completed dual diverges against generator " + std::to_string(k);
      return r;
    }
  if (b.mode() == Mode::Exhaustive && !exhaustive_visit_check(p, b, r)) return r;
  r.visitable = true;
  r.reason = VisitReason::Visitable;
  return r;
}

bool visitable(const Seq& p, const Behaviour& b) {
  auto& memo = b.cache().visit_memo;
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  bool v = visit(p, b).visitable;
  memo.emplace(p, v);
  return v;
}

const VisitableSet& visitable_paths(const Behaviour& b) {
  auto& cache = b.cache();
  if (cache.visitable) return *cache.visitable;
  VisitableSet vs;
  const auto& gens = b.generators();
  auto admit = [&](const Seq& p, std::optional<std::size_t> prov) {
    if (vs.paths.count(p)) return true;
    if (!visitable(p, b)) return false;
    vs.paths.insert(p);
    vs.provenance.emplace(p, prov);
    return true;
  };

  if (b.mode() == Mode::Fast) {
    if (b.positive()) admit(Seq{Action::dai()}, std::nullopt);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (const auto& p : paths_of_design(gens[k])) {
        admit(p, k);
        for (std::size_t n = 1; n < p.size(); ++n)
          if (p[n - 1].negative()) {
            Seq t(p.begin(), p.begin() + n);
            t.push_back(Action::dai());
            admit(t, k);
          }
      }
    }
  } else {
    Budget budget(b.budget(), "visitable path enumeration");
    auto alpha = alphabet(gens, false);
    auto ca = alphabet(counter_incarnation(b), true);
    alpha.insert(ca.begin(), ca.end());
    if (!b.positive()) admit(Seq{}, std::nullopt);
    extend_paths({}, b.base(), alpha, budget, [&](const Seq& p) {
      std::optional<std::size_t> prov;
      for (std::size_t k = 0; k < gens.size() && !prov; ++k)
        if (in_design_or_truncation(p, gens[k])) prov = k;
      return admit(p, prov);
    });
  }
  cache.visitable = std::move(vs);
  return *cache.visitable;
}

std::set<Seq> dual_visitable_paths(const Behaviour& b) {
  std::set<Seq> out;
  for (const auto& p : visitable_paths(b).paths) out.insert(dual(p));
  return out;
}

const std::vector<Design>& counter_incarnation(const Behaviour& b) {
  auto& cache = b.cache();
  if (cache.counter) return *cache.counter;
  if (!b.base().simple()) throw DomainError("counter-incarnation needs a simple base");
  cache.counter = CounterSearch(b).run();
  return *cache.counter;
}

Behaviour orthogonal(const Behaviour& b) {
  return Behaviour(dual_base(b.base()), counter_incarnation(b), b.mode(), b.budget());
}

namespace {

std::set<Design> fast_incarnation(const Behaviour& b) {
  std::set<Design> out;
  if (b.positive()) out.insert(dai_design(b.base().main_address()));
  const auto& V = visitable_paths(b).paths;
  for (const auto& g : b.generators()) {
    std::set<Seq> mine;
    for (const auto& p : paths_of_design(g))
      if (V.count(p)) mine.insert(p);
    if (mine.empty()) continue;
    if (g.is_dai()) {
      out.insert(g);
      continue;
    }
    out.insert(design_from_paths_single(mine, b.base()));
  }
  return out;
}

// designs taking, below a shared first action, each component from possibly different designs
std::set<Design> recombinations(const std::set<Design>& designs) {
  std::set<Design> out;
  std::map<Action, std::vector<const Design*>> groups;
  for (const auto& d : designs)
    if (!d.is_dai() && d.positive() && !d.empty()) groups[d.first_actions().front()].push_back(&d);
  for (const auto& [first, ds] : groups) {
    if (ds.size() < 2) continue;
    std::vector<std::vector<std::set<Seq>>> parts;
    for (int i : first.ram) {
      Address a = first.focus.child(i);
      std::set<std::set<Seq>> comps;
      for (const Design* d : ds) {
        std::set<Seq> comp;
        for (const auto& c : d->chronicles)
          if (c.size() >= 2 && c[1].focus == a) comp.insert(c);
        comps.insert(comp);
      }
      parts.emplace_back(comps.begin(), comps.end());
    }
    std::vector<std::size_t> idx(parts.size(), 0);
    for (;;) {
      Design d{designs.begin()->base, {Seq{first}}};
      for (std::size_t k = 0; k < parts.size(); ++k) d.chronicles.insert(parts[k][idx[k]].begin(), parts[k][idx[k]].end());
      if (!designs.count(d) && !design_violation(d)) out.insert(d);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == parts[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

}  // namespace

const Incarnation& incarnation(const Behaviour& b) {
  auto& cache = b.cache();
  if (cache.incarnation) return *cache.incarnation;
  Incarnation inc;
  auto fast = fast_incarnation(b);
  std::set<Design> all = fast;
  if (b.mode() == Mode::Exhaustive && b.base().simple()) {
    std::set<Design> extra;
    Behaviour perp = orthogonal(b);
    for (const auto& d : counter_incarnation(perp)) extra.insert(d);
    const auto& ci = counter_incarnation(b);
    for (const auto& d : recombinations(fast)) {
      bool inside = std::all_of(ci.begin(), ci.end(), [&](const Design& r) { return ortho(d, r); });
      if (inside) extra.insert(d);
    }
    for (const auto& d : extra)
      if (!all.count(d)) {
        bool truncation = std::any_of(all.begin(), all.end(), [&](const Design& x) { return daimon_covered(d, x); });
        if (truncation) continue;
        inc.warnings.push_back("material design found only by exhaustive search: " + design_body(d));
        all.insert(d);
      }
  }
  inc.designs.assign(all.begin(), all.end());
  cache.incarnation = std::move(inc);
  return *cache.incarnation;
}

std::vector<Design> material_designs(const Behaviour& b) {
  std::vector<Design> out;
  for (const auto& d : incarnation(b).designs)
    if (!d.is_dai()) out.push_back(d);
  return out;
}

std::set<Ramification> directory(const Behaviour& b) {
  std::set<Ramification> out;
  for (const auto& d : material_designs(b))
    for (const auto& a : d.first_actions())
      if (a.proper()) out.insert(a.ram);
  return out;
}

std::set<Seq> trivial_chronicles(const Behaviour& b) {
  auto& cache = b.cache();
  if (cache.trivial) return *cache.trivial;
  std::set<Seq> out;
  for (const auto& d : incarnation(b).designs)
    for (const auto& c : d.chronicles)
      if (c.back().proper()) out.insert(justifier_chain(c, c.size() - 1));
  cache.trivial = out;
  return out;
}

namespace {

bool chains_trivial(const Seq& p, const std::set<Seq>& trivial, std::size_t from) {
  for (std::size_t i = from; i < p.size(); ++i)
    if (p[i].proper() && !trivial.count(justifier_chain(p, i))) return false;
  return true;
}

}  // namespace

bool is_regular_path(const Seq& p, const Behaviour& b) {
  if (!validate_path(p, b.base()).ok() || !positive_ended(p)) return false;
  if (!is_reversible(p, b.base()).ok()) return false;
  return chains_trivial(p, trivial_chronicles(b), 0);
}

std::set<Seq> regular_paths(const Behaviour& b) {
  auto trivial = trivial_chronicles(b);
  std::set<Action> alpha;
  for (const auto& c : trivial) alpha.insert(c.begin(), c.end());
  std::set<Seq> out;
  if (!b.positive()) out.insert(Seq{});
  Budget budget(b.budget(), "regular path enumeration");
  extend_paths({}, b.base(), alpha, budget, [&](const Seq& p) {
    std::size_t from = p.size() >= 2 ? p.size() - 2 : 0;
    if (!chains_trivial(p, trivial, from)) return false;
    if (!is_reversible(p, b.base()).ok()) return false;
    out.insert(p);
    return true;
  });
  return out;
}

RegularityReport is_regular(const Behaviour& b) {
  if (!b.base().simple()) throw DomainError("regularity test needs a simple base");
  RegularityReport r;
  auto fail = [&](WitnessKind k, Side s, Seq w, std::string detail) {
    r.regular = false;
    r.kind = k;
    r.side = s;
    r.witness = std::move(w);
    r.detail = std::move(detail);
    return r;
  };

  for (const auto& d : incarnation(b).designs)
    for (const auto& c : d.chronicles)
      if (c.back().positive() && !visitable(c, b))
        return fail(WitnessKind::Chronicle, Side::Primal, c, "chronicle of a material design is not visitable");

  for (const auto& d : counter_incarnation(b))
    for (const auto& c : d.chronicles)
      if (c.back().positive() && !visitable(dual(c), b))
        return fail(WitnessKind::Chronicle, Side::Dual, c,
                    "chronicle of a counter-incarnation design is not visitable in the orthogonal");

  const auto& V = visitable_paths(b).paths;
  Base db = dual_base(b.base());
  for (auto i = V.begin(); i != V.end(); ++i)
    for (auto j = std::next(i); j != V.end(); ++j) {
      auto s = try_shuffle(*i, *j);
      if (!s) continue;
      for (const auto& x : *s) {
        if (V.count(x) || !is_reversible(x, b.base()).ok() || visitable(x, b)) continue;
        fail(WitnessKind::Shuffle, Side::Primal, x, "reversible shuffle of visitable paths is not visitable");
        r.left = *i;
        r.right = *j;
        return r;
      }
    }

  std::set<Seq> D;
  for (const auto& p : V) D.insert(dual(p));
  for (auto i = D.begin(); i != D.end(); ++i)
    for (auto j = std::next(i); j != D.end(); ++j) {
      auto s = try_shuffle(*i, *j);
      if (!s) continue;
      for (const auto& x : *s) {
        if (D.count(x) || !is_reversible(x, db).ok() || visitable(dual(x), b)) continue;
        fail(WitnessKind::Shuffle, Side::Dual, x, "reversible shuffle of dual visitable paths is not visitable");
        r.left = *i;
        r.right = *j;
        return r;
      }
    }
  return r;
}

BoundsReport bounds(const Behaviour& b) {
  BoundsReport r;
  for (const auto& d : incarnation(b).designs) {
    ++r.material_count;
    r.total_size += d.size();
    r.max_slice = std::max(r.max_slice, max_slice_size(d));
  }
  r.essentially_finite = true;
  r.uniformly_bounded = r.essentially_finite;
  return r;
}

}  // namespace ludics
