#include <algorithm>
#include <numeric>

#include "ludics/interaction.hpp"
#include "ludics/text.hpp"

namespace ludics {

CutNet make_cut_net(std::vector<Design> designs) {
  if (designs.empty()) throw CutNetError("empty net", CutNetProblem::NoMain);
  struct Occ {
    std::size_t design;
    bool left;
  };
  std::map<Address, std::vector<Occ>> occ;
  for (std::size_t k = 0; k < designs.size(); ++k) {
    const Base& b = designs[k].base;
    if (!b.single_sequent()) throw CutNetError("design with a multi-sequent base in a net", CutNetProblem::Address);
    const Sequent& s = b.sequents[0];
    if (s.left) occ[*s.left].push_back({k, true});
    for (const auto& a : s.right) occ[a].push_back({k, false});
  }
  for (auto i = occ.begin(); i != occ.end(); ++i)
    for (auto j = std::next(i); j != occ.end(); ++j)
      if (i->first.comparable(j->first))
        throw CutNetError("addresses " + to_string(i->first) + " and " + to_string(j->first) + " overlap",
                          CutNetProblem::Address);

  std::vector<std::size_t> parent(designs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  CutNet net;
  for (const auto& [a, os] : occ) {
    if (os.size() == 1) continue;
    if (os.size() > 2 || os[0].left == os[1].left || os[0].design == os[1].design)
      throw CutNetError("address " + to_string(a) + " is not a cut between two designs", CutNetProblem::Address);
    auto x = find(os[0].design), y = find(os[1].design);
    if (x == y) throw CutNetError("cut " + to_string(a) + " closes a cycle", CutNetProblem::Cyclic);
    parent[x] = y;
    net.cuts.push_back(a);
  }
  for (std::size_t k = 1; k < designs.size(); ++k)
    if (find(k) != find(0)) throw CutNetError("net is not connected", CutNetProblem::Disconnected);

  std::vector<std::size_t> mains;
  for (std::size_t k = 0; k < designs.size(); ++k)
    if (designs[k].positive()) mains.push_back(k);
  if (mains.empty()) throw CutNetError("net has no positive design", CutNetProblem::NoMain);
  if (mains.size() > 1) throw CutNetError("net has several positive designs", CutNetProblem::SeveralMains);
  net.main = mains[0];
  net.designs = std::move(designs);
  return net;
}

NormalizationResult normalize(const CutNet& net) { return normalize(net, net.main); }

NormalizationResult normalize(const CutNet& net, std::size_t distinguished) {
  const auto& ds = net.designs;
  if (distinguished >= ds.size()) throw DomainError("distinguished design out of range");
  NormalizationResult res;
  res.distinguished = distinguished;
  res.local_traces.assign(ds.size(), {});
  auto& traces = res.local_traces;

  std::map<Address, std::size_t> receiver;
  for (std::size_t k = 0; k < ds.size(); ++k)
    if (ds[k].base.sequents[0].left) receiver[*ds[k].base.sequents[0].left] = k;

  std::size_t bound = 2;
  for (const auto& d : ds) bound += d.chronicles.size();

  std::size_t cur = net.main;
  auto finish = [&](Outcome o) {
    res.outcome = o;
    res.trace = traces[distinguished];
    if (o == Outcome::Converged) {
      res.dual_trace = dual(res.trace);
    } else {
      // only the moves the rest of the net actually answered
      res.dual_trace.clear();
      for (const auto& a : res.trace) res.dual_trace.push_back(a.flipped());
      if (res.failing && !res.dual_trace.empty() && res.failing_design == distinguished) res.dual_trace.pop_back();
    }
    return res;
  };

  while (res.steps <= bound) {
    std::optional<Action> move;
    for (const auto& a : ds[cur].children(view(traces[cur])))
      if (a.positive()) move = a;
    if (!move) {
      res.failing_design = cur;
      res.reason = "design has no positive move";
      return finish(Outcome::Diverged);
    }
    ++res.steps;
    traces[cur].push_back(*move);
    if (move->daimon) return finish(Outcome::Converged);

    auto it = receiver.find(move->focus);
    if (it == receiver.end()) {
      res.failing = move;
      res.failing_design = cur;
      res.no_partner = true;
      res.reason = "no partner for " + to_string(*move);
      return finish(Outcome::Diverged);
    }
    std::size_t e = it->second;
    Action answer = Action::neg(move->focus, move->ram);
    Seq t = traces[e];
    t.push_back(answer);
    Seq prefix = view(t);
    prefix.pop_back();
    for (const auto& a : ds[e].children(prefix))
      if (a.negative() && a.focus == move->focus) res.offered.push_back(a.ram);
    if (std::find(res.offered.begin(), res.offered.end(), move->ram) == res.offered.end()) {
      res.failing = move;
      res.failing_design = cur;
      res.missed = move->ram;
      res.empty_offer = res.offered.empty();
      res.reason = res.empty_offer ? "partner has no action on " + to_string(move->focus)
                                   : "partner does not offer " + to_string(move->ram) + " on " +
                                         to_string(move->focus);
      return finish(Outcome::Diverged);
    }
    res.offered.clear();
    traces[e].push_back(answer);
    for (int i : move->ram) receiver[move->focus.child(i)] = cur;
    cur = e;
  }
  res.reason = "interaction exceeded its bound";
  return finish(Outcome::Diverged);
}

NormalizationResult interact(const Design& d, const std::vector<Design>& r) {
  std::vector<Design> all;
  all.reserve(r.size() + 1);
  all.push_back(d);
  all.insert(all.end(), r.begin(), r.end());
  std::size_t addresses = 0;
  for (const auto& x : all) addresses += x.base.addresses().size();
  CutNet net = make_cut_net(std::move(all));
  if (addresses != 2 * net.cuts.size())
    throw DomainError("counter-net does not match the base " + to_string(d.base));
  return normalize(net, 0);
}

bool ortho(const Design& d, const std::vector<Design>& r) { return interact(d, r).converged(); }

Seq trace(const Design& d, const std::vector<Design>& r) {
  auto res = interact(d, r);
  if (!res.converged()) throw DomainError("interaction diverges: " + res.reason);
  return res.trace;
}

}  // namespace ludics
