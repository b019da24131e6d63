#include <algorithm>
#include <functional>
#include <map>

#include "ludics/core.hpp"
#include "ludics/text.hpp"

namespace ludics {

namespace {

std::vector<Action> children_of(const std::set<Seq>& chs, const Seq& c) {
  std::vector<Action> out;
  for (auto it = chs.upper_bound(c); it != chs.end() && is_prefix(c, *it); ++it)
    if (it->size() == c.size() + 1) out.push_back(it->back());
  return out;
}

}  // namespace

bool Design::is_dai() const {
  return base.positive() && chronicles.size() == 1 && chronicles.begin()->size() == 1 &&
         chronicles.begin()->front().daimon;
}

std::set<Seq> Design::maximal() const {
  std::set<Seq> out;
  for (auto it = chronicles.begin(); it != chronicles.end(); ++it) {
    auto next = std::next(it);
    if (next == chronicles.end() || !is_prefix(*it, *next)) out.insert(*it);
  }
  return out;
}

std::vector<Action> Design::first_actions() const { return children_of(chronicles, {}); }

std::vector<Action> Design::children(const Seq& c) const { return children_of(chronicles, c); }

std::size_t Design::size() const {
  return static_cast<std::size_t>(
      std::count_if(chronicles.begin(), chronicles.end(), [](const Seq& c) { return c.back().proper(); }));
}

Base Net::base() const {
  std::vector<Sequent> s;
  for (const auto& d : designs) s.insert(s.end(), d.base.sequents.begin(), d.base.sequents.end());
  std::sort(s.begin(), s.end());
  return Base(std::move(s));
}

std::set<Seq> Net::chronicles() const {
  std::set<Seq> out;
  for (const auto& d : designs) out.insert(d.chronicles.begin(), d.chronicles.end());
  return out;
}

Design make_design(Base b, std::set<Seq> chronicles) {
  Design d{std::move(b), std::move(chronicles)};
  validate_design(d);
  return d;
}

Design dai_design(const Address& a) { return Design{Base::pos(a), {Seq{Action::dai()}}}; }

Design empty_design(const Address& a) { return Design{Base::neg(a), {}}; }

bool coherent(const Seq& c1, const Seq& c2) {
  std::size_t k = 0;
  while (k < c1.size() && k < c2.size() && c1[k] == c2[k]) ++k;
  if (k == c1.size() || k == c2.size()) return true;
  if (c1[k].positive() || c2[k].positive()) return false;
  if (c1[k].focus == c2[k].focus) return true;
  for (std::size_t i = k + 1; i < c1.size(); ++i)
    for (std::size_t j = k + 1; j < c2.size(); ++j)
      if (c1[i].proper() && c2[j].proper() && c1[i].focus == c2[j].focus) return false;
  return true;
}

bool coherent(const Seq& c1, const Base& b1, const Seq& c2, const Base& b2) {
  if (b1 != b2) throw DomainError("coherence of chronicles on different bases");
  return coherent(c1, c2);
}

std::optional<std::string> design_violation(const Design& d) {
  try {
    validate_base(d.base);
  } catch (const DomainError& e) {
    return std::string(e.what());
  }
  if (!d.base.single_sequent()) return "a design has a single-sequent base";
  for (const auto& c : d.chronicles) {
    auto r = validate_chronicle(c, d.base);
    if (!r.ok())
      return to_string(c) + " is not a chronicle (" + condition_name(r.condition) + " at " +
             std::to_string(r.index) + ")";
    for (std::size_t n = 1; n < c.size(); ++n)
      if (!d.chronicles.count(Seq(c.begin(), c.begin() + n)))
        return "not prefix-closed: missing prefix of " + to_string(c);
  }
  for (auto i = d.chronicles.begin(); i != d.chronicles.end(); ++i)
    for (auto j = std::next(i); j != d.chronicles.end(); ++j)
      if (!coherent(*i, *j)) return "incoherent chronicles " + to_string(*i) + " and " + to_string(*j);
  for (const auto& c : d.maximal())
    if (!positive_ended(c)) return "maximal chronicle " + to_string(c) + " ends negatively";
  if (d.positive() && d.chronicles.empty()) return "empty positive design";
  return std::nullopt;
}

void validate_design(const Design& d) {
  if (auto v = design_violation(d)) throw DomainError("invalid design: " + *v);
}

void validate_net(const Net& n) {
  for (const auto& d : n.designs) validate_design(d);
  validate_base(n.base());
}

std::set<Seq> prefix_closure(const std::set<Seq>& cs) {
  std::set<Seq> out;
  for (const auto& c : cs)
    for (std::size_t n = 1; n <= c.size(); ++n) out.insert(Seq(c.begin(), c.begin() + n));
  return out;
}

Net design_from_paths(const std::set<Seq>& paths, const Base& b) {
  std::map<Seq, const Seq*> origin;
  for (const auto& p : paths) {
    auto r = validate_path(p, b);
    if (!r.ok()) throw DomainError(to_string(p) + " is not a path on " + to_string(b));
    if (!positive_ended(p)) throw DomainError(to_string(p) + " is not positive-ended");
    for (const auto& v : views_of_prefixes(p)) origin.emplace(v, &p);
  }
  auto sequent_for = [&](const Seq& c) {
    std::size_t k = c[0].daimon ? Base::npos : b.sequent_of(c[0].focus);
    if (k == Base::npos)
      for (std::size_t t = 0; t < b.sequents.size(); ++t)
        if (b.sequents[t].positive()) k = t;
    return k;
  };
  Net net;
  for (const auto& s : b.sequents) net.designs.push_back(Design{Base({s}), {}});
  for (const auto& [c, _] : origin) net.designs[sequent_for(c)].chronicles.insert(c);
  for (const auto& d : net.designs)
    for (auto i = d.chronicles.begin(); i != d.chronicles.end(); ++i)
      for (auto j = std::next(i); j != d.chronicles.end(); ++j)
        if (!coherent(*i, *j))
          throw DomainError("chronicles " + to_string(*i) + " (from " + to_string(*origin.at(*i)) + ") and " +
                            to_string(*j) + " (from " + to_string(*origin.at(*j)) + ") are not coherent");
  for (const auto& d : net.designs) validate_design(d);
  return net;
}

Design design_from_paths_single(const std::set<Seq>& paths, const Base& b) {
  if (!b.single_sequent()) throw DomainError("single-sequent base expected");
  return design_from_paths(paths, b).designs.front();
}

std::set<Seq> paths_of_chronicles(const std::set<Seq>& chs, const Base& b) {
  std::set<Seq> out;
  std::function<void(Seq&)> go = [&](Seq& p) {
    std::set<Address> used;
    for (const auto& a : p)
      if (a.proper()) used.insert(a.focus);
    // w0 ranges over the empty prefix and the prefixes ending with a proper positive action
    for (long t = -1; t < static_cast<long>(p.size()); ++t) {
      Seq v;
      if (t >= 0) {
        if (!p[t].positive() || p[t].daimon) continue;
        v = view(Seq(p.begin(), p.begin() + t + 1));
      }
      for (const auto& neg : children_of(chs, v)) {
        if (!neg.negative() || used.count(neg.focus)) continue;
        if (t >= 0 ? !p[t].creates(neg.focus) : b.sequent_of(neg.focus) == Base::npos) continue;
        Seq w = v;
        w.push_back(neg);
        for (const auto& pos : children_of(chs, w)) {
          if (!pos.positive()) continue;
          p.push_back(neg);
          p.push_back(pos);
          if (validate_path(p, b).ok()) {
            out.insert(p);
            if (pos.proper()) go(p);
          }
          p.resize(p.size() - 2);
        }
      }
    }
  };
  Seq p;
  if (b.has_positive()) {
    for (const auto& a : children_of(chs, {})) {
      if (!a.positive()) continue;
      p = {a};
      if (!validate_path(p, b).ok()) continue;
      out.insert(p);
      if (a.proper()) go(p);
    }
  } else {
    out.insert(p);
    go(p);
  }
  return out;
}

std::set<Seq> paths_of_design(const Design& d) { return paths_of_chronicles(d.chronicles, d.base); }

std::set<Seq> paths_of_net(const Net& n) { return paths_of_chronicles(n.chronicles(), n.base()); }

bool in_design_or_truncation(const Seq& p, const Design& d) {
  if (p.size() == 1 && p[0].daimon) return d.positive();
  for (std::size_t n = 1; n <= p.size(); ++n) {
    Seq v = view(Seq(p.begin(), p.begin() + n));
    if (d.chronicles.count(v)) continue;
    if (n == p.size() && p.back().daimon && n >= 2 && p[n - 2].negative()) continue;
    return false;
  }
  return true;
}

std::set<Ramification> ramification_universe(const std::vector<Design>& ds) {
  std::set<Ramification> out;
  for (const auto& d : ds)
    for (const auto& c : d.chronicles)
      for (const auto& a : c)
        if (a.proper()) out.insert(a.ram);
  return out;
}

Design complete(const Design& d, const std::set<Ramification>& universe) {
  Design out = d;
  auto consider = [&](const Seq& c, const Address& a) {
    for (const auto& I : universe) {
      Seq n = c;
      n.push_back(Action::neg(a, I));
      if (d.chronicles.count(n)) continue;
      out.chronicles.insert(n);
      n.push_back(Action::dai());
      out.chronicles.insert(n);
    }
  };
  if (!d.positive()) consider({}, *d.base.sequents[0].left);
  for (const auto& c : d.chronicles) {
    const Action& last = c.back();
    if (!last.positive() || last.daimon) continue;
    for (int j : last.ram) consider(c, last.focus.child(j));
  }
  return out;
}

std::size_t max_slice_size(const Design& d) {
  std::function<std::size_t(const Seq&)> below = [&](const Seq& c) -> std::size_t {
    std::map<Address, std::size_t> best;
    for (const auto& neg : d.children(c)) {
      if (!neg.negative()) continue;
      Seq w = c;
      w.push_back(neg);
      std::size_t here = 1;
      for (const auto& pos : d.children(w))
        if (pos.proper()) {
          Seq x = w;
          x.push_back(pos);
          here += 1 + below(x);
        }
      auto& b = best[neg.focus];
      b = std::max(b, here);
    }
    std::size_t total = 0;
    for (const auto& [_, v] : best) total += v;
    return total;
  };
  if (!d.positive()) return below({});
  std::size_t total = 0;
  for (const auto& a : d.first_actions())
    if (a.proper()) total = std::max(total, 1 + below(Seq{a}));
  return total;
}

}  // namespace ludics
