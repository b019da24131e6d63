#include <algorithm>

#include "ludics/connectives.hpp"
#include "ludics/text.hpp"

namespace ludics {

namespace {

std::set<Ramification> gen_directory(const Behaviour& b) {
  std::set<Ramification> out;
  for (const auto& g : b.generators())
    for (const auto& a : g.first_actions())
      if (a.proper()) out.insert(a.ram);
  return out;
}

bool ram_disjoint(const Ramification& a, const Ramification& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

Ramification ram_union(const Ramification& a, const Ramification& b) {
  Ramification r = a;
  r.insert(r.end(), b.begin(), b.end());
  return make_ramification(std::move(r));
}

void require_positive(const Behaviour& b, const char* op) {
  if (!b.positive()) throw DomainError(std::string(op) + " expects a positive behaviour on " + to_string(b.base()));
}

void require_negative(const Behaviour& b, const char* op) {
  if (b.positive()) throw DomainError(std::string(op) + " expects a negative behaviour on " + to_string(b.base()));
}

Design prefixed(const Action& first, const Design& g, Base base) {
  Design d{std::move(base), {Seq{first}}};
  for (const auto& c : g.chronicles) {
    Seq x{first};
    x.insert(x.end(), c.begin(), c.end());
    d.chronicles.insert(std::move(x));
  }
  return d;
}

}  // namespace

Behaviour zero(const Address& a, Mode m) { return Behaviour(Base::pos(a), {dai_design(a)}, m); }

Behaviour one(const Address& a, Mode m) {
  return Behaviour(Base::pos(a), {Design{Base::pos(a), {Seq{Action::pos(a, {})}}}}, m);
}

Behaviour top(const Address& a, Mode m) { return orthogonal(zero(a, m)); }

Behaviour bot(const Address& a, Mode m) { return orthogonal(one(a, m)); }

bool alien(const Behaviour& a, const Behaviour& b) {
  for (const auto& I : gen_directory(a))
    for (const auto& J : gen_directory(b))
      if (!ram_disjoint(I, J)) return false;
  return true;
}

bool disjoint(const Behaviour& a, const Behaviour& b) {
  auto da = gen_directory(a);
  for (const auto& J : gen_directory(b))
    if (da.count(J)) return false;
  return true;
}

Design tensor_designs(const Design& a, const Design& b) {
  if (!a.positive() || !b.positive() || a.base != b.base)
    throw DomainError("tensor of designs needs two positive designs on the same base");
  if (a.is_dai()) return a;
  if (b.is_dai()) return b;
  Action ka = a.first_actions().front();
  Action kb = b.first_actions().front();
  if (!ram_disjoint(ka.ram, kb.ram))
    throw DomainError("designs are not alien: " + to_string(ka) + " and " + to_string(kb));
  Action k = Action::pos(ka.focus, ram_union(ka.ram, kb.ram));
  Design d{a.base, {Seq{k}}};
  for (const Design* x : {&a, &b})
    for (const auto& c : x->chronicles) {
      Seq y = c;
      y[0] = k;
      d.chronicles.insert(std::move(y));
    }
  validate_design(d);
  return d;
}

Behaviour extension(const Behaviour& a, const Behaviour& b) {
  require_positive(a, "extension");
  require_positive(b, "extension");
  if (a.base() != b.base()) throw DomainError("extension of behaviours on different bases");
  if (!alien(a, b)) throw DomainError("extension of non-alien behaviours");
  std::vector<Design> gens{dai_design(a.base().main_address())};
  for (const auto& g : a.generators()) {
    if (g.is_dai()) continue;
    for (const auto& J : gen_directory(b)) {
      Design d{g.base, {}};
      for (const auto& c : g.chronicles) {
        Seq y = c;
        y[0] = Action::pos(c[0].focus, ram_union(c[0].ram, J));
        d.chronicles.insert(std::move(y));
      }
      gens.push_back(std::move(d));
    }
  }
  return Behaviour(a.base(), std::move(gens), a.mode(), a.budget());
}

Behaviour shift_pos(const Behaviour& n) {
  require_negative(n, "shift_pos");
  const Address& xi_i = n.base().main_address();
  auto xi = xi_i.parent();
  if (!xi) throw DomainError("cannot shift at a root address");
  Action k = Action::pos(*xi, {xi_i.steps.back()});
  std::vector<Design> gens;
  for (const auto& g : n.generators()) gens.push_back(prefixed(k, g, Base::pos(*xi)));
  return Behaviour(Base::pos(*xi), std::move(gens), n.mode(), n.budget());
}

Behaviour shift_neg(const Behaviour& p) {
  require_positive(p, "shift_neg");
  const Address& xi_i = p.base().main_address();
  auto xi = xi_i.parent();
  if (!xi) throw DomainError("cannot shift at a root address");
  Action k = Action::neg(*xi, {xi_i.steps.back()});
  std::vector<Design> gens;
  for (const auto& g : p.generators()) gens.push_back(prefixed(k, g, Base::neg(*xi)));
  return Behaviour(Base::neg(*xi), std::move(gens), p.mode(), p.budget());
}

Behaviour unshift(const Behaviour& p) {
  require_positive(p, "unshift");
  std::optional<Action> first;
  std::vector<Design> gens;
  for (const auto& g : p.generators()) {
    if (g.is_dai()) continue;
    Action k = g.first_actions().front();
    if (k.ram.size() != 1 || (first && k != *first))
      throw DomainError("behaviour is not a shift: first action " + to_string(k));
    first = k;
    Design d{Base::neg(k.focus.child(k.ram[0])), {}};
    for (const auto& c : g.chronicles)
      if (c.size() > 1) d.chronicles.insert(Seq(c.begin() + 1, c.end()));
    gens.push_back(std::move(d));
  }
  if (!first) throw DomainError("behaviour 0 is not a shift");
  Base b = gens.front().base;
  return Behaviour(std::move(b), std::move(gens), p.mode(), p.budget());
}

Behaviour oplus(const std::vector<Behaviour>& bs) {
  if (bs.empty()) throw DomainError("empty sum");
  for (const auto& b : bs) {
    require_positive(b, "oplus");
    if (b.base() != bs[0].base()) throw DomainError("sum of behaviours on different bases");
  }
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      if (!disjoint(bs[i], bs[j])) throw DomainError("sum of behaviours with overlapping directories");
  std::vector<Design> gens;
  for (const auto& b : bs) gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Behaviour(bs[0].base(), std::move(gens), bs[0].mode(), bs[0].budget());
}

Behaviour with_(const std::vector<Behaviour>& ns) {
  if (ns.empty()) throw DomainError("empty with");
  for (const auto& n : ns) {
    require_negative(n, "with");
    if (n.base() != ns[0].base()) throw DomainError("with of behaviours on different bases");
  }
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = i + 1; j < ns.size(); ++j)
      if (!disjoint(ns[i], ns[j])) throw DomainError("with of behaviours with overlapping directories");
  std::vector<Design> acc{Design{ns[0].base(), {}}};
  for (const auto& n : ns) {
    std::vector<Design> next;
    for (const auto& d : acc)
      for (const auto& g : n.generators()) {
        Design u = d;
        u.chronicles.insert(g.chronicles.begin(), g.chronicles.end());
        next.push_back(std::move(u));
      }
    acc = std::move(next);
  }
  return Behaviour(ns[0].base(), std::move(acc), ns[0].mode(), ns[0].budget());
}

Behaviour tensor(const std::vector<Behaviour>& ps) {
  if (ps.empty()) throw DomainError("empty tensor");
  for (const auto& p : ps) {
    require_positive(p, "tensor");
    if (p.base() != ps[0].base()) throw DomainError("tensor of behaviours on different bases");
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (!alien(ps[i], ps[j])) throw DomainError("tensor of non-alien behaviours");
  std::vector<Design> acc = ps[0].generators();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    std::vector<Design> next;
    for (const auto& d : acc)
      for (const auto& g : ps[k].generators()) next.push_back(tensor_designs(d, g));
    acc = std::move(next);
  }
  return Behaviour(ps[0].base(), std::move(acc), ps[0].mode(), ps[0].budget());
}

Behaviour par(const std::vector<Behaviour>& ns) {
  std::vector<Behaviour> ps;
  for (const auto& n : ns) {
    require_negative(n, "par");
    ps.push_back(orthogonal(n));
  }
  return orthogonal(tensor(ps));
}

std::set<Seq> tensor_visitable_formula(const Behaviour& a, const Behaviour& b) {
  auto extend = [](const Behaviour& x, const Behaviour& y) {
    std::set<Seq> out;
    for (const auto& p : visitable_paths(x).paths) {
      if (p.size() == 1 && p[0].daimon) continue;
      for (const auto& J : gen_directory(y)) {
        Seq q = p;
        q[0] = Action::pos(p[0].focus, ram_union(p[0].ram, J));
        out.insert(std::move(q));
      }
    }
    return out;
  };
  auto va = extend(a, b);
  auto vb = extend(b, a);
  Base db = dual_base(a.base());
  std::set<Seq> out{Seq{Action::dai()}};
  for (const auto& q : shuffle_sets(va, vb))
    if (validate_path(dual(q), db).ok()) out.insert(q);
  // the widened first action lies in both sets; its self-shuffle is left undefined by shuffle_paths
  for (const auto& q : va)
    if (q.size() == 1 && vb.count(q)) out.insert(q);
  return out;
}

}  // namespace ludics
