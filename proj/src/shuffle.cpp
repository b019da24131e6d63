#include <variant>

#include "ludics/core.hpp"
#include "ludics/text.hpp"

namespace ludics {

namespace {

using Outcome = std::variant<std::set<Seq>, std::string>;

std::vector<Address> residual_base(const Seq& s, std::size_t start) {
  auto j = justifiers(s);
  std::vector<Address> out;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i].proper() && j[i] < static_cast<int>(start)) out.push_back(s[i].focus);
  return out;
}

void interleave(const Seq& a, std::size_t ia, const Seq& b, std::size_t ib, Seq& cur, std::set<Seq>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.insert(cur);
    return;
  }
  auto take = [&](const Seq& s, std::size_t i, const Seq& other, std::size_t oi, bool first) {
    if (i == s.size()) return;
    // a unit ending with the daimon goes last
    if (s[i + 1].daimon && oi != other.size()) return;
    cur.push_back(s[i]);
    cur.push_back(s[i + 1]);
    if (first)
      interleave(a, ia + 2, b, ib, cur, out);
    else
      interleave(a, ia, b, ib + 2, cur, out);
    cur.resize(cur.size() - 2);
  };
  take(a, ia, b, ib, true);
  take(b, ib, a, ia, false);
}

std::set<Seq> base_clause(const Seq& r, const Seq& p, const Seq& q) {
  std::set<Seq> out;
  Seq cur = r;
  interleave(p, 0, q, 0, cur, out);
  return out;
}

Outcome shuffle_impl(const Seq& p, const Seq& q) {
  if (p == q) return std::string("a path shuffled with itself overlaps its own base");
  if (!positive_ended(p) || !positive_ended(q)) return std::string("operands must be positive-ended");

  std::size_t l = 0;
  while (l < p.size() && l < q.size() && p[l] == q[l]) ++l;
  while (l > 0 && p[l - 1].negative()) --l;

  Seq r(p.begin(), p.begin() + l);
  Seq p1(p.begin() + l, p.end());
  Seq q1(q.begin() + l, q.end());
  if ((!p1.empty() && p1[0].positive()) || (!q1.empty() && q1[0].positive()))
    return std::string("residuals after the common prefix must be negative paths");
  if (p1.empty()) return std::set<Seq>{q};
  if (q1.empty()) return std::set<Seq>{p};

  auto bp = residual_base(p, l);
  auto bq = residual_base(q, l);
  for (const auto& x : bp)
    for (const auto& y : bq)
      if (x.comparable(y))
        return "residual bases overlap at " + to_string(x) + " and " + to_string(y);

  if (p1.back().daimon && q1.back().daimon) {
    Seq p2(p1.begin(), p1.end() - 2);
    Seq q2(q1.begin(), q1.end() - 2);
    auto out = base_clause(r, p1, q2);
    auto more = base_clause(r, p2, q1);
    out.insert(more.begin(), more.end());
    return out;
  }
  return base_clause(r, p1, q1);
}

}  // namespace

std::set<Seq> shuffle_paths(const Seq& p, const Seq& q) {
  auto o = shuffle_impl(p, q);
  if (auto* e = std::get_if<std::string>(&o)) throw DomainError("shuffle undefined: " + *e);
  return std::get<std::set<Seq>>(std::move(o));
}

std::optional<std::set<Seq>> try_shuffle(const Seq& p, const Seq& q) {
  auto o = shuffle_impl(p, q);
  if (std::holds_alternative<std::string>(o)) return std::nullopt;
  return std::get<std::set<Seq>>(std::move(o));
}

std::set<Seq> shuffle_sets(const std::set<Seq>& P, const std::set<Seq>& Q) {
  std::set<Seq> out;
  for (const auto& p : P)
    for (const auto& q : Q)
      if (auto s = try_shuffle(p, q)) out.insert(s->begin(), s->end());
  return out;
}

std::set<Seq> shuffle_closure(const std::set<Seq>& P) {
  std::set<Seq> all = P;
  std::set<Seq> frontier = P;
  while (!frontier.empty()) {
    std::set<Seq> fresh;
    for (const auto& a : frontier)
      for (const auto& b : all) {
        auto s = try_shuffle(a, b);
        if (!s) continue;
        for (auto& x : *s)
          if (!all.count(x)) fresh.insert(x);
      }
    all.insert(fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return all;
}

}  // namespace ludics
