#include <algorithm>

#include "ludics/core.hpp"
#include "ludics/text.hpp"

namespace ludics {

Address Address::child(int i) const {
  Address a = *this;
  a.steps.push_back(i);
  return a;
}

std::optional<Address> Address::parent() const {
  if (steps.empty()) return std::nullopt;
  Address a = *this;
  a.steps.pop_back();
  return a;
}

bool Address::is_prefix_of(const Address& other) const {
  if (root != other.root || steps.size() > other.steps.size()) return false;
  return std::equal(steps.begin(), steps.end(), other.steps.begin());
}

Ramification make_ramification(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int x : xs)
    if (x < 0) throw DomainError("negative index in ramification");
  return xs;
}

Action Action::flipped() const {
  Action a = *this;
  if (!daimon) a.pol = opposite(pol);
  return a;
}

bool Action::creates(const Address& a) const {
  if (daimon || a.steps.empty() || a.root != focus.root) return false;
  if (a.steps.size() != focus.steps.size() + 1) return false;
  if (!std::equal(focus.steps.begin(), focus.steps.end(), a.steps.begin())) return false;
  return std::binary_search(ram.begin(), ram.end(), a.steps.back());
}

std::strong_ordering Action::operator<=>(const Action& o) const {
  if (daimon != o.daimon) return daimon ? std::strong_ordering::less : std::strong_ordering::greater;
  if (daimon) return std::strong_ordering::equal;
  if (auto c = focus <=> o.focus; c != 0) return c;
  if (auto c = ram <=> o.ram; c != 0) return c;
  return pol <=> o.pol;
}

bool Action::operator==(const Action& o) const { return (*this <=> o) == 0; }

// ---------------------------------------------------------------- bases

std::vector<Address> Sequent::addresses() const {
  std::vector<Address> out;
  if (left) out.push_back(*left);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

Base Base::single(std::optional<Address> left, std::vector<Address> right) {
  std::sort(right.begin(), right.end());
  return Base({Sequent{std::move(left), std::move(right)}});
}

bool Base::has_positive() const {
  return std::any_of(sequents.begin(), sequents.end(), [](const Sequent& s) { return s.positive(); });
}

bool Base::simple() const {
  return sequents.size() == 1 && sequents[0].addresses().size() == 1;
}

std::vector<Address> Base::addresses() const {
  std::vector<Address> out;
  for (const auto& s : sequents) {
    auto a = s.addresses();
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::size_t Base::sequent_of(const Address& a) const {
  for (std::size_t k = 0; k < sequents.size(); ++k)
    for (const auto& x : sequents[k].addresses())
      if (x == a) return k;
  return npos;
}

std::size_t Base::sequent_under(const Address& a) const {
  for (std::size_t k = 0; k < sequents.size(); ++k)
    for (const auto& x : sequents[k].addresses())
      if (x.is_prefix_of(a)) return k;
  return npos;
}

const Address& Base::main_address() const {
  if (!simple()) throw DomainError("base is not simple: " + to_string(*this));
  const auto& s = sequents[0];
  return s.left ? *s.left : s.right[0];
}

void validate_base(const Base& b) {
  if (b.sequents.empty()) throw DomainError("empty base");
  std::size_t positives = 0;
  for (const auto& s : b.sequents) {
    if (!s.left && s.right.empty()) throw DomainError("empty sequent in base");
    if (s.positive()) ++positives;
  }
  if (positives > 1) throw DomainError("base has more than one sequent with an empty left side");
  auto all = b.addresses();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].comparable(all[j]))
        throw DomainError("base addresses " + to_string(all[i]) + " and " + to_string(all[j]) +
                          " are not disjoint");
}

Base dual_base(const Base& b) {
  std::vector<Sequent> out;
  for (const auto& s : b.sequents) {
    if (s.left) out.push_back(Sequent{std::nullopt, {*s.left}});
    for (const auto& r : s.right) out.push_back(Sequent{r, {}});
  }
  std::sort(out.begin(), out.end());
  Base d(std::move(out));
  validate_base(d);
  return d;
}

// ---------------------------------------------------------------- sequences

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::Alternation: return "alternation";
    case Condition::Justification: return "justification";
    case Condition::Linearity: return "linearity";
    case Condition::NegativeJump: return "negative-jump";
    case Condition::Daimon: return "daimon";
    case Condition::Totality: return "totality";
    case Condition::Chronicle: return "chronicle";
  }
  return "?";
}

std::vector<int> justifiers(const Seq& s) {
  std::vector<int> j(s.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].daimon) continue;
    for (std::size_t k = i; k-- > 0;)
      if (s[k].creates(s[i].focus)) {
        j[i] = static_cast<int>(k);
        break;
      }
  }
  return j;
}

namespace {

// indices of view(s[0..len)), in order
std::vector<std::size_t> view_indices(const Seq& s, const std::vector<int>& just, std::size_t len) {
  std::vector<std::size_t> out;
  long pos = static_cast<long>(len) - 1;
  while (pos >= 0) {
    out.push_back(static_cast<std::size_t>(pos));
    if (s[pos].positive()) {
      --pos;
    } else {
      pos = just[pos];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t hereditary_root(const std::vector<int>& just, std::size_t i) {
  while (just[i] >= 0) i = static_cast<std::size_t>(just[i]);
  return i;
}

}  // namespace

PathReport validate_path(const Seq& s, const Base& b) {
  validate_base(b);
  PathReport r;
  r.justifier = justifiers(s);
  auto fail = [&](Verdict v, Condition c, std::size_t i, std::string d) {
    r.verdict = v;
    r.condition = c;
    r.index = i;
    r.detail = std::move(d);
    return r;
  };
  auto totality = [&]() -> bool {
    if (!b.has_positive()) return true;
    if (s.empty()) return false;
    return s[0].positive();
  };

  std::set<Address> used;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Action& a = s[i];
    if (i > 0 && s[i - 1].positive() == a.positive())
      return fail(Verdict::Violation, Condition::Alternation, i, "two consecutive actions of the same polarity");

    if (a.proper()) {
      int j = r.justifier[i];
      std::size_t k = Base::npos;
      if (j >= 0) {
        if (s[j].pol == a.pol)
          return fail(Verdict::Violation, Condition::Justification, i, "justifier has the same polarity");
      } else {
        k = b.sequent_of(a.focus);
        if (k == Base::npos) {
          if (b.sequent_under(a.focus) == Base::npos)
            return fail(Verdict::Structural, Condition::Justification, i,
                        "address " + to_string(a.focus) + " is outside the base");
          return fail(Verdict::Violation, Condition::Justification, i,
                      "focus " + to_string(a.focus) + " is not created by an earlier action");
        }
        const Sequent& sq = b.sequents[k];
        bool on_left = sq.left && *sq.left == a.focus;
        if (a.negative() && !on_left)
          return fail(Verdict::Violation, Condition::Justification, i,
                      "initial negative action must focus on a left address");
        if (a.positive() && on_left)
          return fail(Verdict::Violation, Condition::Justification, i,
                      "initial positive action must focus on a right address");
      }

      if (!used.insert(a.focus).second)
        return fail(Verdict::Violation, Condition::Linearity, i, "focus " + to_string(a.focus) + " used twice");

      if (a.positive()) {
        if (j >= 0) {
          auto v = view_indices(s, r.justifier, i);
          if (!std::binary_search(v.begin(), v.end(), static_cast<std::size_t>(j)))
            return fail(Verdict::Violation, Condition::NegativeJump, i,
                        "justifier at " + std::to_string(j) + " is not in the view");
        } else if (i == 0) {
          if (!b.sequents[k].positive())
            return fail(Verdict::Violation, Condition::NegativeJump, i,
                        "initial positive action first on a sequent with a non-empty left side");
        } else {
          std::size_t root = hereditary_root(r.justifier, i - 1);
          if (s[i - 1].positive() || s[root].daimon || b.sequent_of(s[root].focus) != k)
            return fail(Verdict::Violation, Condition::NegativeJump, i,
                        "initial positive action not preceded by a negative action of its sequent");
        }
      }
    } else {
      if (i + 1 != s.size())
        return fail(Verdict::Violation, Condition::Daimon, i, "daimon is not the last action");
      if (i == 0 && !b.has_positive())
        return fail(Verdict::Violation, Condition::Daimon, i, "daimon first on a negative base");
    }

    if (i == 0 && !totality())
      return fail(Verdict::Violation, Condition::Totality, 0, "positive base but the path does not start positively");
  }
  if (s.empty() && !totality())
    return fail(Verdict::Violation, Condition::Totality, 0, "positive base but the path is empty");
  return r;
}

PathReport validate_chronicle(const Seq& s, const Base& b) {
  PathReport r = validate_path(s, b);
  if (!r.ok()) return r;
  if (s.empty()) {
    r.verdict = Verdict::Violation;
    r.condition = Condition::Chronicle;
    r.detail = "empty chronicle";
    return r;
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].negative() && r.justifier[i] != static_cast<int>(i) - 1) {
      r.verdict = Verdict::Violation;
      r.condition = Condition::Chronicle;
      r.index = i;
      r.detail = "negative action not justified by its predecessor";
      return r;
    }
  return r;
}

Seq view(const Seq& s) {
  auto j = justifiers(s);
  Seq out;
  for (auto i : view_indices(s, j, s.size())) out.push_back(s[i]);
  return out;
}

std::set<Seq> views_of_prefixes(const Seq& s) {
  auto j = justifiers(s);
  std::set<Seq> out;
  for (std::size_t n = 1; n <= s.size(); ++n) {
    Seq v;
    for (auto i : view_indices(s, j, n)) v.push_back(s[i]);
    out.insert(std::move(v));
  }
  return out;
}

Seq dual(const Seq& s) {
  Seq out;
  out.reserve(s.size() + 1);
  bool ends_dai = !s.empty() && s.back().daimon;
  for (std::size_t i = 0; i + (ends_dai ? 1 : 0) < s.size(); ++i) out.push_back(s[i].flipped());
  if (!ends_dai) out.push_back(Action::dai());
  return out;
}

PathReport is_reversible(const Seq& s, const Base& b) {
  PathReport r = validate_path(s, b);
  if (!r.ok()) return r;
  if (!positive_ended(s)) throw DomainError("reversibility needs a positive-ended path");
  return validate_path(dual(s), dual_base(b));
}

bool positive_ended(const Seq& s) { return s.empty() || s.back().positive(); }

bool is_prefix(const Seq& p, const Seq& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

Seq justifier_chain(const Seq& s, std::size_t i) {
  auto j = justifiers(s);
  Seq out;
  long pos = static_cast<long>(i);
  while (pos >= 0) {
    out.push_back(s[pos]);
    pos = j[pos];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ludics
