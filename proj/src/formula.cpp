#include <cctype>
#include <algorithm>
#include <functional>
#include <map>

#include "formula_parse.hpp"
#include "ludics/connectives.hpp"
#include "ludics/formula.hpp"
#include "ludics/text.hpp"

namespace ludics {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Zero: return "zero";
    case Kind::One: return "one";
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::Plus: return "plus";
    case Kind::Tensor: return "tensor";
    case Kind::With: return "with";
    case Kind::Par: return "par";
    case Kind::ShiftPos: return "up";
    case Kind::ShiftNeg: return "down";
  }
  return "?";
}

bool positive_kind(Kind k) {
  return k == Kind::Zero || k == Kind::One || k == Kind::Plus || k == Kind::Tensor || k == Kind::ShiftPos;
}

Kind dual_kind(Kind k) {
  switch (k) {
    case Kind::Zero: return Kind::Top;
    case Kind::Top: return Kind::Zero;
    case Kind::One: return Kind::Bot;
    case Kind::Bot: return Kind::One;
    case Kind::Plus: return Kind::With;
    case Kind::With: return Kind::Plus;
    case Kind::Tensor: return Kind::Par;
    case Kind::Par: return Kind::Tensor;
    case Kind::ShiftPos: return Kind::ShiftNeg;
    case Kind::ShiftNeg: return Kind::ShiftPos;
  }
  return k;
}

namespace {

bool is_constant(Kind k) { return k == Kind::Zero || k == Kind::One || k == Kind::Top || k == Kind::Bot; }
bool is_shift(Kind k) { return k == Kind::ShiftPos || k == Kind::ShiftNeg; }
bool is_additive(Kind k) { return k == Kind::Plus || k == Kind::With; }

std::set<Ramification> formula_directory(const Formula& f) {
  switch (f.kind) {
    case Kind::Zero:
    case Kind::Top: return {};
    case Kind::One:
    case Kind::Bot: return {Ramification{}};
    case Kind::ShiftPos:
    case Kind::ShiftNeg: return {Ramification{f.index}};
    case Kind::Plus:
    case Kind::With: {
      std::set<Ramification> out;
      for (const auto& c : f.children) {
        auto d = formula_directory(c);
        out.insert(d.begin(), d.end());
      }
      return out;
    }
    case Kind::Tensor:
    case Kind::Par: {
      std::set<Ramification> acc{Ramification{}};
      for (const auto& c : f.children) {
        std::set<Ramification> next;
        for (const auto& I : acc)
          for (const auto& J : formula_directory(c)) {
            Ramification u = I;
            u.insert(u.end(), J.begin(), J.end());
            next.insert(make_ramification(std::move(u)));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

Formula leaf(Kind k, Address base) { return Formula{k, std::move(base), -1, {}}; }

Formula node(Kind k, Address base, std::vector<Formula> children) {
  return Formula{k, std::move(base), -1, std::move(children)};
}

Formula shift(Kind k, Address base, int index, Formula child) {
  return Formula{k, std::move(base), index, {std::move(child)}};
}

void check_formula(const Formula& f) {
  auto bad = [&](const std::string& m) { throw DomainError("ill-formed formula " + to_string(f) + ": " + m); };
  if (is_constant(f.kind)) {
    if (!f.children.empty()) bad("constant with children");
    return;
  }
  if (is_shift(f.kind)) {
    if (f.children.size() != 1 || f.index < 0) bad("shift needs one child and an index");
    const Formula& c = f.children[0];
    if (c.positive() == f.positive()) bad("shift child has the wrong polarity");
    if (c.base != f.child_address()) bad("shift child is not based on " + to_string(f.child_address()));
    check_formula(c);
    return;
  }
  if (f.children.empty()) bad("empty connective");
  for (const auto& c : f.children) {
    if (c.positive() != f.positive()) bad("child of the wrong polarity");
    if (c.base != f.base) bad("child on a different address");
    check_formula(c);
  }
  for (std::size_t i = 0; i < f.children.size(); ++i)
    for (std::size_t j = i + 1; j < f.children.size(); ++j) {
      auto di = formula_directory(f.children[i]);
      auto dj = formula_directory(f.children[j]);
      for (const auto& I : di)
        for (const auto& J : dj) {
          if (is_additive(f.kind) && I == J) bad("children with overlapping directories");
          if (!is_additive(f.kind))
            for (int x : I)
              if (std::binary_search(J.begin(), J.end(), x)) bad("children are not alien");
        }
    }
}

bool in_cf(const Formula& f) {
  auto shifts_only = [](const Formula& t, Kind s) {
    return std::all_of(t.children.begin(), t.children.end(), [&](const Formula& c) { return c.kind == s; });
  };
  auto component = [&](const Formula& c, Kind unit, Kind mult, Kind s) {
    if (c.kind == unit || c.kind == s) return true;
    return c.kind == mult && shifts_only(c, s);
  };
  bool pos = f.positive();
  Kind zero = pos ? Kind::Zero : Kind::Top, unit = pos ? Kind::One : Kind::Bot;
  Kind add = pos ? Kind::Plus : Kind::With, mult = pos ? Kind::Tensor : Kind::Par;
  Kind s = pos ? Kind::ShiftPos : Kind::ShiftNeg;
  bool here = false;
  if (f.kind == zero || f.kind == unit) return true;
  if (f.kind == add)
    here = std::all_of(f.children.begin(), f.children.end(),
                       [&](const Formula& c) { return component(c, unit, mult, s); });
  else
    here = component(f, unit, mult, s);
  if (!here) return false;
  std::function<bool(const Formula&)> below = [&](const Formula& t) {
    if (is_shift(t.kind)) return in_cf(t.children[0]);
    return std::all_of(t.children.begin(), t.children.end(), below);
  };
  return below(f);
}

Formula dual_formula(const Formula& f) {
  Formula d{dual_kind(f.kind), f.base, f.index, {}};
  for (const auto& c : f.children) d.children.push_back(dual_formula(c));
  return d;
}

std::size_t formula_depth(const Formula& f) {
  std::size_t below = 0;
  for (const auto& c : f.children) below = std::max(below, formula_depth(c));
  return below + (is_shift(f.kind) ? 1 : 0);
}

namespace {

Behaviour eval_pos(const Formula& f, Mode m) {
  switch (f.kind) {
    case Kind::Zero: return zero(f.base, m);
    case Kind::One: return one(f.base, m);
    case Kind::ShiftPos: {
      const Formula& c = f.children[0];
      return shift_pos(orthogonal(eval_pos(dual_formula(c), m)));
    }
    case Kind::Plus:
    case Kind::Tensor: {
      std::vector<Behaviour> bs;
      for (const auto& c : f.children) bs.push_back(eval_pos(c, m));
      return f.kind == Kind::Plus ? oplus(bs) : tensor(bs);
    }
    default: break;
  }
  throw DomainError("negative formula where a positive one is expected");
}

}  // namespace

Behaviour eval_formula(const Formula& f, Mode m) {
  check_formula(f);
  if (f.positive()) return eval_pos(f, m);
  return orthogonal(eval_pos(dual_formula(f), m));
}

namespace {

Formula decompose_pos(const Behaviour& p);

Formula decompose_neg(const Behaviour& n) { return dual_formula(decompose_pos(orthogonal(n))); }

Formula decompose_pos(const Behaviour& p) {
  const Address& xi = p.base().main_address();
  const auto& V = visitable_paths(p).paths;
  if (V.size() == 1 && V.begin()->size() == 1 && V.begin()->front().daimon) return leaf(Kind::Zero, xi);

  std::map<Ramification, std::vector<Design>> groups;
  for (const auto& m : material_designs(p)) groups[m.first_actions().front().ram].push_back(m);

  std::vector<Formula> comps;
  for (const auto& [I, ms] : groups) {
    if (I.empty()) {
      comps.push_back(leaf(Kind::One, xi));
      continue;
    }
    std::vector<Formula> factors;
    for (int i : I) {
      Address xi_i = xi.child(i);
      std::set<Design> projs;
      for (const auto& m : ms) {
        Design d{Base::neg(xi_i), {}};
        for (const auto& c : m.chronicles)
          if (c.size() >= 2 && c[1].focus == xi_i) d.chronicles.insert(Seq(c.begin() + 1, c.end()));
        projs.insert(std::move(d));
      }
      Behaviour residual(Base::neg(xi_i), std::vector<Design>(projs.begin(), projs.end()), p.mode(), p.budget());
      factors.push_back(shift(Kind::ShiftPos, xi, i, decompose_neg(residual)));
    }
    comps.push_back(factors.size() == 1 ? std::move(factors[0]) : node(Kind::Tensor, xi, std::move(factors)));
  }
  if (comps.size() == 1) return std::move(comps[0]);
  return node(Kind::Plus, xi, std::move(comps));
}

}  // namespace

DecompositionResult decompose(const Behaviour& b) {
  if (!b.base().simple()) throw DomainError("decomposition needs a simple base");
  DecompositionResult r;
  auto bnd = bounds(b);
  if (!bnd.essentially_finite) {
    r.failure = DecomposeFailure::NotEssentiallyFinite;
    r.detail = "behaviour is not essentially finite";
    return r;
  }
  r.witness = is_regular(b);
  if (!r.witness.regular) {
    r.failure = DecomposeFailure::NotRegular;
    r.detail = r.witness.detail;
    return r;
  }
  r.formula = b.positive() ? decompose_pos(b) : decompose_neg(b);
  r.decomposed = true;
  return r;
}

namespace {

Formula canonical(const Formula& f) {
  Formula c{f.kind, f.base, f.index, {}};
  for (const auto& x : f.children) c.children.push_back(canonical(x));
  if (!is_shift(f.kind))
    std::sort(c.children.begin(), c.children.end(),
              [](const Formula& a, const Formula& b) { return to_string(a) < to_string(b); });
  return c;
}

std::string print(const Formula& f, const std::optional<Address>& ctx) {
  std::string at = ctx && *ctx == f.base ? "" : "@" + to_string(f.base);
  if (f.kind == Kind::Zero) return "0" + at;
  if (f.kind == Kind::One) return "1" + at;
  if (is_constant(f.kind)) return kind_name(f.kind) + at;
  if (is_shift(f.kind))
    return std::string(kind_name(f.kind)) + "@" + to_string(f.child_address()) + " " +
           print(f.children[0], f.child_address());
  std::string s = kind_name(f.kind) + at + "(";
  for (std::size_t i = 0; i < f.children.size(); ++i) s += (i ? ", " : "") + print(f.children[i], f.base);
  return s + ")";
}

}  // namespace

bool formula_equiv(const Formula& a, const Formula& b) { return canonical(a) == canonical(b); }

std::string to_string(const Formula& f) { return print(f, std::nullopt); }

namespace detail {

Formula parse_formula_expr(Scanner& sc, const std::optional<Address>& ctx) {
  static const std::map<std::string, Kind> kinds = {
      {"zero", Kind::Zero}, {"one", Kind::One},       {"top", Kind::Top},   {"bot", Kind::Bot},
      {"plus", Kind::Plus}, {"tensor", Kind::Tensor}, {"with", Kind::With}, {"par", Kind::Par},
      {"up", Kind::ShiftPos}, {"down", Kind::ShiftNeg}};
  std::string word;
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    int n = sc.number();
    if (n != 0 && n != 1) sc.fail("expected 0 or 1");
    word = n ? "one" : "zero";
  } else {
    word = sc.identifier();
  }
  if (word == "atom") {
    // shorthand for up@CHILD top
    sc.expect("@");
    Address child = sc.address();
    auto parent = child.parent();
    if (!parent) sc.fail("an atom needs a non-root address");
    return shift(Kind::ShiftPos, *parent, child.steps.back(), leaf(Kind::Top, child));
  }
  auto it = kinds.find(word);
  if (it == kinds.end()) sc.fail("unknown connective '" + word + "'");
  Kind k = it->second;
  if (is_shift(k)) {
    sc.expect("@");
    Address child = sc.address();
    auto parent = child.parent();
    if (!parent) sc.fail("a shift needs a non-root child address");
    if (ctx && *ctx != *parent) sc.fail("shift child " + to_string(child) + " is not below " + to_string(*ctx));
    return shift(k, *parent, child.steps.back(), parse_formula_expr(sc, child));
  }
  std::optional<Address> base = ctx;
  if (sc.accept("@")) base = sc.address();
  if (!base) sc.fail("formula node without an address");
  if (is_constant(k)) return leaf(k, *base);
  std::vector<Formula> children;
  sc.expect("(");
  do children.push_back(parse_formula_expr(sc, base));
  while (sc.accept(","));
  sc.expect(")");
  return node(k, *base, std::move(children));
}

}  // namespace detail

Formula parse_formula(const std::string& s, const std::optional<Address>& base) {
  detail::Scanner sc(s);
  Formula f = detail::parse_formula_expr(sc, base);
  if (!sc.at_end()) sc.fail("trailing input");
  return f;
}

}  // namespace ludics
