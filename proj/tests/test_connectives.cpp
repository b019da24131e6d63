#include <catch_amalgamated.hpp>

#include "ludics/behaviour.hpp"
#include "ludics/connectives.hpp"
#include "ludics/formula.hpp"
#include "ludics/text.hpp"
#include "oracle.hpp"

using namespace ludics;
using oracle::seq;

namespace {

const Address xi = parse_address("xi");

Behaviour named(const Workspace& ws, const std::string& name) {
  std::vector<Design> gs;
  for (const auto& d : ws.behaviours.at(name)) gs.push_back(ws.designs.at(d));
  return Behaviour(gs.front().base, gs);
}

Behaviour single(const Design& d) { return Behaviour(d.base, {d}); }

Design build(const char* base, std::initializer_list<const char*> maximal) {
  std::set<Seq> cs;
  for (const char* m : maximal) cs.insert(seq(m));
  return make_design(parse_base(base), prefix_closure(cs));
}

std::set<Seq> paths(std::initializer_list<const char*> ss) {
  std::set<Seq> out;
  for (const char* s : ss) out.insert(seq(s));
  return out;
}

// the first action of every non-daimon path widened by J
std::set<Seq> widen(const std::set<Seq>& V, const Ramification& J) {
  std::set<Seq> out;
  for (auto p : V) {
    if (p.size() == 1 && p[0].daimon) continue;
    std::vector<int> r = p[0].ram;
    r.insert(r.end(), J.begin(), J.end());
    p[0] = Action::pos(p[0].focus, r);
    out.insert(p);
  }
  return out;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(visitable_paths(zero(xi)).paths == paths({"#"}));
  CHECK(visitable_paths(one(xi)).paths == paths({"+xi{}", "#"}));
  CHECK(is_regular(zero(xi)).regular);
  CHECK(is_regular(one(xi)).regular);
  CHECK(dual_visitable_paths(zero(xi)) == std::set<Seq>{Seq{}});
  CHECK(visitable_paths(top(xi)).paths == std::set<Seq>{Seq{}});
  CHECK(visitable_paths(bot(xi)).paths == std::set<Seq>{Seq{}, seq("-xi{} #")});
}

TEST_CASE("tensor of designs") {
  Design f1 = build("|- xi", {"+xi{1} -xi.1{0} +xi.1.0{0}"});
  Design f2 = build("|- xi", {"+xi{2} -xi.2{0} +xi.2.0{0}"});
  auto ws = oracle::load("behaviour-e");
  CHECK(tensor_designs(f1, f2) == ws.designs.at("E"));
  CHECK(tensor_designs(dai_design(xi), f2) == dai_design(xi));
  CHECK_THROWS_AS(tensor_designs(f1, f1), DomainError);
  auto t = oracle::load("tensor");
  CHECK(tensor_designs(t.designs.at("A"), t.designs.at("B")) == t.designs.at("AB"));
}

TEST_CASE("extension") {
  auto t = oracle::load("tensor");
  auto A = named(t, "bA"), B = named(t, "bB");
  auto ext = extension(A, B);
  for (const auto& g : ext.generators())
    if (!g.is_dai()) CHECK(g.first_actions().front() == parse_action("+xi{1,2}"));
  auto want = widen(visitable_paths(A).paths, {2});
  want.insert(seq("#"));
  CHECK(visitable_paths(ext).paths == want);
  auto with_one = extension(A, one(xi));
  CHECK(visitable_paths(with_one).paths == visitable_paths(A).paths);
  CHECK_THROWS_AS(extension(A, A), DomainError);
}

TEST_CASE("shifts") {
  Address a = parse_address("xi.1.0.0");
  auto up = shift_pos(top(a));
  CHECK(visitable_paths(up).paths == paths({"#", "+xi.1.0{0}"}));
  auto t = oracle::load("tensor");
  auto A = named(t, "bA");
  auto down = unshift(A);
  CHECK(down.base() == Base::neg(parse_address("xi.1")));
  auto back = shift_pos(down);
  CHECK(visitable_paths(back).paths == visitable_paths(A).paths);
  CHECK(is_regular(back).regular == is_regular(down).regular);
  auto n = shift_neg(single(build("|- xi.1", {"+xi.1{0}"})));
  CHECK(visitable_paths(n).paths == paths({"", "-xi{1} +xi.1{0}", "-xi{1} #"}));
}

TEST_CASE("sums") {
  Design f1 = build("|- xi", {"+xi{1} -xi.1{0} +xi.1.0{0}"});
  Design f2 = build("|- xi", {"+xi{2} -xi.2{0} +xi.2.0{0}"});
  auto A1 = single(f1), A2 = single(f2);
  auto s = oplus({A1, A2});
  CHECK(directory(s).size() == 2);
  std::set<Seq> want = visitable_paths(A1).paths;
  auto v2 = visitable_paths(A2).paths;
  want.insert(v2.begin(), v2.end());
  CHECK(visitable_paths(s).paths == want);
  CHECK(visitable_paths(oplus({A1})).paths == visitable_paths(A1).paths);
  CHECK_THROWS_AS(oplus({A1, A1}), DomainError);
  CHECK(is_regular(s).regular);
}

TEST_CASE("tensor of behaviours") {
  Design f1 = build("|- xi", {"+xi{1} -xi.1{0} +xi.1.0{0}"});
  Design f2 = build("|- xi", {"+xi{2} -xi.2{0} +xi.2.0{0}"});
  auto t = tensor({single(f1), single(f2)});
  auto ws = oracle::load("behaviour-e");
  CHECK(visitable_paths(t).paths == visitable_paths(named(ws, "bE")).paths);
  CHECK(visitable_paths(tensor({single(f1), zero(xi)})).paths == paths({"#"}));
  CHECK_THROWS_AS(tensor({single(f1), single(f1)}), DomainError);
}

TEST_CASE("visitable paths of a tensor are the reversible shuffles") {
  auto t = oracle::load("tensor");
  auto A = named(t, "bA"), B = named(t, "bB");
  auto AB = tensor({A, B});
  auto formula = tensor_visitable_formula(A, B);
  CHECK(visitable_paths(AB).paths == formula);
  Seq q = seq(oracle::worked::tensor_q);
  auto all = shuffle_sets(widen(visitable_paths(A).paths, {2}), widen(visitable_paths(B).paths, {1}));
  CHECK(all.count(q));
  CHECK_FALSE(formula.count(q));
  auto r = visit(q, named(t, "bAB"));
  CHECK_FALSE(r.visitable);
  CHECK(r.reason == VisitReason::DualNotAPath);
}

TEST_CASE("a regular path need not be visitable") {
  auto t = oracle::load("tensor");
  auto B = named(t, "bB");
  const Seq& rb = t.paths.at("rb").seq;
  CHECK(is_regular_path(rb, B));
  CHECK_FALSE(visitable(rb, B));
  CHECK(visitable(t.paths.at("p1").seq, named(t, "bAB")));
  CHECK(visitable(t.paths.at("p2").seq, named(t, "bAB")));
}

TEST_CASE("formula text") {
  auto f = parse_formula("tensor@xi(up@xi.1 down@xi.1.0 atom@xi.1.0.0, up@xi.2 down@xi.2.0 atom@xi.2.0.0)");
  CHECK(to_string(f) == "tensor@xi(up@xi.1 down@xi.1.0 up@xi.1.0.0 top, up@xi.2 down@xi.2.0 up@xi.2.0.0 top)");
  CHECK(parse_formula(to_string(f)) == f);
  CHECK(to_string(parse_formula("one@xi")) == "1@xi");
  CHECK(parse_formula("0@xi").kind == Kind::Zero);
  CHECK(formula_depth(f) == 3);
  CHECK(in_cf(f));
  CHECK(dual_formula(dual_formula(f)) == f);
  CHECK_THROWS_AS(check_formula(parse_formula("tensor@xi(up@xi.1 top, up@xi.1 bot)")), DomainError);
  CHECK_THROWS_AS(check_formula(parse_formula("plus@xi(up@xi.1 top, up@xi.1 bot)")), DomainError);
  CHECK_THROWS(parse_formula("up@xi top"));
}

TEST_CASE("formula equivalence") {
  auto x = parse_formula("up@xi.1 top"), y = parse_formula("up@xi.2 bot");
  CHECK(formula_equiv(node(Kind::Tensor, xi, {x, y}), node(Kind::Tensor, xi, {y, x})));
  CHECK_FALSE(formula_equiv(node(Kind::Plus, xi, {x}), x));
  CHECK_FALSE(formula_equiv(node(Kind::Tensor, xi, {x, y}), node(Kind::Plus, xi, {x, y})));
}

TEST_CASE("eval and decompose of E") {
  auto ws = oracle::load("behaviour-e");
  auto bE = named(ws, "bE");
  auto F = ws.formulas.at("FE");
  CHECK(visitable_paths(eval_formula(F)).paths == visitable_paths(bE).paths);
  auto d = decompose(bE.with_mode(Mode::Exhaustive));
  REQUIRE(d.decomposed);
  CHECK(formula_equiv(d.formula, F));
  CHECK(visitable_paths(eval_formula(d.formula)).paths == visitable_paths(bE).paths);
  CHECK(decompose(one(xi)).formula == leaf(Kind::One, xi));
  CHECK(decompose(zero(xi)).formula == leaf(Kind::Zero, xi));
  CHECK(visitable_paths(eval_formula(leaf(Kind::One, xi))).paths == visitable_paths(one(xi)).paths);
}

TEST_CASE("non-regular behaviours are not decomposed") {
  for (const char* f : {"behaviour-f", "behaviour-g", "behaviour-h"}) {
    auto ws = oracle::load(f);
    auto b = named(ws, "b" + std::string(1, static_cast<char>(std::toupper(f[10]))));
    auto d = decompose(b);
    CHECK_FALSE(d.decomposed);
    CHECK(d.failure == DecomposeFailure::NotRegular);
    CHECK_FALSE(d.witness.regular);
    CHECK_FALSE(visitable(d.witness.witness, b));
  }
}

TEST_CASE("random formulas evaluate to regular bounded behaviours") {
  oracle::FormulaGen gen(20261015);
  for (int k = 0; k < 20; ++k) {
    Formula F = gen.positive(xi, 1 + k % 3);
    INFO(to_string(F));
    REQUIRE_NOTHROW(check_formula(F));
    auto b = eval_formula(F);
    CHECK(is_regular(b).regular);
    CHECK(bounds(b).essentially_finite);
    auto d = decompose(b);
    REQUIRE(d.decomposed);
    CHECK(formula_equiv(d.formula, F));
  }
}

TEST_CASE("regularity commutes with the connectives") {
  auto e = oracle::load("behaviour-e");
  auto f = oracle::load("behaviour-f");
  auto bE = named(e, "bE"), bF = named(f, "bF");
  CHECK(is_regular(shift_pos(unshift(named(oracle::load("tensor"), "bA")))).regular);
  CHECK(is_regular(orthogonal(bE)).regular);
  CHECK_FALSE(is_regular(orthogonal(bF)).regular);
}
