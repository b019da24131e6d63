#include <catch_amalgamated.hpp>

#include "ludics/interaction.hpp"
#include "ludics/text.hpp"
#include "oracle.hpp"

using namespace ludics;
using oracle::seq;
namespace P = oracle::worked;

namespace {

const Address xi = parse_address("xi");

Design build(const char* base, std::initializer_list<const char*> maximal) {
  std::set<Seq> cs;
  for (const char* m : maximal) cs.insert(seq(m));
  return make_design(parse_base(base), prefix_closure(cs));
}

}  // namespace

TEST_CASE("cut-net construction errors") {
  Design e = build("|- xi", {"+xi{0} -xi.0{} #"});
  Design n = build("xi |-", {"-xi{0} +xi.0{}"});
  CHECK_NOTHROW(make_cut_net({e, n}));
  try {
    make_cut_net({e, e});
    FAIL("two positive designs");
  } catch (const CutNetError& err) {
    CHECK(err.problem == CutNetProblem::Address);
  }
  try {
    make_cut_net({n});
    FAIL("no main design");
  } catch (const CutNetError& err) {
    CHECK(err.problem == CutNetProblem::NoMain);
  }
  Design other = build("sigma |-", {"-sigma{0} +sigma.0{}"});
  try {
    make_cut_net({e, n, other});
    FAIL("disconnected");
  } catch (const CutNetError& err) {
    CHECK(err.problem == CutNetProblem::Disconnected);
  }
  Design twice = build("|- xi, sigma", {"+xi{0} -xi.0{} #"});
  try {
    make_cut_net({e, twice, n});
    FAIL("overlap");
  } catch (const CutNetError& err) {
    CHECK(err.problem == CutNetProblem::Address);
  }
}

TEST_CASE("E against E' and E''") {
  auto ws = oracle::load("behaviour-e");
  const Design& E = ws.designs.at("E");
  auto r1 = interact(E, {ws.designs.at("Eprime")});
  REQUIRE(r1.converged());
  CHECK(r1.trace == seq(P::e1));
  CHECK(r1.steps == 6);
  CHECK(r1.dual_trace == dual(r1.trace));
  auto r2 = interact(E, {ws.designs.at("Esecond")});
  REQUIRE(r2.converged());
  CHECK(r2.trace == seq(P::e2));
}

TEST_CASE("trace duality in both orientations") {
  auto ws = oracle::load("behaviour-e");
  const Design& E = ws.designs.at("E");
  for (const char* name : {"Eprime", "Esecond"}) {
    const Design& R = ws.designs.at(name);
    auto fwd = interact(E, {R});
    auto back = interact(R, {E});
    REQUIRE(fwd.converged());
    REQUIRE(back.converged());
    CHECK(back.trace == fwd.dual_trace);
    CHECK(fwd.trace == dual(back.trace));
    CHECK(validate_path(fwd.trace, E.base).ok());
    CHECK(validate_path(back.trace, R.base).ok());
    CHECK(fwd.local_traces[1] == back.trace);
  }
}

TEST_CASE("the daimon design converges at once") {
  Design n = build("xi |-", {"-xi{0} +xi.0{}"});
  auto r = interact(dai_design(xi), {n});
  CHECK(r.converged());
  CHECK(r.trace == seq("#"));
  CHECK(r.steps == 1);
}

TEST_CASE("divergence reports the missed ramification") {
  auto ws = oracle::load("behaviour-e");
  Design n = build("xi |-", {"-xi{1} +xi.1{0} -xi.1.0{0} #", "-xi{2} +xi.2{0} -xi.2.0{0} #"});
  auto r = interact(ws.designs.at("E"), {n});
  CHECK_FALSE(r.converged());
  REQUIRE(r.failing.has_value());
  CHECK(*r.failing == parse_action("+xi{1,2}"));
  CHECK(r.missed == Ramification{1, 2});
  CHECK(r.offered == std::vector<Ramification>{{1}, {2}});
  CHECK_FALSE(r.empty_offer);
  CHECK(r.dual_trace.empty());
}

TEST_CASE("an empty partner diverges with an empty offer") {
  auto r = interact(build("|- xi", {"+xi{0} -xi.0{} #"}), {empty_design(xi)});
  CHECK_FALSE(r.converged());
  CHECK(r.empty_offer);
  CHECK(r.offered.empty());
}

TEST_CASE("G1 meets G' and diverges") {
  auto ws = oracle::load("behaviour-g");
  auto r = interact(ws.designs.at("G1"), {ws.designs.at("Gprime")});
  CHECK_FALSE(r.converged());
  CHECK(r.missed == Ramification{1});
  CHECK(r.offered == std::vector<Ramification>{{0}});
  CHECK(ortho(ws.designs.at("G"), ws.designs.at("Gprime")));
  CHECK(ortho(ws.designs.at("E"), ws.designs.at("Gsecond")));
}

TEST_CASE("paths of a design and of its partner meet") {
  auto ws = oracle::load("behaviour-e");
  const Design& E = ws.designs.at("E");
  const Design& R = ws.designs.at("Eprime");
  auto theirs = paths_of_design(R);
  for (const auto& p : paths_of_design(E)) {
    if (!theirs.count(dual(p))) continue;
    CHECK(ortho(E, R));
    CHECK(trace(E, {R}) == p);
  }
}

TEST_CASE("normalization is deterministic") {
  auto ws = oracle::load("behaviour-g");
  auto a = interact(ws.designs.at("G"), {ws.designs.at("Gsecond")});
  auto b = interact(ws.designs.at("G"), {ws.designs.at("Gsecond")});
  CHECK(a.trace == b.trace);
  CHECK(a.steps == b.steps);
  CHECK(a.outcome == b.outcome);
}

TEST_CASE("trace throws on divergence") {
  auto ws = oracle::load("behaviour-g");
  CHECK_THROWS_AS(trace(ws.designs.at("G1"), {ws.designs.at("Gprime")}), DomainError);
}
