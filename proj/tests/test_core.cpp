#include <catch_amalgamated.hpp>

#include "ludics/core.hpp"
#include "ludics/text.hpp"
#include "oracle.hpp"

using namespace ludics;
using oracle::seq;
namespace P = oracle::worked;

namespace {

const Base xs = parse_base("|- xi, sigma");

std::set<Seq> prefixes(const Seq& c) {
  std::set<Seq> out;
  for (std::size_t n = 1; n <= c.size(); ++n) out.insert(Seq(c.begin(), c.begin() + n));
  return out;
}

}  // namespace

TEST_CASE("addresses and actions") {
  Address a = parse_address("xi.0.1");
  CHECK(a.parent() == parse_address("xi.0"));
  CHECK(parse_address("xi").is_prefix_of(a));
  CHECK_FALSE(parse_address("xi.1").comparable(a));
  CHECK(to_string(parse_action("+xi.0{1,0}")) == "+xi.0{0,1}");
  CHECK(parse_action("#").positive());
  CHECK(parse_action("-sigma{}").ram.empty());
  CHECK_THROWS_AS(validate_base(parse_base("|- xi, xi.0")), DomainError);
  CHECK_THROWS_AS(validate_base(parse_base("|- xi; |- sigma")), DomainError);
}

TEST_CASE("validate_path on the worked example") {
  CHECK(validate_path(seq(P::p), xs).ok());
  auto r = validate_path(seq(P::s_jump), xs);
  CHECK(r.verdict == Verdict::Violation);
  CHECK(r.condition == Condition::NegativeJump);
  CHECK(r.index == 4);
  CHECK(validate_path({}, Base::neg(parse_address("xi"))).ok());
}

TEST_CASE("validate_path reports the first violation with one tag") {
  Base b = Base::pos(parse_address("xi"));
  auto r = validate_path(seq("+xi{0} +xi.0{0}"), b);
  CHECK(r.condition == Condition::Alternation);
  CHECK(r.index == 1);
  r = validate_path(seq("+xi{0} -xi.1{0}"), b);
  CHECK(r.condition == Condition::Justification);
  r = validate_path(seq("+xi{0} -xi.0{0} # -xi.0.0{0}"), b);
  CHECK(r.condition == Condition::Daimon);
  CHECK(r.index == 2);
  r = validate_path({}, b);
  CHECK(r.condition == Condition::Totality);
  r = validate_path(seq("+xi{0} -xi.0{0} +xi.0.0{} -xi.0{0}"), b);
  CHECK(r.condition == Condition::Linearity);
  CHECK(r.index == 3);
  r = validate_path(seq("+tau{0}"), b);
  CHECK(r.verdict == Verdict::Structural);
}

TEST_CASE("validate_chronicle") {
  CHECK(validate_chronicle(seq(P::c), xs).ok());
  auto r = validate_chronicle(seq(P::p), xs);
  CHECK(r.condition == Condition::Chronicle);
  CHECK(r.index == 5);
  CHECK(validate_chronicle(seq("+xi{}"), Base::pos(parse_address("xi"))).ok());
}

TEST_CASE("views") {
  CHECK(view(seq(P::q)) == seq(P::c));
  CHECK(view(seq(P::r)) == seq(P::c));
  CHECK(view(seq(P::p)) == seq(P::d));
  CHECK(view(seq("+xi{0}")) == seq("+xi{0}"));
  for (const char* s : {P::p, P::q, P::r})
    CHECK(view(seq(s)) == oracle::view(seq(s)));
}

TEST_CASE("views of prefixes") {
  auto v = views_of_prefixes(seq(P::q));
  auto want = prefixes(seq(P::c));
  auto more = prefixes(seq(P::d));
  want.insert(more.begin(), more.end());
  CHECK(v == want);
  CHECK(views_of_prefixes({}).empty());
  CHECK(views_of_prefixes(seq(P::c)) == prefixes(seq(P::c)));
}

TEST_CASE("dual") {
  CHECK(dual(seq("+xi{0,1} -xi.0{0} +sigma{0}")) == seq("-xi{0,1} +xi.0{0} -sigma{0} #"));
  CHECK(dual(seq("#")).empty());
  CHECK(dual({}) == seq("#"));
  CHECK(dual(dual(seq(P::c))) == seq(P::c));
  CHECK(dual(seq(P::p)) == oracle::dual(seq(P::p)));
}

TEST_CASE("reversibility") {
  auto r = is_reversible(seq(P::s_rev), xs);
  CHECK_FALSE(r.ok());
  CHECK(r.condition == Condition::NegativeJump);
  CHECK(is_reversible(seq(P::c1), xs).ok());
  CHECK(is_reversible(seq(P::c2), xs).ok());
  CHECK(is_reversible(seq(P::c), xs).ok());
  CHECK(is_reversible(seq("#"), Base::pos(parse_address("xi"))).ok());
}

TEST_CASE("shuffle of the worked example") {
  std::set<Seq> want{seq(P::p), seq(P::q), seq(P::r)};
  CHECK(shuffle_paths(seq(P::c), seq(P::d)) == want);
  CHECK(oracle::shuffle(seq(P::c), seq(P::d)) == want);
  CHECK(shuffle_paths(seq(P::c), seq("+xi{0,1}")) == std::set<Seq>{seq(P::c)});
  CHECK_THROWS_AS(shuffle_paths(seq(P::c), seq(P::c)), DomainError);
  CHECK(shuffle_paths(seq(P::c1), seq(P::c2)).count(seq(P::s_rev)));
}

TEST_CASE("two negative two-block paths give six interleavings") {
  Seq a = seq("-xi{0} +xi.0{0} -xi.0.0{0} +xi.0.0.0{0}");
  Seq b = seq("-sigma{0} +sigma.0{0} -sigma.0.0{0} +sigma.0.0.0{0}");
  auto s = shuffle_paths(a, b);
  CHECK(s.size() == 6);
  CHECK(s == oracle::shuffle(a, b));
}

TEST_CASE("shuffle with two daimons") {
  Seq a = seq("+xi{0,1} -xi.0{0} #");
  Seq b = seq("+xi{0,1} -xi.1{0} #");
  auto s = shuffle_paths(a, b);
  CHECK(s == oracle::shuffle(a, b));
  CHECK(s == std::set<Seq>{seq("+xi{0,1} -xi.0{0} #"), seq("+xi{0,1} -xi.1{0} #")});
}

TEST_CASE("shuffle closure") {
  auto cl = shuffle_closure({seq(P::c), seq(P::d)});
  CHECK(cl == std::set<Seq>{seq(P::c), seq(P::d), seq(P::p), seq(P::q), seq(P::r)});
  CHECK(shuffle_closure({seq(P::c)}) == std::set<Seq>{seq(P::c)});
}

TEST_CASE("coherence") {
  CHECK(coherent(seq(P::c), seq(P::d)));
  CHECK(coherent(seq(P::c), seq(P::c)));
  CHECK_FALSE(coherent(seq("+xi{0} -xi.0{0} +xi.0.0{}"), seq("+xi{0} -xi.0{0} +xi.0.0{1}")));
  CHECK_FALSE(coherent(seq("+xi{0,1} -xi.0{} +sigma{}"), seq("+xi{0,1} -xi.1{} +sigma{}")));
  CHECK_THROWS_AS(coherent(seq(P::c), xs, seq(P::c), Base::pos(parse_address("xi"))), DomainError);
}

TEST_CASE("designs from paths and back") {
  auto ws = oracle::load("paths-d");
  const Design& D = ws.designs.at("D");
  CHECK(D.chronicles == prefix_closure({seq(P::c), seq(P::d)}));
  // the empty sequence is not a chronicle, so the prefix closure of c and d has 7 members
  CHECK(D.chronicles.size() == 7);
  CHECK(design_from_paths_single({seq(P::p), seq(P::q), seq(P::r)}, xs) == D);
  CHECK(design_from_paths_single({seq(P::c)}, xs).chronicles == prefixes(seq(P::c)));
  Address xi = parse_address("xi");
  CHECK(design_from_paths_single({seq("#")}, Base::pos(xi)) == dai_design(xi));

  auto paths = paths_of_design(D);
  std::set<Seq> maximal;
  for (const auto& p : paths)
    if (p.size() == 7) maximal.insert(p);
  CHECK(maximal == std::set<Seq>{seq(P::p), seq(P::q), seq(P::r)});
  CHECK(paths_of_design(dai_design(xi)) == std::set<Seq>{seq("#")});
}

TEST_CASE("design_from_paths names an incoherent pair") {
  Base b = Base::pos(parse_address("xi"));
  try {
    design_from_paths({seq("+xi{0} -xi.0{0} +xi.0.0{}"), seq("+xi{0} -xi.0{0} +xi.0.0{1}")}, b);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("not coherent") != std::string::npos);
  }
}

TEST_CASE("paths of the negative design E") {
  auto ws = oracle::load("paths-e");
  auto paths = paths_of_design(ws.designs.at("E"));
  CHECK(paths.count(ws.paths.at("p").seq));
  CHECK_FALSE(paths.count(ws.paths.at("q").seq));
  CHECK(validate_path(ws.paths.at("q").seq, ws.paths.at("q").base).ok());
}

TEST_CASE("completion") {
  Address xi = parse_address("xi");
  Design d{Base::pos(xi), {seq("+xi{0}")}};
  std::set<Ramification> u{{}, {0}, {0, 1}};
  Design c = complete(d, u);
  CHECK(c.chronicles.size() == 1 + 2 * u.size());
  for (const auto& I : u) CHECK(c.contains(seq(("+xi{0} -xi.0" + to_string(I) + " #").c_str())));
  CHECK(complete(dai_design(xi), u) == dai_design(xi));
  CHECK(complete(c, u) == c);
}

TEST_CASE("design validation") {
  Address xi = parse_address("xi");
  CHECK(design_violation(Design{Base::pos(xi), {}}).has_value());
  CHECK(design_violation(Design{Base::pos(xi), {seq("+xi{0}"), seq("+xi{0} -xi.0{}")}}).has_value());
  CHECK(design_violation(Design{Base::pos(xi), {seq("+xi{0} -xi.0{}")}}).has_value());
  CHECK_FALSE(design_violation(empty_design(xi)).has_value());
  CHECK(dai_design(xi).is_dai());
}

TEST_CASE("the oracles agree with the engine on the worked sequences") {
  for (const char* s : {P::c, P::d, P::p, P::q, P::r, P::s_jump, P::s_rev})
    CHECK(oracle::is_path(seq(s), xs) == validate_path(seq(s), xs).ok());
  CHECK_FALSE(oracle::is_path(oracle::dual(seq(P::s_rev)), dual_base(xs)));
}
