#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ludics {

struct DomainError : std::logic_error {
  using std::logic_error::logic_error;
};

// raised when an address lies outside every base address
struct StructuralError : DomainError {
  using DomainError::DomainError;
};

struct ResourceError : std::runtime_error {
  std::size_t budget;
  ResourceError(const std::string& what, std::size_t b)
      : std::runtime_error(what), budget(b) {}
};

// ---------------------------------------------------------------- addresses

struct Address {
  std::string root;
  std::vector<int> steps;

  Address() = default;
  explicit Address(std::string r, std::vector<int> s = {})
      : root(std::move(r)), steps(std::move(s)) {}

  Address child(int i) const;
  std::optional<Address> parent() const;
  std::size_t length() const { return steps.size(); }

  // reflexive
  bool is_prefix_of(const Address& other) const;
  bool comparable(const Address& other) const {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  auto operator<=>(const Address&) const = default;
  bool operator==(const Address&) const = default;
};

// ---------------------------------------------------------------- actions

enum class Polarity : std::uint8_t { Pos, Neg };

inline Polarity opposite(Polarity p) {
  return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

// sorted, duplicate-free
using Ramification = std::vector<int>;

Ramification make_ramification(std::vector<int> xs);

struct Action {
  bool daimon = false;
  Polarity pol = Polarity::Pos;
  Address focus;
  Ramification ram;

  static Action dai() { return Action{true, Polarity::Pos, {}, {}}; }
  static Action pos(Address a, Ramification r) {
    return Action{false, Polarity::Pos, std::move(a), make_ramification(std::move(r))};
  }
  static Action neg(Address a, Ramification r) {
    return Action{false, Polarity::Neg, std::move(a), make_ramification(std::move(r))};
  }

  bool positive() const { return daimon || pol == Polarity::Pos; }
  bool negative() const { return !positive(); }
  bool proper() const { return !daimon; }

  // daimon is left unchanged
  Action flipped() const;

  // does this action create the focus of `other`
  bool creates(const Address& a) const;

  std::strong_ordering operator<=>(const Action& o) const;
  bool operator==(const Action& o) const;
};

// ---------------------------------------------------------------- bases

struct Sequent {
  std::optional<Address> left;
  std::vector<Address> right;  // sorted

  bool positive() const { return !left.has_value(); }
  std::vector<Address> addresses() const;
  auto operator<=>(const Sequent&) const = default;
  bool operator==(const Sequent&) const = default;
};

struct Base {
  std::vector<Sequent> sequents;

  Base() = default;
  explicit Base(std::vector<Sequent> s) : sequents(std::move(s)) {}
  static Base single(std::optional<Address> left, std::vector<Address> right);
  static Base pos(Address a) { return single(std::nullopt, {std::move(a)}); }
  static Base neg(Address a) { return single(std::move(a), {}); }

  bool has_positive() const;
  // single sequent with an empty left side
  bool positive() const { return sequents.size() == 1 && sequents[0].positive(); }
  bool single_sequent() const { return sequents.size() == 1; }
  bool simple() const;
  std::vector<Address> addresses() const;
  // index of the sequent containing `a` (as a base address), or npos
  std::size_t sequent_of(const Address& a) const;
  // index of the sequent with a base address that is a prefix of `a`, or npos
  std::size_t sequent_under(const Address& a) const;
  const Address& main_address() const;  // simple bases only

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  auto operator<=>(const Base&) const = default;
  bool operator==(const Base&) const = default;
};

void validate_base(const Base& b);
Base dual_base(const Base& b);

// ---------------------------------------------------------------- sequences

using Seq = std::vector<Action>;

enum class Verdict { Ok, Violation, Structural };

enum class Condition {
  None,
  Alternation,
  Justification,
  Linearity,
  NegativeJump,
  Daimon,
  Totality,
  Chronicle,  // chronicles only: negative action not justified by its predecessor
};

const char* condition_name(Condition c);

struct PathReport {
  Verdict verdict = Verdict::Ok;
  Condition condition = Condition::None;
  std::size_t index = 0;
  std::string detail;
  std::vector<int> justifier;  // -1 for initial actions and daimons

  bool ok() const { return verdict == Verdict::Ok; }
};

// justifier indices computed without a base: -1 when nothing earlier creates the focus
std::vector<int> justifiers(const Seq& s);

PathReport validate_path(const Seq& s, const Base& b);
PathReport validate_chronicle(const Seq& s, const Base& b);

Seq view(const Seq& s);
// views of all non-empty prefixes
std::set<Seq> views_of_prefixes(const Seq& s);
Seq dual(const Seq& s);
PathReport is_reversible(const Seq& s, const Base& b);

bool positive_ended(const Seq& s);
bool is_prefix(const Seq& p, const Seq& q);
// the justifier chain ending at index i, oldest first
Seq justifier_chain(const Seq& s, std::size_t i);

// ---------------------------------------------------------------- shuffle

// throws DomainError when undefined
std::set<Seq> shuffle_paths(const Seq& p, const Seq& q);
std::optional<std::set<Seq>> try_shuffle(const Seq& p, const Seq& q);
std::set<Seq> shuffle_sets(const std::set<Seq>& P, const std::set<Seq>& Q);
std::set<Seq> shuffle_closure(const std::set<Seq>& P);

// ---------------------------------------------------------------- designs

struct Design {
  Base base;
  std::set<Seq> chronicles;

  bool positive() const { return base.positive(); }
  bool empty() const { return chronicles.empty(); }
  bool is_dai() const;
  std::set<Seq> maximal() const;
  std::vector<Action> first_actions() const;
  // actions a such that c·a is a chronicle
  std::vector<Action> children(const Seq& c) const;
  bool contains(const Seq& c) const { return chronicles.count(c) > 0; }
  // number of chronicles ending with a proper action
  std::size_t size() const;

  auto operator<=>(const Design&) const = default;
  bool operator==(const Design&) const = default;
};

struct Net {
  std::vector<Design> designs;
  Base base() const;
  std::set<Seq> chronicles() const;
};

Design make_design(Base b, std::set<Seq> chronicles);  // validates
Design dai_design(const Address& a);
Design empty_design(const Address& a);

std::optional<std::string> design_violation(const Design& d);
void validate_design(const Design& d);
void validate_net(const Net& n);

bool coherent(const Seq& c1, const Seq& c2);
bool coherent(const Seq& c1, const Base& b1, const Seq& c2, const Base& b2);

// closes a set of chronicles under non-empty prefixes
std::set<Seq> prefix_closure(const std::set<Seq>& cs);

Net design_from_paths(const std::set<Seq>& paths, const Base& b);
Design design_from_paths_single(const std::set<Seq>& paths, const Base& b);

std::set<Seq> paths_of_chronicles(const std::set<Seq>& chronicles, const Base& b);
std::set<Seq> paths_of_design(const Design& d);
std::set<Seq> paths_of_net(const Net& n);

// p is a path whose views all lie in d, allowing a final daimon after a negative view in d
bool in_design_or_truncation(const Seq& p, const Design& d);

std::set<Ramification> ramification_universe(const std::vector<Design>& ds);
Design complete(const Design& d, const std::set<Ramification>& universe);

std::size_t max_slice_size(const Design& d);

}  // namespace ludics
