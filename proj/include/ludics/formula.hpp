#pragma once

#include <string>
#include <vector>

#include "ludics/behaviour.hpp"

namespace ludics {

enum class Kind { Zero, One, Top, Bot, Plus, Tensor, With, Par, ShiftPos, ShiftNeg };

const char* kind_name(Kind k);
bool positive_kind(Kind k);
Kind dual_kind(Kind k);

// Every node carries its base address; a positive node lives on |- base, a negative one on base |-.
// Shifts record the index i of the child address base.i.
struct Formula {
  Kind kind = Kind::Zero;
  Address base;
  int index = -1;
  std::vector<Formula> children;

  bool positive() const { return positive_kind(kind); }
  Address child_address() const { return base.child(index); }

  bool operator==(const Formula&) const = default;
};

Formula leaf(Kind k, Address base);
Formula node(Kind k, Address base, std::vector<Formula> children);
Formula shift(Kind k, Address base, int index, Formula child);

// throws DomainError on polarity, address, disjointness or alienness violations
void check_formula(const Formula& f);
// the strict C_f grammar: P = 0 | 1 | +( x( up N ) ), N dually
bool in_cf(const Formula& f);

Formula dual_formula(const Formula& f);
std::size_t formula_depth(const Formula& f);

Behaviour eval_formula(const Formula& f, Mode m = Mode::Fast);

enum class DecomposeFailure { None, NotRegular, NotEssentiallyFinite };

struct DecompositionResult {
  bool decomposed = false;
  Formula formula;
  DecomposeFailure failure = DecomposeFailure::None;
  RegularityReport witness;
  std::string detail;
};

DecompositionResult decompose(const Behaviour& b);

bool formula_equiv(const Formula& a, const Formula& b);

// text form: up@xi.1 down@xi.1.0 top    tensor(F, G)   plus(F, G)   one@xi
std::string to_string(const Formula& f);
Formula parse_formula(const std::string& s, const std::optional<Address>& base = std::nullopt);

}  // namespace ludics
