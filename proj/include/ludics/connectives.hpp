#pragma once

#include <vector>

#include "ludics/behaviour.hpp"

namespace ludics {

// constants on a given address
Behaviour zero(const Address& a, Mode m = Mode::Fast);
Behaviour one(const Address& a, Mode m = Mode::Fast);
Behaviour top(const Address& a, Mode m = Mode::Fast);
Behaviour bot(const Address& a, Mode m = Mode::Fast);

// pointwise tensor of two positive designs on the same base; Dai absorbs
Design tensor_designs(const Design& a, const Design& b);

// widen the first action of every design of A by each ramification in B's directory, Dai adjoined
Behaviour extension(const Behaviour& a, const Behaviour& b);

// N on xi.i |- becomes a positive behaviour on |- xi
Behaviour shift_pos(const Behaviour& n);
// P on |- xi.i becomes a negative behaviour on xi |-
Behaviour shift_neg(const Behaviour& p);
// strips the first action of a shift: P on |- xi with first action (+,xi,{i}) gives N on xi.i |-
Behaviour unshift(const Behaviour& p);

Behaviour oplus(const std::vector<Behaviour>& bs);
Behaviour with_(const std::vector<Behaviour>& ns);
Behaviour tensor(const std::vector<Behaviour>& ps);
Behaviour par(const std::vector<Behaviour>& ns);

bool alien(const Behaviour& a, const Behaviour& b);
bool disjoint(const Behaviour& a, const Behaviour& b);

// visitable paths of a tensor from those of its factors: shuffles whose dual is a path
std::set<Seq> tensor_visitable_formula(const Behaviour& a, const Behaviour& b);

}  // namespace ludics
