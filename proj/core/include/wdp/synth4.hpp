#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdp/quadmod.hpp"
#include "wdp/typetab.hpp"

namespace wdp::synth4 {

enum class Sq { Square, NonSquare };

// A Galois orbit of roots of P: one monic irreducible factor of degree deg.
struct Slot {
  int deg = 1;
};
struct Part {
  int slot = 0;
  int exp = 1;
};
enum class DeltaKind {
  Free,   // any unit modulo F
  Fixed,  // the constant `fixed`
  Eval,   // the constant F_{eval_summand}(theta_{eval_slot}); eval_slot rational
};
struct Summand {
  std::vector<Part> parts;  // F = prod G_slot^exp
  DeltaKind kind = DeltaKind::Free;
  int fixed = 1;
  int eval_summand = 0, eval_slot = 0;
};
// scale * delta_summand(theta_slot) * (theta_slot - theta_twist) has class
// `target` in F_{q^deg}; twist = -1 for none, otherwise a rational slot.
struct RootConstraint {
  int summand = 0, slot = 0, twist = -1;
  Sq target = Sq::Square;
  int scale = 1;
};
// prod over summands of N_F(delta) has class `target` in F_q.
struct NormConstraint {
  std::vector<int> summands;
  Sq target = Sq::Square;
};
struct Recipe {
  std::string type;  // "12" or "O3"
  std::vector<Slot> slots;
  std::vector<Summand> summands;
  std::vector<RootConstraint> roots;
  std::vector<NormConstraint> norms;
  int rational_slots() const;
};

const std::vector<Recipe>& recipes();  // types 1..58, then O1..O18
const Recipe& recipe(const std::string& type);

struct NotRealizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Witness {
  std::vector<gf::Poly> slot_polys;
  quad::Module module;
};
// Seeded search for slot polynomials and deltas meeting every constraint.
Witness residue_search(const Recipe& r, const gf::Field& K, std::uint64_t seed, int max_tries = 20000);
// Checks a witness against its recipe.
bool satisfies(const Recipe& r, const gf::Field& K, const Witness& w);

struct Result {
  quad::Pair pair;
  std::string method;  // "module" or "q3-blocks"
  Witness witness;     // empty for q3-blocks
  std::vector<int> q3_classes;  // square classes used by q3-blocks, 1 or -1
};
Result synthesize(const types::ArithmeticType& at, const gf::Field& K, std::uint64_t seed = 1);

}  // namespace wdp::synth4
