#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wdp/quadmod.hpp"

// Independent cross-checks: each compares a formula or fast path against a
// slow computation from first principles. Shared by `selftest` and the tests.
namespace wdp::oracle {

struct Check {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return instances > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Random symmetric pair over K with Qinf invertible.
quad::Pair random_pair(const gf::Field& K, std::mt19937_64& rng);
// Random monic F of degree 1..5 and delta a unit modulo F.
quad::Cyclic random_cyclic(const gf::Field& K, std::mt19937_64& rng);

// count_charsum against count_brute over the listed field sizes, n = 1.
Check counters(int instances, const std::vector<int>& qs, std::uint64_t seed);
// Discriminant against det(gram) (item 1) and the restricted discriminant
// against the form on V / ker of (theta - T) delta Phi_F (item 2).
Check discriminants(int instances, const std::vector<int>& qs, std::uint64_t seed);

// Rational smooth points of X_s lying on no line of X_s, by testing the
// tangent-plane section at each point.
long long off_curve_brute(const quad::Pair& P);
// off_curve_count(...).n(q) against off_curve_brute on synthesized surfaces.
Check off_curve(const std::vector<int>& types, const std::vector<int>& qs, std::uint64_t seed);
// count_brute against zeta::count_sing on synthesized surfaces, q^n <= 32.
Check brute_counts(const std::vector<int>& types, const std::vector<int>& qs, std::uint64_t seed);

}  // namespace wdp::oracle
