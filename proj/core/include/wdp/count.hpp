#pragma once

#include <string>
#include <vector>

#include "wdp/quadmod.hpp"
#include "wdp/typetab.hpp"

namespace wdp::count {

// #X_s(F_{q^n}) by enumerating P^4(F_{q^n}); q^n <= 32.
long long count_brute(const quad::Pair& P, int n);
// #X_s(F_{q^n}) from quadratic character sums over the pencil members.
long long count_charsum(const quad::Pair& P, int n);

// Singular points of X_s defined over F_{q^n}, coordinates in F_{q^n},
// normalized so the first nonzero coordinate is 1; sorted.
std::vector<std::vector<gf::Elt>> singular_points(const quad::Pair& P, int n);

// Frobenius orbits on the morphism classes, read off the pencil.
std::vector<types::OrbitSig> measured_signature(const quad::Pair& P);

struct Report {
  std::string type;
  long long q = 0;
  int nmax = 0;
  std::string segre_measured, segre_expected;
  std::vector<long long> counts_measured, counts_predicted;
  std::vector<int> sing_measured, sing_predicted;
  std::string signature_measured, signature_expected;
  bool segre_ok = false, counts_ok = false, sing_ok = false, signature_ok = false;
  bool pass() const { return segre_ok && counts_ok && sing_ok && signature_ok; }
};

// Throws std::invalid_argument on a degenerate pencil.
Report verify(const quad::Pair& P, const types::ArithmeticType& claimed, int nmax = 4);

std::string signature_string(const std::vector<types::OrbitSig>& sig);

}  // namespace wdp::count
