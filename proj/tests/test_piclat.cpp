#include <random>
#include <set>

#include "doctest.h"
#include "wdp/piclat.hpp"

using namespace wdp::pic;
namespace pic = wdp::pic;

namespace {

// gram matrix test: preserves the pairing and fixes K
bool in_weyl(const IMat& m, int d) { return preserves_form(m, d) && pic::apply(m, canonical_class(d)) == canonical_class(d); }

}  // namespace

TEST_CASE("root and exceptional class counts") {
  // brute force in a wider box finds nothing new
  for (int d = 3; d <= 6; ++d) {
    CHECK(enumerate_box(d, -2, 0, 4, 3) == roots(d));
    CHECK(enumerate_box(d, -1, -1, 4, 3) == exceptional_classes(d));
  }
  CHECK(roots(6).size() == 8);
  CHECK(roots(5).size() == 20);
  CHECK(roots(4).size() == 40);
  CHECK(roots(3).size() == 72);
  CHECK(exceptional_classes(6).size() == 6);
  CHECK(exceptional_classes(5).size() == 10);
  CHECK(exceptional_classes(4).size() == 16);
  CHECK(exceptional_classes(3).size() == 27);
}

TEST_CASE("reflections") {
  for (int d = 3; d <= 6; ++d)
    for (auto& a : roots(d)) {
      IMat s = reflection(a);
      CHECK(pic::apply(s, a) == neg(a));
      CHECK(pic::apply(s, canonical_class(d)) == canonical_class(d));
      CHECK(mul(s, s) == identity(s.n));
    }
  // s_{E1-E2} swaps E1 and E2
  IMat s = reflection(Vec{0, 1, -1, 0, 0, 0});
  CHECK(pic::apply(s, basis_vector(4, 1)) == basis_vector(4, 2));
  CHECK_THROWS(reflection(Vec{1, 0, 0, 0, 0, 0}));
}

TEST_CASE("Weyl group orders and closure") {
  CHECK(weyl_group(6).size() == 12);
  CHECK(weyl_group(5).size() == 120);
  CHECK(weyl_group(4).size() == 1920);
  CHECK(weyl_group(3).size() == 51840);
  for (int d : {5, 6}) {
    const auto& W = weyl_group(d);
    for (auto& m : W.elems) CHECK(in_weyl(m, d));
  }
  std::mt19937_64 rng(5);
  for (int d : {3, 4}) {
    const auto& W = weyl_group(d);
    for (int i = 0; i < 2000; ++i) {
      int g = std::uniform_int_distribution<int>(0, W.size() - 1)(rng);
      int h = std::uniform_int_distribution<int>(0, W.size() - 1)(rng);
      CHECK(in_weyl(W.elems[g], d));
      CHECK(W.elems[W.mul(g, h)] == mul(W.elems[g], W.elems[h]));
      CHECK(W.mul(g, W.inv(g)) == W.find(identity(W.n)));
    }
  }
}

TEST_CASE("roots and exceptional classes are stable under the generators") {
  for (int d = 3; d <= 6; ++d) {
    auto R = roots(d), E = exceptional_classes(d);
    std::set<Vec> rs(R.begin(), R.end()), es(E.begin(), E.end());
    for (auto& a : simple_roots(d)) {
      IMat s = reflection(a);
      for (auto& v : R) CHECK(rs.count(pic::apply(s, v)) == 1);
      for (auto& v : E) CHECK(es.count(pic::apply(s, v)) == 1);
    }
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(cyclo_to_string(cyclotomic_factor(char_poly(identity(6)))) == "Phi1^6");
  CHECK(cyclo_to_string(cyclotomic_factor(char_poly(reflection(Vec{0, 1, -1, 0, 0, 0})))) == "Phi1^5Phi2");
  // conjugation invariance on random pairs
  std::mt19937_64 rng(9);
  const auto& W = weyl_group(3);
  for (int i = 0; i < 1000; ++i) {
    int g = std::uniform_int_distribution<int>(0, W.size() - 1)(rng);
    int w = std::uniform_int_distribution<int>(0, W.size() - 1)(rng);
    CHECK(char_poly(W.elems[W.mul(W.mul(g, w), W.inv(g))]) == char_poly(W.elems[w]));
    CHECK_NOTHROW(cyclotomic_factor(char_poly(W.elems[w])));
  }
  CHECK(parse_cyclo("Phi1^4Phi2") == Cyclo{{1, 4}, {2, 1}});
  CHECK(from_cyclo(parse_cyclo("Phi1Phi2")) == IPoly{-1, 0, 1});
}

TEST_CASE("Smith form torsion") {
  CHECK(quotient_torsion(simple_roots(3), simple_roots(3)).empty());
  // 3A2 inside the E6 root lattice: A2 spans from E1-E2, E2-E3 / E4-E5, E5-E6 / E0-E1-E2-E3 and a partner
  std::vector<Vec> a2x3 = {{0, 1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0}, {0, 0, 0, 0, 1, -1, 0},
                           {0, 0, 0, 0, 0, 1, -1}, {1, 0, 0, 0, -1, -1, -1}, {1, -1, -1, -1, 0, 0, 0}};
  for (auto& a : a2x3) CHECK(pairing(a, a) == -2);
  auto t = quotient_torsion(a2x3, simple_roots(3));
  CHECK(t == std::vector<long long>{3});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
}
