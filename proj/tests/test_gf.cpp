#include <random>
#include <set>

#include "doctest.h"
#include "wdp/gf.hpp"

using namespace wdp::gf;

TEST_CASE("field sizes and Frobenius fixed points") {
  CHECK(field(3, 1).q == 3);
  CHECK(field(3, 2).q == 9);
  const Field& F = field(5, 3);
  int fixed = 0;
  for (Elt a = 0; a < F.q; ++a) fixed += F.frobenius(a) == a;
  CHECK(fixed == 5);
  // multiplicative group of F_9 has order 8
  const Field& K = field(3, 2);
  for (Elt a = 1; a < K.q; ++a) CHECK(K.pow(a, 8) == 1);
  CHECK(K.pow(K.generator(), 4) != 1);
}

TEST_CASE("field modulus is irreducible and lexicographically least") {
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {3, 4}, {5, 2}, {7, 3}}) {
    const Field& F = field(p, m);
    Poly mod(F.modulus.begin(), F.modulus.end());
    CHECK(is_irreducible(field(p, 1), mod));
  }
  CHECK(field(3, 2).modulus == std::vector<int>{1, 0, 1});  // T^2 + 1 is the least irreducible over F_3
}

TEST_CASE("parse_q") {
  CHECK(parse_q("3^2") == std::pair{3, 2});
  CHECK(parse_q("27") == std::pair{3, 3});
  CHECK_THROWS(parse_q("6"));
  CHECK_THROWS(parse_q("1"));
  CHECK_THROWS(parse_q("x"));
}

TEST_CASE("inverse and square classes") {
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field& F = field(p, m);
    for (Elt a = 1; a < F.q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    // is_square(ab) == (is_square(a) == is_square(b))
    for (Elt a = 1; a < F.q; ++a)
      for (Elt b = 1; b < F.q; ++b) CHECK(F.is_square(F.mul(a, b)) == (F.is_square(a) == F.is_square(b)));
  }
  CHECK(field(3, 1).is_square(1));
  CHECK_FALSE(field(3, 1).is_square(2));
  CHECK(field(3, 2).is_square(embed(field(3, 1), field(3, 2), 2)));
  CHECK_THROWS(field(2, 2).is_square(1));
}

TEST_CASE("embeddings are compatible ring maps") {
  const Field &K = field(3, 1), &E = field(3, 2), &L = field(3, 4);
  for (Elt a = 0; a < K.q; ++a) CHECK(embed(E, L, embed(K, E, a)) == embed(K, L, a));
  CHECK(embed(K, E, 1) == 1);
  for (Elt a = 0; a < E.q; ++a)
    for (Elt b = 0; b < E.q; ++b) {
      CHECK(embed(E, L, E.mul(a, b)) == L.mul(embed(E, L, a), embed(E, L, b)));
      CHECK(embed(E, L, E.add(a, b)) == L.add(embed(E, L, a), embed(E, L, b)));
    }
  // injective and Frobenius-equivariant
  std::set<Elt> img;
  for (Elt a = 0; a < E.q; ++a) {
    img.insert(embed(E, L, a));
    CHECK(embed(E, L, E.frobenius(a)) == L.frobenius(embed(E, L, a)));
  }
  CHECK(img.size() == E.q);
  CHECK_THROWS(embed(field(3, 2), field(3, 3), 1));
}

TEST_CASE("factorization") {
  const Field& F3 = field(3, 1);
  // T^3 - T = T (T - 1) (T + 1)
  auto f = factor(F3, Poly{0, 2, 0, 1});
  REQUIRE(f.size() == 3);
  for (auto& x : f) CHECK((deg(x.g) == 1 && x.mult == 1));
  CHECK(is_irreducible(F3, Poly{1, 0, 1}));
  // T (T^2 + 1)^2
  Poly g = pmul(F3, Poly{0, 1}, pmul(F3, Poly{1, 0, 1}, Poly{1, 0, 1}));
  auto h = factor(F3, g);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == Factor{Poly{0, 1}, 1});
  CHECK(h[1] == Factor{Poly{1, 0, 1}, 2});
  CHECK_THROWS(factor(F3, Poly{}));
}

TEST_CASE("factor products reproduce the input") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
    const Field& F = field(p, m);
    for (int i = 0; i < 50; ++i) {
      int d = std::uniform_int_distribution<int>(1, 6)(rng);
      Poly f(static_cast<size_t>(d) + 1);
      for (auto& c : f) c = std::uniform_int_distribution<Elt>(0, F.q - 1)(rng);
      if (f[d] == 0) f[d] = 1;
      Poly prod = pconst(f[d]);
      for (auto& x : factor(F, f)) {
        CHECK(is_irreducible(F, x.g));
        for (int k = 0; k < x.mult; ++k) prod = pmul(F, prod, x.g);
      }
      CHECK(prod == trim(f));
    }
  }
}

TEST_CASE("norm") {
  const Field& F5 = field(5, 1);
  CHECK(norm(F5, Poly{3, 1}, Poly{1, 1}) == 3);  // T - 2, d = T + 1: d(2) = 3
  const Field& F3 = field(3, 1);
  CHECK(norm(F3, Poly{1, 0, 1}, Poly{0, 1}) == 1);
  CHECK(norm(F3, Poly{1, 1, 0, 1}, Poly{2}) == 2);  // c^3 with c = 2
  CHECK_THROWS(norm(F3, Poly{1}, Poly{1}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Field& F = field(7, 1);
    Poly f{std::uniform_int_distribution<Elt>(0, 6)(rng), std::uniform_int_distribution<Elt>(0, 6)(rng),
           std::uniform_int_distribution<Elt>(0, 6)(rng), 1};
    Poly a{std::uniform_int_distribution<Elt>(0, 6)(rng), std::uniform_int_distribution<Elt>(0, 6)(rng)};
    Poly b{std::uniform_int_distribution<Elt>(0, 6)(rng), std::uniform_int_distribution<Elt>(0, 6)(rng), 1};
    CHECK(norm(F, f, pmod(F, pmul(F, a, b), f)) == F.mul(norm(F, f, trim(a)), norm(F, f, b)));
  }
}
