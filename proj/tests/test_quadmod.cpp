#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "wdp/oracle.hpp"
#include "wdp/quadmod.hpp"

using namespace wdp;
using gf::Elt;
using gf::Poly;

namespace {

gf::Matrix mat(std::initializer_list<std::initializer_list<Elt>> rows) {
  gf::Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (Elt x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

Poly power(const gf::Field& K, const Poly& f, int e) {
  Poly r{1};
  for (int i = 0; i < e; ++i) r = gf::pmul(K, r, f);
  return r;
}

quad::Cyclic lin(const gf::Field& K, Elt theta, Elt delta, int e = 1) {
  return {power(K, gf::linear(K, theta), e), gf::pconst(delta)};
}

}  // namespace

TEST_CASE("gram matrices") {
  const auto& K5 = gf::field(5, 1);
  CHECK(quad::gram(K5, lin(K5, 3, 2)) == mat({{2}}));
  CHECK(quad::gram(K5, {Poly{0, 0, 1}, Poly{1}}) == mat({{0, 1}, {1, 0}}));
  const auto& K3 = gf::field(3, 1);
  CHECK(quad::gram(K3, {Poly{1, 0, 1}, Poly{1}}) == mat({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(quad::check_cyclic(K5, {Poly{0, 1}, Poly{0}}), std::invalid_argument);
}

TEST_CASE("to_pair") {
  const auto& K = gf::field(7, 1);
  quad::Module M;
  for (Elt i = 0; i < 5; ++i) M.push_back(lin(K, i, i + 1));
  auto P = quad::to_pair(K, M);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(P.Qinf(i, j) == (i == j ? Elt(i + 1) : 0));
      CHECK(P.Q0(i, j) == (i == j ? K.mul(i, i + 1) : 0));
    }

  auto H = quad::to_pair(K, {{Poly{0, 0, 0, 0, 0, 1}, Poly{1}}});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(H.Qinf(i, j) == (i + j == 4 ? 1u : 0u));
      CHECK(H.Q0(i, j) == (i + j == 3 ? 1u : 0u));
    }
  CHECK_THROWS_AS(quad::to_pair(K, {lin(K, 1, 1)}), std::invalid_argument);
}

TEST_CASE("pencil polynomial is the product of the annihilators") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const auto& K = gf::field(p, m);
    for (int it = 0; it < 40; ++it) {
      quad::Module M;
      int total = 0;
      while (total < 5) {
        auto c = oracle::random_cyclic(K, rng);
        if (total + gf::deg(c.F) > 5) continue;
        total += gf::deg(c.F);
        M.push_back(c);
      }
      Poly prod{1};
      for (auto& c : M) prod = gf::pmul(K, prod, c.F);
      auto P = quad::to_pair(K, M);
      auto pp = quad::pencil_poly(P);
      CHECK(pp == gf::pscale(K, prod, gf::det(K, P.Qinf)));
    }
  }
}

TEST_CASE("discriminants") {
  const auto& K5 = gf::field(5, 1);
  CHECK(quad::discriminant(K5, lin(K5, 2, 3)) == 3);
  CHECK(quad::discriminant(K5, {Poly{0, 0, 1}, Poly{1}}) == K5.neg(1));
  // F = T(T - 1), theta = 0
  quad::Cyclic c{gf::pmul(K5, gf::linear(K5, 0), gf::linear(K5, 1)), Poly{1}};
  CHECK(quad::restricted_discriminant(K5, c, K5, 0) == K5.neg(1));
  CHECK(quad::restricted_discriminant(K5, lin(K5, 2, 1, 5), K5, 2) == 1);
  CHECK_THROWS(quad::restricted_discriminant(K5, c, K5, 3));

  auto chk = oracle::discriminants(200, {3, 5, 7, 9}, 11);
  CHECK(chk.instances >= 400);
  CHECK_MESSAGE(chk.ok(), chk.first_failure);
}

TEST_CASE("Segre symbols") {
  const auto& K = gf::field(7, 1);
  quad::Module split;
  for (Elt i = 0; i < 5; ++i) split.push_back(lin(K, i, 1));
  CHECK(quad::segre_symbol(quad::to_pair(K, split)).symbol() == "[11111]");

  CHECK(quad::segre_symbol(quad::to_pair(K, {lin(K, 2, 1, 4), lin(K, 2, 3)})).symbol() == "[(41)]");

  quad::Cyclic f{gf::pmul(K, gf::linear(K, 0), gf::linear(K, 1)), Poly{1}};
  auto s = quad::segre_symbol(quad::to_pair(K, {f, lin(K, 3, 2), lin(K, 3, 1, 2)}));
  CHECK(s.symbol() == "[(21)11]");
  for (auto& g : s.groups) {
    if (g.root_poly != gf::linear(K, 3)) continue;
    auto M = quad::member(quad::to_pair(K, {f, lin(K, 3, 2), lin(K, 3, 1, 2)}), K, 3, false);
    CHECK(5 - gf::rank(K, M) == g.corank());
  }
  CHECK(quad::canonical_segre("[11(21)]") == "[(21)11]");
}

TEST_CASE("Segre symbols reproduce module exponents") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const auto& K = gf::field(p, m);
    std::vector<Elt> pool;
    for (Elt x = 0; x < std::min<Elt>(K.q, 4); ++x) pool.push_back(x);
    for (int it = 0; it < 170; ++it) {
      // powers of linear factors over a small root pool: exponents are known
      std::map<Elt, std::vector<int>> exps;
      quad::Module M;
      int total = 0;
      while (total < 5) {
        Elt th = pool[rng() % pool.size()];
        int e = 1 + static_cast<int>(rng() % (5 - total));
        Elt d = 1 + static_cast<Elt>(rng() % (K.q - 1));
        M.push_back(lin(K, th, d, e));
        exps[th].push_back(e);
        total += e;
      }
      auto P = quad::to_pair(K, M);
      auto s = quad::segre_symbol(P);
      std::map<Elt, std::vector<int>> got;
      for (auto& g : s.groups) {
        REQUIRE(g.deg == 1);
        REQUIRE(!g.root_poly.empty());
        Elt th = K.neg(g.root_poly.size() > 1 ? g.root_poly[0] : 0);
        got[th] = g.exps;
        CHECK(5 - gf::rank(K, quad::member(P, K, th, false)) == g.corank());
      }
      for (auto& [th, v] : exps) std::sort(v.rbegin(), v.rend());
      CHECK(got == exps);
      ++checked;
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("degenerate pencils") {
  const auto& K = gf::field(5, 1);
  quad::Pair P{5, 1, gf::Matrix(5, 5), gf::Matrix(5, 5)};
  for (int i = 0; i < 4; ++i) P.Q0(i, i) = 1, P.Qinf(i, i) = static_cast<Elt>(i + 1);
  CHECK(quad::degenerate(P));
  CHECK_THROWS_AS(quad::segre_symbol(P), std::invalid_argument);
  P.Q0(4, 4) = 1;
  CHECK_FALSE(quad::degenerate(P));
  (void)K;
}

TEST_CASE("vertex rationality") {
  const auto& K = gf::field(7, 1);
  CHECK(quad::vertex_rationality(K, 1, K.neg(1)));
  CHECK_FALSE(quad::vertex_rationality(K, 3, K.neg(1)));

  // point-level oracle: the kernel line of the rank-3 member meets X_s in
  // two points, both rational or a conjugate pair
  std::mt19937_64 rng(5);
  int n = 0;
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const auto& F = gf::field(p, m);
    for (int it = 0; it < 13; ++it, ++n) {
      Elt th = static_cast<Elt>(rng() % F.q);
      Elt d1 = 1 + static_cast<Elt>(rng() % (F.q - 1)), d2 = 1 + static_cast<Elt>(rng() % (F.q - 1));
      Elt other = F.add(th, 1);
      auto P = quad::to_pair(F, {lin(F, th, d1), lin(F, th, d2), lin(F, other, 1, 3)});
      auto ker = gf::kernel(F, quad::member(P, F, th, false));
      REQUIRE(ker.size() == 2);
      int rational = 0;
      for (Elt t = 0; t <= F.q; ++t) {
        std::vector<Elt> v(5);
        for (int i = 0; i < 5; ++i)
          v[i] = t == F.q ? ker[1][i] : F.add(ker[0][i], F.mul(t, ker[1][i]));
        if (gf::qform(F, P.Qinf, v) == 0) ++rational;
      }
      CHECK((rational == 2) == quad::vertex_rationality(F, d1, d2));
      CHECK(rational != 1);
    }
  }
  CHECK(n >= 50);
}
