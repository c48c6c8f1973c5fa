#include "doctest.h"
#include "wdp/typetab.hpp"
#include "wdp/zeta.hpp"

using namespace wdp;
using zeta::Int;

TEST_CASE("point counts") {
  const auto& T4 = types::type_table(4);
  CHECK(zeta::count_weak(T4.ordinary(1), 5, 1) == 56);
  CHECK(zeta::count_weak(T4.by_number(8), 3, 1) == 10);
  CHECK(zeta::count_weak(types::type_table(3).by_number(1), 3, 1) == 31);
  CHECK(zeta::count_sing(T4.by_number(11), 5, 1) == 46);
  CHECK(zeta::count_sing(T4.by_number(8), 3, 1) == 7);
  for (int o = 1; o <= 18; ++o)
    for (int n = 1; n <= 4; ++n) CHECK(zeta::count_sing(T4.ordinary(o), 7, n) == zeta::count_weak(T4.ordinary(o), 7, n));
}

TEST_CASE("counts are positive integers") {
  for (int d = 3; d <= 6; ++d)
    for (auto* at : types::type_table(d).numbered())
      for (long long q : {2, 3, 4, 5, 7, 9})
        for (int n = 1; n <= 6; ++n) {
          CHECK(zeta::count_weak(*at, q, n) >= 1);
          CHECK(zeta::count_sing(*at, q, n) >= 1);
        }
}

TEST_CASE("zeta denominators") {
  const auto& T4 = types::type_table(4);
  // D5: (1 - T)(1 - q^2 T)(1 - q T)
  auto d58 = zeta::zeta_denominator(T4.by_number(58), 3);
  CHECK(d58 == std::vector<Int>{1, -13, 39, -27});
  // split ordinary: (1 - T)(1 - q T)^6 (1 - q^2 T)
  auto d = zeta::zeta_denominator(T4.ordinary(1), 2);
  CHECK(d.size() == 9);
  CHECK(d[1] == -(1 + 6 * 2 + 4));
  // degree 6 type 5: chi_pic_s = Phi1 Phi3, so det(1 - qT w) = 1 - q^3 T^3
  auto d5 = zeta::zeta_denominator(types::type_table(6).by_number(5), 2);
  CHECK(d5 == std::vector<Int>{1, -5, 4, -8, 40, -32});
}

TEST_CASE("log expansion reproduces the counts") {
  for (int d = 3; d <= 6; ++d)
    for (auto* at : types::type_table(d).numbered())
      for (long long q : {3, 5}) {
        auto c = zeta::counts_from_denominator(zeta::zeta_denominator(*at, q), 12);
        for (int n = 1; n <= 12; ++n) CHECK(c[n - 1] == zeta::count_sing(*at, q, n));
      }
}

TEST_CASE("trace tables have period dividing the order") {
  for (int d = 3; d <= 6; ++d)
    for (auto* at : types::type_table(d).numbered()) {
      CHECK(at->order <= 12);
      auto t = zeta::trace_pic(*at, 24);
      for (int n = 0; n + at->order < 24; ++n) CHECK(t[n] == t[n + at->order]);
    }
}

TEST_CASE("rational singular points") {
  const auto& T4 = types::type_table(4);
  // type 48: 4A1 with components in a 4-cycle
  CHECK(zeta::sing_locus_count(T4.by_number(48), 1) == 0);
  CHECK(zeta::sing_locus_count(T4.by_number(48), 2) == 0);  // w^2 is two 2-cycles on the components
  CHECK(zeta::sing_locus_count(T4.by_number(48), 3) == 0);
  CHECK(zeta::sing_locus_count(T4.by_number(48), 4) == 4);
  CHECK(zeta::sing_locus_count(T4.by_number(58), 1) == 1);
  CHECK(zeta::sing_locus_count(T4.by_number(14), 1) == 0);
  CHECK(zeta::sing_locus_count(T4.by_number(14), 2) == 2);
  CHECK(zeta::sing_locus_count(T4.by_number(30), 1) == 1);
}
