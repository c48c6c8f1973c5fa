#include "doctest.h"
#include "wdp/count.hpp"
#include "wdp/oracle.hpp"
#include "wdp/synth4.hpp"
#include "wdp/zeta.hpp"

using namespace wdp;

namespace {

quad::Pair synth(int type_no, int p, int m = 1, std::uint64_t seed = 1) {
  return synth4::synthesize(types::type_table(4).by_number(type_no), gf::field(p, m), seed).pair;
}

}  // namespace

TEST_CASE("smooth quadric threefold over F_3") {
  // Qinf = x0^2 + ... + x4^2 and Q0 = 0: every point of the quadric counts
  quad::Pair P{3, 1, gf::Matrix(5, 5), gf::identity(5)};
  CHECK(count::count_brute(P, 1) == 40);
}

TEST_CASE("counters on synthesized surfaces") {
  CHECK(count::count_charsum(synth(11, 5), 1) == 46);
  CHECK(count::count_brute(synth(11, 5), 1) == 46);
  auto P1 = synth(1, 3);
  CHECK(count::count_brute(P1, 1) == 25);
  CHECK(count::count_charsum(P1, 1) == 25);
  CHECK(count::count_charsum(P1, 2) == count::count_charsum(quad::embed_pair(P1, 2), 1));
  CHECK_THROWS(count::count_brute(synth(11, 5), 3));
}

TEST_CASE("charsum agrees with brute force") {
  auto chk = oracle::counters(100, {3, 5, 9, 25, 27}, 2);
  CHECK(chk.instances >= 100);
  CHECK_MESSAGE(chk.ok(), chk.first_failure);
}

TEST_CASE("singular points") {
  const auto& T4 = types::type_table(4);
  CHECK(count::singular_points(synth4::synthesize(T4.ordinary(1), gf::field(7, 1)).pair, 1).empty());
  CHECK(count::singular_points(synth(58, 7), 1).size() == 1);
  // the four A1 points form one Frobenius orbit of length 4
  auto P48 = synth(48, 3);
  std::vector<int> got;
  for (int n = 1; n <= 4; ++n) got.push_back(static_cast<int>(count::singular_points(P48, n).size()));
  CHECK(got == std::vector<int>{0, 0, 0, 4});
  for (int n = 1; n <= 4; ++n) CHECK(got[n - 1] == zeta::sing_locus_count(T4.by_number(48), n));
}

TEST_CASE("singular points become rational over the splitting field") {
  const auto& T4 = types::type_table(4);
  for (int t : {5, 17, 30, 41, 48, 52, 58}) {
    const auto& at = T4.by_number(t);
    CHECK(zeta::sing_locus_count(at, 12) == static_cast<int>(T4.geo[at.geo].components.size()));
  }
}

TEST_CASE("verify") {
  const auto& T4 = types::type_table(4);
  auto P = synth(11, 5);
  auto ok = count::verify(P, T4.by_number(11), 4);
  CHECK(ok.pass());
  CHECK(ok.counts_measured == ok.counts_predicted);
  auto bad = count::verify(P, T4.by_number(12), 4);
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.counts_ok);

  quad::Pair D{5, 1, gf::Matrix(5, 5), gf::Matrix(5, 5)};
  for (int i = 0; i < 4; ++i) D.Q0(i, i) = 1, D.Qinf(i, i) = 2;
  CHECK_THROWS_AS(count::verify(D, T4.by_number(11), 4), std::invalid_argument);
}
