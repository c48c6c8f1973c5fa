#include <set>

#include "doctest.h"
#include "wdp/count.hpp"
#include "wdp/io.hpp"
#include "wdp/synth4.hpp"

using namespace wdp;

TEST_CASE("all numbered types verify for q = 3, 5, 7") {
  const auto& T4 = types::type_table(4);
  for (auto [p, m] : {std::pair{3, 1}, {5, 1}, {7, 1}}) {
    const auto& K = gf::field(p, m);
    for (auto* at : T4.numbered()) {
      auto r = synth4::synthesize(*at, K, 1);
      auto rep = count::verify(r.pair, *at, 4);
      CHECK_MESSAGE(rep.pass(), "type ", at->type_no, " q=", K.q);
      if (r.method == "module") CHECK(synth4::satisfies(synth4::recipe(at->name()), K, r.witness));
    }
  }
}

TEST_CASE("q = 3 block constructions") {
  const auto& T4 = types::type_table(4);
  const auto& K = gf::field(3, 1);
  // type 2 has seven fixed curves and needs no special block
  for (int t : {1, 3, 4, 6, 16, 18, 19, 21}) {
    auto r = synth4::synthesize(T4.by_number(t), K);
    CHECK(r.method == "q3-blocks");
    CHECK(count::verify(r.pair, T4.by_number(t), 4).pass());
  }
  // type 4 takes both blocks nonsquare
  CHECK(synth4::synthesize(T4.by_number(4), K).q3_classes == std::vector<int>{-1, -1});
  CHECK(synth4::synthesize(T4.by_number(1), gf::field(5, 1)).method == "module");
}

TEST_CASE("ordinary types") {
  const auto& T4 = types::type_table(4);
  for (int o = 1; o <= 18; ++o) {
    const auto& at = T4.ordinary(o);
    auto r = synth4::synthesize(at, gf::field(5, 1));
    CHECK(count::verify(r.pair, at, 4).pass());
    const auto& rec = synth4::recipe(at.name());
    if (rec.rational_slots() > 3) {
      CHECK_THROWS_AS(synth4::synthesize(at, gf::field(3, 1)), synth4::NotRealizable);
    }
  }
  CHECK_THROWS_AS(synth4::synthesize(T4.ordinary(1), gf::field(3, 1)), synth4::NotRealizable);
}

TEST_CASE("type 58 shape") {
  const auto& rec = synth4::recipe("58");
  REQUIRE(rec.summands.size() == 2);
  CHECK(rec.summands[0].parts.size() == 1);
  CHECK(rec.summands[0].parts[0].exp == 4);
  CHECK(rec.roots.empty());
  CHECK(rec.norms.empty());
}

TEST_CASE("type 8 over F_5") {
  const auto& K = gf::field(5, 1);
  const auto& rec = synth4::recipe("8");
  auto w = synth4::residue_search(rec, K, 4);
  CHECK(synth4::satisfies(rec, K, w));
  int quad = 0, lin = 0;
  for (auto& f : w.slot_polys) (gf::deg(f) == 2 ? quad : lin) += 1;
  CHECK(quad == 1);
  CHECK(lin == 2);
}

TEST_CASE("residue search") {
  const auto& K5 = gf::field(5, 1);
  synth4::Recipe four{"x", {{1}, {1}, {1}, {1}}, {{{{0, 1}, {1, 1}}}, {{{2, 2}}}, {{{3, 1}}}}, {}, {}};
  auto w = synth4::residue_search(four, K5, 9);
  CHECK(synth4::satisfies(four, K5, w));
  std::set<gf::Poly> distinct(w.slot_polys.begin(), w.slot_polys.end());
  CHECK(distinct.size() == 4);

  const auto& K3 = gf::field(3, 1);
  synth4::Recipe qr{"y", {{2}, {1}}, {{{{0, 1}}}, {{{1, 3}}}}, {}, {}};
  auto w3 = synth4::residue_search(qr, K3, 1);
  CHECK(gf::is_irreducible(K3, w3.slot_polys[0]));
  CHECK(gf::deg(w3.slot_polys[1]) == 1);

  synth4::Recipe clash = qr;
  clash.roots = {{1, 1, -1, synth4::Sq::Square, 1}, {1, 1, -1, synth4::Sq::NonSquare, 1}};
  CHECK_THROWS_AS(synth4::residue_search(clash, K3, 1, 2000), std::invalid_argument);
}

TEST_CASE("determinism") {
  const auto& T4 = types::type_table(4);
  for (int t : {3, 12, 33, 58}) {
    auto a = synth4::synthesize(T4.by_number(t), gf::field(7, 1), 5);
    auto b = synth4::synthesize(T4.by_number(t), gf::field(7, 1), 5);
    CHECK(io::synth_json(T4.by_number(t), a) == io::synth_json(T4.by_number(t), b));
  }
}
