#include <stdexcept>

#include "doctest.h"
#include "wdp/golden.hpp"
#include "wdp/typetab.hpp"

using namespace wdp;
using namespace wdp::types;

namespace {

const GeometricType& geo(int d, const std::string& dynkin, int lines) {
  for (auto& g : type_table(d).geo)
    if (g.dynkin == dynkin && static_cast<int>(g.lines.size()) == lines) return g;
  throw std::logic_error("no such geometric type");
}

}  // namespace

TEST_CASE("type counts per degree") {
  CHECK(type_table(6).count_numbered() == 9);
  CHECK(type_table(5).count_numbered() == 10);
  CHECK(type_table(4).count_numbered() == 58);
  CHECK(type_table(3).count_numbered() == 77);
  // non-ordinary geometric types
  CHECK(type_table(6).geo.size() - 1 == 5);
  CHECK(type_table(4).geo.size() - 1 == 15);
  CHECK(type_table(3).geo.size() - 1 == 20);
  // degree-4 ordinary surfaces carry the 18 classes of W(D5)
  CHECK(type_table(4).geo[0].arith.size() == 18);
}

TEST_CASE("reference tables reproduced row by row") {
  for (auto& row : golden::appendix()) {
    CAPTURE(row.degree);
    CAPTURE(row.type_no);
    const auto& T = type_table(row.degree);
    const auto& at = T.by_number(row.type_no);
    const auto& gt = T.geo[at.geo];
    CHECK(gt.dynkin == row.dynkin);
    CHECK(static_cast<int>(gt.lines.size()) == row.n_lines);
    CHECK(static_cast<int>(gt.stab.size()) == row.stab_order);
    CHECK(pic::cyclo_to_string(at.chi_pic) == row.chi_pic);
    CHECK(pic::cyclo_to_string(at.chi_pic_s) == row.chi_pic_s);
    if (row.degree == 4) CHECK(at.wd5 == row.wd5_class);
  }
  CHECK(golden::appendix().size() == 9 + 10 + 58 + 77);
}

TEST_CASE("exceptional curve counts and stabilizers") {
  CHECK(type_table(4).geo[0].lines.size() == 16);
  CHECK_NOTHROW(geo(4, "2A1", 9));
  CHECK_NOTHROW(geo(4, "2A1", 8));
  CHECK_NOTHROW(geo(3, "A1", 21));
  CHECK(geo(5, "A1", 7).stab.size() == 6);
  CHECK(geo(4, "A1", 12).stab.size() == 48);
  CHECK(geo(3, "E6", 1).stab.size() == 1);
  for (int d = 3; d <= 6; ++d)
    for (auto& g : type_table(d).geo) CHECK(g.orbit_size * static_cast<int>(g.stab.size()) == pic::weyl_group(d).size());
}

TEST_CASE("root bases are ADE") {
  for (int d = 3; d <= 6; ++d)
    for (auto& g : type_table(d).geo) {
      for (size_t i = 0; i < g.basis_vecs.size(); ++i)
        for (size_t j = 0; j < g.basis_vecs.size(); ++j) {
          int x = pic::pairing(g.basis_vecs[i], g.basis_vecs[j]);
          CHECK((i == j ? x == -2 : (x == 0 || x == 1)));
        }
      CHECK(dynkin_label(g.basis_vecs) == (g.basis_vecs.empty() ? dynkin_label({}) : g.dynkin));
    }
}

TEST_CASE("chi_pic = chi_root * chi_pic_s") {
  int n = 0;
  for (int d = 3; d <= 6; ++d)
    for (auto* at : type_table(d).numbered()) {
      CHECK(pic::cyclo_mul(at->chi_root, at->chi_pic_s) == at->chi_pic);
      ++n;
    }
  CHECK(n == 154);
}

TEST_CASE("identify") {
  // split 2A1 with nine lines is type 11
  const auto& g = geo(4, "2A1", 9);
  CHECK(identify(4, pic::identity(6), g.basis_vecs).type_no == 11);
  // degree 6, s_{E0-E1-E2-E3} on the basis {E1-E2}
  auto s = pic::reflection(pic::Vec{1, -1, -1, -1});
  CHECK(identify(6, s, {pic::Vec{0, 1, -1, 0}}).type_no == 2);
  CHECK_THROWS_AS(identify(3, pic::identity(7), {}), std::invalid_argument);
  // w must stabilize the basis
  CHECK_THROWS_AS(identify(6, pic::reflection(pic::Vec{0, 1, 0, -1}), {pic::Vec{0, 1, -1, 0}}), std::invalid_argument);
  for (int d = 3; d <= 6; ++d) {
    const auto& T = type_table(d);
    for (auto* at : T.numbered())
      CHECK(&identify(d, pic::weyl_group(d).elems[at->rep], T.geo[at->geo].basis_vecs) == at);
  }
}

TEST_CASE("degree-4 types 2 and 3 share characters but not fixed curves") {
  const auto& T = type_table(4);
  const auto &t2 = T.by_number(2), &t3 = T.by_number(3);
  CHECK(t2.chi_pic == t3.chi_pic);
  CHECK(t2.chi_pic_s == t3.chi_pic_s);
  CHECK(t2.n_fixed_curves == 7);
  CHECK(t3.n_fixed_curves == 5);
}

TEST_CASE("morphisms to P1") {
  for (auto& g : type_table(4).geo) {
    CAPTURE(g.dynkin);
    auto a = count_p1_maps(g), b = segre_split(segre_of(g));
    CHECK(a.n == b.n);
    CHECK(a.n == 2 * b.a + 2 * b.b + b.c);
  }
  auto o = count_p1_maps(type_table(4).geo[0]);
  CHECK(o.n == 10);
  auto os = segre_split(segre_of(type_table(4).geo[0]));
  CHECK((os.a == 5 && os.b == 0 && os.c == 0));
  const auto& a1 = geo(4, "A1", 12);
  auto s = segre_split(segre_of(a1));
  CHECK(count_p1_maps(a1).n == 8);
  CHECK((s.a == 3 && s.b == 1 && s.c == 0));
}

TEST_CASE("Brauer torsion") {
  for (int d : {5, 6})
    for (auto& g : type_table(d).geo) CHECK(g.brauer.empty());
  CHECK(geo(4, "D5", 1).brauer.empty());
  for (auto& g : type_table(3).geo) {
    if (g.dynkin == "3A2") CHECK(g.brauer == std::vector<long long>{3});
  }
}

TEST_CASE("negative curve graph") {
  auto G = negative_curve_graph(type_table(4).geo[0]);
  REQUIRE(G.vertices.size() == 16);
  for (size_t i = 0; i < 16; ++i) {
    int ones = 0, twos = 0;
    for (size_t j = 0; j < 16; ++j) {
      if (i == j) continue;
      ones += G.adj[i][j] == 1;
      twos += G.adj[i][j] == 2;
    }
    // each line meets five others once; none twice since lines are distinct curves
    CHECK(ones == 5);
    CHECK(twos == 0);
  }
}
