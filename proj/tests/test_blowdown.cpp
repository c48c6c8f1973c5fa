#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "wdp/blowdown.hpp"
#include "wdp/golden.hpp"
#include "wdp/oracle.hpp"

using namespace wdp;

namespace {

// nontrivial cycle lengths on lines and on (-2)-curves of a transcribed action
std::pair<std::vector<int>, std::vector<int>> parse_action(const std::string& s) {
  std::vector<int> lines, roots;
  if (s == "Id") return {lines, roots};
  size_t i = 0;
  while ((i = s.find('(', i)) != std::string::npos) {
    size_t j = s.find(')', i);
    std::istringstream in(s.substr(i + 1, j - i - 1));
    std::string name;
    int len = 0;
    bool root = false;
    while (in >> name) {
      ++len;
      root = name[0] == 'r';
    }
    (root ? roots : lines).push_back(len);
    i = j;
  }
  std::sort(lines.rbegin(), lines.rend());
  std::sort(roots.rbegin(), roots.rend());
  return {lines, roots};
}

std::vector<int> nontrivial(std::vector<int> v) {
  v.erase(std::remove(v.begin(), v.end(), 1), v.end());
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("degree-4 Galois action table is reproduced") {
  auto rows = blowdown::table1();
  const auto& gold = golden::table1();
  REQUIRE(rows.size() == 58);
  REQUIRE(gold.size() == 58);
  for (size_t k = 0; k < 58; ++k) {
    const auto& r = rows[k];
    const auto& g = gold[k];
    CAPTURE(g.type_no);
    CHECK(r.type_no == g.type_no);
    CHECK(r.count.t == g.t);
    CHECK(r.count.nfix == g.nfix);
    CHECK(r.count.i1 == g.i1);
    CHECK(r.count.i2 == g.i2);
    CHECK(r.count.n == blowdown::parse_qpoly(g.n_poly));
    CHECK(r.deg3_type == g.deg3_type);
    auto [gl, gr] = parse_action(g.curve_action);
    CHECK(nontrivial(r.line_cycles) == gl);
    CHECK(nontrivial(r.root_cycles) == gr);
  }
}

TEST_CASE("corrected rows carry a note") {
  std::vector<int> noted;
  for (auto& g : golden::table1())
    if (!g.note.empty()) noted.push_back(g.type_no);
  CHECK(noted == std::vector<int>{2, 3, 4, 12, 19, 48});
}

TEST_CASE("off-curve count examples") {
  const auto& T4 = types::type_table(4);
  CHECK(blowdown::off_curve_count(T4.by_number(1)).n.to_string() == "q^2-7q+12");
  CHECK(blowdown::off_curve_count(T4.by_number(23)).n.to_string() == "q^2+2q+1");
  CHECK(blowdown::off_curve_count(T4.by_number(48)).n.to_string() == "q^2+1");
  CHECK(blowdown::parse_qpoly("q^2-q") == blowdown::QPoly{1, -1, 0});
  CHECK(blowdown::parse_qpoly("q^2+2q+1").at(3) == 16);
  // the sources of degree-3 types 1 and 12 have no point at q = 3
  for (auto& r : blowdown::table1())
    if (r.deg3_type == 1 || r.deg3_type == 12) CHECK(r.count.n.at(3) == 0);
}

TEST_CASE("off-curve counts against brute force") {
  std::vector<int> all;
  for (int t = 1; t <= 58; ++t) all.push_back(t);
  auto chk = oracle::off_curve(all, {3, 5, 7}, 1);
  CHECK(chk.instances == 58 * 3);
  CHECK_MESSAGE(chk.ok(), chk.first_failure);
}

TEST_CASE("curve actions") {
  const auto& T4 = types::type_table(4);
  auto a1 = blowdown::curve_action(T4.by_number(1));
  CHECK(a1.size() == 13);
  for (auto& c : a1) CHECK(c.size() == 1);
  bool six = false;
  for (auto& c : blowdown::curve_action(T4.by_number(10))) six = six || c.size() == 6;
  CHECK(six);
  auto [l48, r48] = blowdown::action_shape(T4.by_number(48));
  CHECK(nontrivial(l48) == std::vector<int>{4});
  CHECK(nontrivial(r48) == std::vector<int>{4});
}

TEST_CASE("degree-3 targets") {
  const auto& T4 = types::type_table(4);
  CHECK(blowdown::deg3_from_deg4(T4.by_number(15)) == 19);
  CHECK(blowdown::deg3_from_deg4(T4.by_number(53)) == 60);
  CHECK(blowdown::deg3_from_deg4(T4.by_number(1)) == 1);
}

TEST_CASE("no three negative curves are concurrent") {
  for (auto& gt : types::type_table(4).geo) CHECK(blowdown::no_concurrent_triples(gt));
}

TEST_CASE("realizability") {
  auto r60 = blowdown::realizability(60, 3, 1);
  REQUIRE(r60.status == blowdown::Status::Plan);
  CHECK(r60.plan->route == "deg4-point");
  CHECK(r60.plan->source_type == 53);
  CHECK(r60.plan->identified == 60);
  REQUIRE(r60.source_pair);

  for (int t : {1, 12, 17}) {
    auto r = blowdown::realizability(t, 3, 1);
    CAPTURE(t);
    CHECK(r.status == blowdown::Status::NotRealizable);
    CHECK_FALSE(r.plan);
    CHECK(r.certificate.find("none exists over F_3") != std::string::npos);
    for (auto [s, n] : r.source_counts) CHECK(n == 0);
  }
  auto r1 = blowdown::realizability(1, 3, 1);
  REQUIRE(r1.source_counts.size() == 1);
  CHECK(r1.source_counts[0].first == 1);

  for (int t : {1, 12, 17}) CHECK(blowdown::realizability(t, 5, 1).status == blowdown::Status::Plan);

  auto r36 = blowdown::realizability(36, 5, 1);
  CHECK(r36.status == blowdown::Status::OutOfScope);
  CHECK_FALSE(r36.certificate.empty());

  CHECK_THROWS_AS(blowdown::realizability(78, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(blowdown::realizability(5, 2, 1), std::invalid_argument);
}

TEST_CASE("plans identify to their target") {
  for (int t : {5, 19, 39, 54, 61, 64, 69, 70, 73, 75, 77}) {
    auto r = blowdown::realizability(t, 5, 1);
    CAPTURE(t);
    REQUIRE(r.status == blowdown::Status::Plan);
    CHECK(plane::identify(r.plan->result).type_no == t);
  }
}
