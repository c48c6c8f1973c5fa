#include "wdp/synth4.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace wdp::synth4 {

using gf::Elt;
using gf::Field;
using gf::Poly;

int Recipe::rational_slots() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.deg == 1; }));
}

namespace {

constexpr Sq S = Sq::Square;
constexpr Sq N = Sq::NonSquare;

Summand free_on(std::vector<Part> parts) { return {std::move(parts), DeltaKind::Free, 1, 0, 0}; }
Summand fixed_on(std::vector<Part> parts, int c) { return {std::move(parts), DeltaKind::Fixed, c, 0, 0}; }

std::vector<Slot> slots_of(const std::vector<int>& degs) {
  std::vector<Slot> out;
  for (int d : degs) out.push_back({d});
  return out;
}

// [[P, delta]] with P = prod G_i^{exps_i}, N_P(delta) a square, and the
// class of delta(theta_i) prescribed on every slot.
Recipe cyclic(const std::string& type, const std::vector<int>& degs, const std::vector<int>& exps,
              const std::vector<Sq>& targets) {
  Recipe r;
  r.type = type;
  r.slots = slots_of(degs);
  std::vector<Part> parts;
  for (size_t i = 0; i < degs.size(); ++i) parts.push_back({static_cast<int>(i), exps[i]});
  r.summands = {free_on(parts)};
  for (size_t i = 0; i < targets.size(); ++i) r.roots.push_back({0, static_cast<int>(i), -1, targets[i]});
  r.norms = {{{0}, S}};
  return r;
}

// A1: P = F (T - theta_4)^2; the last slot is the double root.
Recipe a1(int type, const std::vector<int>& degs, const std::vector<Sq>& t) {
  std::vector<int> exps(degs.size(), 1);
  exps.back() = 2;
  return cyclic(std::to_string(type), degs, exps, t);
}

// 2A1 with 8 lines: [[F, delta]] + [[T - theta_4, delta_1]] + [[T - theta_4, -1]],
// delta_1 N_F(delta) a square; the last target is the class of delta_1.
Recipe a1x2_8(int type, const std::vector<int>& fdegs, const std::vector<Sq>& t) {
  Recipe r;
  r.type = std::to_string(type);
  std::vector<int> degs = fdegs;
  degs.push_back(1);
  r.slots = slots_of(degs);
  const int last = static_cast<int>(fdegs.size());
  std::vector<Part> fp;
  for (int i = 0; i < last; ++i) fp.push_back({i, 1});
  r.summands = {free_on(fp), free_on({{last, 1}}), fixed_on({{last, 1}}, -1)};
  for (int i = 0; i < last; ++i) r.roots.push_back({0, i, -1, t[i]});
  r.roots.push_back({1, last, -1, t[last]});
  r.norms = {{{0, 1}, S}};
  return r;
}

// 3A1: [[(T - theta_1)(T - theta_2)^2, delta]] + [[T - theta_3, delta_1]] + [[T - theta_3, -1]].
Recipe a1x3(int type, Sq t1, Sq t2, Sq t3) {
  Recipe r;
  r.type = std::to_string(type);
  r.slots = slots_of({1, 1, 1});
  r.summands = {free_on({{0, 1}, {1, 2}}), free_on({{2, 1}}), fixed_on({{2, 1}}, -1)};
  r.roots = {{0, 0, -1, t1}, {0, 1, -1, t2}, {1, 2, -1, t3}};
  r.norms = {{{0, 1}, S}};
  return r;
}

// A3 with 4 lines: [[F, delta]] + [[T - theta_3, F(theta_3)]] + [[(T - theta_3)^2, delta_2]];
// targets are the classes of (theta_i - theta_3) delta(theta_i).
Recipe a3_4(int type, const std::vector<int>& fdegs, const std::vector<Sq>& t) {
  Recipe r;
  r.type = std::to_string(type);
  std::vector<int> degs = fdegs;
  degs.push_back(1);
  r.slots = slots_of(degs);
  const int last = static_cast<int>(fdegs.size());
  std::vector<Part> fp;
  for (int i = 0; i < last; ++i) fp.push_back({i, 1});
  Summand ev{{{last, 1}}, DeltaKind::Eval, 1, 0, last};
  r.summands = {free_on(fp), ev, free_on({{last, 2}})};
  for (int i = 0; i < last; ++i) r.roots.push_back({0, i, last, t[i]});
  return r;
}

// 4A1: [[T - theta_1, delta]] + [[F, delta_1]] + [[F, -1]], F = (T - theta_2)(T - theta_3).
Recipe a1x4(int type, const std::vector<int>& fdegs, const std::vector<Sq>& t) {
  Recipe r;
  r.type = std::to_string(type);
  std::vector<int> degs{1};
  degs.insert(degs.end(), fdegs.begin(), fdegs.end());
  r.slots = slots_of(degs);
  std::vector<Part> fp;
  for (size_t i = 1; i < degs.size(); ++i) fp.push_back({static_cast<int>(i), 1});
  r.summands = {free_on({{0, 1}}), free_on(fp), fixed_on(fp, -1)};
  for (size_t i = 1; i < degs.size(); ++i) r.roots.push_back({1, static_cast<int>(i), -1, t[i - 1]});
  return r;
}

Recipe ordinary(int no, const std::string& wd5) {
  std::vector<int> degs;
  std::vector<Sq> t;
  bool neg = false;
  for (char c : wd5) {
    if (c == '|') {
      neg = true;
      continue;
    }
    degs.push_back(c - '0');
    t.push_back(neg ? N : S);
  }
  return cyclic("O" + std::to_string(no), degs, std::vector<int>(degs.size(), 1), t);
}

std::vector<Recipe> build_recipes() {
  std::vector<Recipe> v;
  // A1
  v.push_back(a1(1, {1, 1, 1, 1}, {S, S, S, S}));
  v.push_back(a1(2, {2, 1, 1}, {S, S, S}));
  v.push_back(a1(3, {1, 1, 1, 1}, {S, S, S, N}));
  v.push_back(a1(4, {1, 1, 1, 1}, {N, N, S, S}));
  v.push_back(a1(5, {2, 1, 1}, {S, S, N}));
  v.push_back(a1(6, {1, 1, 1, 1}, {N, N, S, N}));
  v.push_back(a1(7, {3, 1}, {S, S}));
  v.push_back(a1(8, {2, 1, 1}, {N, N, N}));
  v.push_back(a1(9, {2, 1, 1}, {N, N, S}));
  v.push_back(a1(10, {3, 1}, {S, N}));
  // 2A1 with 9 lines: (T - theta_1)(T - theta_2)^2(T - theta_3)^2
  v.push_back(cyclic("11", {1, 1, 1}, {1, 2, 2}, {S, S, S}));
  v.push_back(cyclic("12", {1, 1, 1}, {1, 2, 2}, {S, N, S}));
  v.push_back(cyclic("13", {1, 1, 1}, {1, 2, 2}, {S, N, N}));
  v.push_back(cyclic("14", {1, 2}, {1, 2}, {S, S}));
  v.push_back(cyclic("15", {1, 2}, {1, 2}, {S, N}));
  // 2A1 with 8 lines
  v.push_back(a1x2_8(16, {1, 1, 1}, {S, S, S, S}));
  v.push_back(a1x2_8(17, {2, 1}, {S, S, S}));
  v.push_back(a1x2_8(18, {1, 1, 1}, {N, N, S, S}));
  v.push_back(a1x2_8(19, {1, 1, 1}, {N, S, S, N}));
  v.push_back(a1x2_8(20, {2, 1}, {S, N, N}));
  v.push_back(a1x2_8(21, {1, 1, 1}, {N, N, N, N}));
  v.push_back(a1x2_8(22, {3}, {S, S}));
  v.push_back(a1x2_8(23, {2, 1}, {N, S, N}));
  v.push_back(a1x2_8(24, {2, 1}, {N, N, S}));
  v.push_back(a1x2_8(25, {3}, {N, N}));
  // A2: (T - theta_1)(T - theta_2)(T - theta_3)^3
  v.push_back(cyclic("26", {1, 1, 1}, {1, 1, 3}, {S, S, S}));
  v.push_back(cyclic("27", {2, 1}, {1, 3}, {S, S}));
  v.push_back(cyclic("28", {1, 1, 1}, {1, 1, 3}, {N, N, S}));
  v.push_back(cyclic("29", {1, 1, 1}, {1, 1, 3}, {N, S, N}));
  v.push_back(cyclic("30", {2, 1}, {1, 3}, {N, N}));
  // 3A1
  v.push_back(a1x3(31, S, S, S));
  v.push_back(a1x3(32, S, N, S));
  v.push_back(a1x3(33, N, S, N));
  v.push_back(a1x3(34, N, N, N));
  // A1A2: (T - theta_1)^2 (T - theta_2)^3
  v.push_back(cyclic("35", {1, 1}, {2, 3}, {S, S}));
  v.push_back(cyclic("36", {1, 1}, {2, 3}, {N, S}));
  // A3 with 5 lines: (T - theta_1)(T - theta_2)^4
  v.push_back(cyclic("37", {1, 1}, {1, 4}, {S, S}));
  v.push_back(cyclic("38", {1, 1}, {1, 4}, {S, N}));
  // A3 with 4 lines
  v.push_back(a3_4(39, {1, 1}, {S, S}));
  v.push_back(a3_4(40, {2}, {S}));
  v.push_back(a3_4(41, {1, 1}, {N, N}));
  v.push_back(a3_4(42, {1, 1}, {S, N}));
  v.push_back(a3_4(43, {2}, {N}));
  // 4A1
  v.push_back(a1x4(44, {1, 1}, {S, S}));
  v.push_back(a1x4(45, {1, 1}, {N, N}));
  v.push_back(a1x4(46, {2}, {S}));
  v.push_back(a1x4(47, {1, 1}, {N, S}));
  v.push_back(a1x4(48, {2}, {N}));
  // 2A1A2: [[(T - theta_1)^3, 1]] + [[T - theta_2, delta_1]] + [[T - theta_2, -1]]
  for (auto [type, t] : {std::pair{49, S}, std::pair{50, N}}) {
    Recipe r;
    r.type = std::to_string(type);
    r.slots = slots_of({1, 1});
    r.summands = {fixed_on({{0, 3}}, 1), free_on({{1, 1}}), fixed_on({{1, 1}}, -1)};
    r.roots = {{1, 1, -1, t}};
    v.push_back(r);
  }
  // A1A3: [[(T - theta_1)^2, delta]] + [[(T - theta_2)^2, 1]] + [[T - theta_2, 1]]
  for (auto [type, t] : {std::pair{51, S}, std::pair{52, N}}) {
    Recipe r;
    r.type = std::to_string(type);
    r.slots = slots_of({1, 1});
    r.summands = {free_on({{0, 2}}), fixed_on({{1, 2}}, 1), fixed_on({{1, 1}}, 1)};
    r.roots = {{0, 0, 1, t}};
    v.push_back(r);
  }
  // A4: [[(T - theta)^5, delta]]
  {
    Recipe r;
    r.type = "53";
    r.slots = slots_of({1});
    r.summands = {free_on({{0, 5}})};
    v.push_back(r);
  }
  // D4: [[T - theta_1, 1]] + [[(T - theta_2)^3, delta_1]] + [[T - theta_2, 1]];
  // the rank-4 member has discriminant -delta_1(theta_2) up to squares
  for (auto [type, t] : {std::pair{54, S}, std::pair{55, N}}) {
    Recipe r;
    r.type = std::to_string(type);
    r.slots = slots_of({1, 1});
    r.summands = {fixed_on({{0, 1}}, 1), free_on({{1, 3}}), fixed_on({{1, 1}}, 1)};
    r.roots = {{1, 1, -1, t, -1}};
    v.push_back(r);
  }
  // 2A1A3: [[T - theta_1, delta_1]] + [[T - theta_1, -1]] + [[(T - theta_2)^2, 1]] + [[T - theta_2, 1]]
  for (auto [type, t] : {std::pair{56, S}, std::pair{57, N}}) {
    Recipe r;
    r.type = std::to_string(type);
    r.slots = slots_of({1, 1});
    r.summands = {free_on({{0, 1}}), fixed_on({{0, 1}}, -1), fixed_on({{1, 2}}, 1), fixed_on({{1, 1}}, 1)};
    r.roots = {{0, 0, -1, t}};
    v.push_back(r);
  }
  // D5: [[(T - theta)^4, delta_1]] + [[T - theta, delta_2]]
  {
    Recipe r;
    r.type = "58";
    r.slots = slots_of({1});
    r.summands = {free_on({{0, 4}}), free_on({{0, 1}})};
    v.push_back(r);
  }
  const std::vector<std::string> wd5 = {"11111|", "111|11", "1|1111", "2111|", "21|11", "221|",
                                        "311|",   "2|21",   "41|",    "11|21", "|2111", "1|22",
                                        "5|",     "32|",    "3|11",   "1|31",  "|41",   "|32"};
  for (size_t i = 0; i < wd5.size(); ++i) v.push_back(ordinary(static_cast<int>(i) + 1, wd5[i]));
  return v;
}

void check_recipe(const Recipe& r) {
  int total = 0;
  for (auto& s : r.summands)
    for (auto& p : s.parts) total += r.slots.at(p.slot).deg * p.exp;
  if (total != 5) throw std::logic_error("recipe " + r.type + " has total degree " + std::to_string(total));
  std::map<std::tuple<int, int, int>, Sq> seen;
  for (auto& c : r.roots) {
    if (c.twist >= 0 && r.slots.at(c.twist).deg != 1) throw std::invalid_argument("twist slot must be rational");
    auto [it, fresh] = seen.emplace(std::tuple{c.summand, c.slot, c.twist}, c.target);
    if (!fresh && it->second != c.target)
      throw std::invalid_argument("inconsistent constraints on one root in recipe " + r.type);
  }
}

Elt random_elt(const Field& K, std::mt19937_64& rng) {
  return static_cast<Elt>(std::uniform_int_distribution<std::uint64_t>(0, K.q - 1)(rng));
}

Poly random_irreducible(const Field& K, int d, std::mt19937_64& rng) {
  while (true) {
    Poly f(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) f[i] = random_elt(K, rng);
    f[d] = 1;
    if (gf::is_irreducible(K, f)) return f;
  }
}

Poly modulus_of(const Field& K, const Recipe& r, const std::vector<Poly>& slot_polys, int s) {
  Poly F{1};
  for (auto& p : r.summands[s].parts)
    for (int e = 0; e < p.exp; ++e) F = gf::pmul(K, F, slot_polys[p.slot]);
  return F;
}

bool class_is(const Field& E, Elt x, Sq target) {
  if (x == 0) return false;
  return E.is_square(x) == (target == Sq::Square);
}

}  // namespace

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> v = [] {
    auto r = build_recipes();
    for (auto& x : r) check_recipe(x);
    return r;
  }();
  return v;
}

const Recipe& recipe(const std::string& type) {
  for (auto& r : recipes())
    if (r.type == type) return r;
  throw std::out_of_range("no degree-4 recipe for type " + type);
}

bool satisfies(const Recipe& r, const Field& K, const Witness& w) {
  if (w.slot_polys.size() != r.slots.size() || w.module.size() != r.summands.size()) return false;
  for (auto& c : r.roots) {
    const int d = r.slots[c.slot].deg;
    const Field& E = gf::field(K.p, K.m * d);
    Elt theta = gf::roots(E, gf::pembed(K, E, w.slot_polys[c.slot])).at(0);
    Elt x = gf::peval(E, gf::pembed(K, E, w.module[c.summand].delta), theta);
    if (c.scale != 1) x = E.mul(x, E.from_int(c.scale));
    if (c.twist >= 0) {
      Elt t = gf::embed(K, E, K.neg(w.slot_polys[c.twist][0]));
      x = E.mul(x, E.sub(theta, t));
    }
    if (!class_is(E, x, c.target)) return false;
  }
  for (auto& n : r.norms) {
    Elt x = 1;
    for (int s : n.summands) x = K.mul(x, gf::norm(K, w.module[s].F, w.module[s].delta));
    if (!class_is(K, x, n.target)) return false;
  }
  return true;
}

Witness residue_search(const Recipe& r, const Field& K, std::uint64_t seed, int max_tries) {
  check_recipe(r);
  if (K.p == 2) throw std::invalid_argument("degree-4 synthesis needs odd characteristic");
  if (r.rational_slots() > static_cast<int>(K.q))
    throw NotRealizable("type " + r.type + " needs " + std::to_string(r.rational_slots()) +
                        " distinct rational roots but F_q has " + std::to_string(K.q) + " elements");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Witness w;
    std::set<Poly> used;
    bool ok = true;
    for (auto& s : r.slots) {
      Poly g;
      int guard = 0;
      do {
        g = s.deg == 1 ? gf::linear(K, random_elt(K, rng)) : random_irreducible(K, s.deg, rng);
      } while (used.count(g) && ++guard < 1000);
      if (used.count(g)) {
        ok = false;
        break;
      }
      used.insert(g);
      w.slot_polys.push_back(g);
    }
    if (!ok) continue;
    for (size_t s = 0; s < r.summands.size(); ++s) {
      const Summand& sp = r.summands[s];
      quad::Cyclic c;
      c.F = modulus_of(K, r, w.slot_polys, static_cast<int>(s));
      const int n = gf::deg(c.F);
      switch (sp.kind) {
        case DeltaKind::Fixed:
          c.delta = gf::pconst(K.from_int(sp.fixed));
          break;
        case DeltaKind::Eval: {
          Poly other = modulus_of(K, r, w.slot_polys, sp.eval_summand);
          c.delta = gf::pconst(gf::peval(K, other, K.neg(w.slot_polys[sp.eval_slot][0])));
          break;
        }
        case DeltaKind::Free:
          do {
            Poly d(static_cast<size_t>(n));
            for (auto& x : d) x = random_elt(K, rng);
            c.delta = gf::trim(d);
          } while (gf::norm(K, c.F, c.delta) == 0);
          break;
      }
      w.module.push_back(c);
    }
    if (satisfies(r, K, w)) return w;
  }
  throw SearchExhausted("no witness for type " + r.type + " after " + std::to_string(max_tries) + " tries");
}

namespace {

// Explicit pairs over F_3 for the types whose module needs four rational roots.
bool q3_blocks(int type_no, quad::Pair& P, std::vector<int>& classes) {
  const Field& K = gf::field(3, 1);
  auto val = [&](int c) { return K.from_int(c); };
  P = {3, 1, gf::Matrix(5, 5), gf::Matrix(5, 5)};
  // (delta_0, delta_inf) for geometric A1; (delta_0, delta_1, delta_inf) for 2A1 with 8 lines
  static const std::map<int, std::vector<int>> a1 = {{1, {1, 1}}, {3, {-1, 1}}, {4, {-1, -1}}, {6, {1, -1}}};
  static const std::map<int, std::vector<int>> a1x2 = {
      {16, {1, 1, 1}}, {18, {1, -1, -1}}, {19, {-1, -1, -1}}, {21, {-1, 1, 1}}};
  if (auto it = a1.find(type_no); it != a1.end()) {
    Elt d0 = val(it->second[0]), dinf = val(it->second[1]);
    P.Q0(0, 0) = dinf;
    P.Q0(1, 1) = 1;
    P.Q0(2, 2) = 1;
    P.Q0(4, 4) = d0;
    P.Qinf(1, 1) = 1;
    P.Qinf(2, 2) = val(-1);
    P.Qinf(3, 4) = d0;
    P.Qinf(4, 3) = d0;
    classes = it->second;
    return true;
  }
  if (auto it = a1x2.find(type_no); it != a1x2.end()) {
    Elt d0 = val(it->second[0]), d1 = val(it->second[1]), dinf = val(it->second[2]);
    P.Q0(0, 0) = dinf;
    P.Q0(1, 1) = d1;
    P.Q0(2, 2) = 1;
    P.Qinf(1, 1) = d1;
    P.Qinf(2, 2) = val(-1);
    P.Qinf(3, 3) = d0;
    P.Qinf(4, 4) = val(-1);
    classes = it->second;
    return true;
  }
  return false;
}

}  // namespace

Result synthesize(const types::ArithmeticType& at, const Field& K, std::uint64_t seed) {
  if (at.degree != 4) throw std::invalid_argument("pairs of quadrics model degree 4 only");
  if (K.p == 2) throw std::invalid_argument("degree-4 synthesis needs odd characteristic");
  Result res;
  if (K.p == 3 && K.m == 1 && at.type_no > 0 && q3_blocks(at.type_no, res.pair, res.q3_classes)) {
    res.method = "q3-blocks";
    return res;
  }
  const Recipe& r = recipe(at.name());
  res.witness = residue_search(r, K, seed);
  res.pair = quad::to_pair(K, res.witness.module);
  res.method = "module";
  return res;
}

}  // namespace wdp::synth4
