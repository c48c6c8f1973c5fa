#include "wdp/blowdown.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

#include "wdp/count.hpp"
#include "wdp/synth4.hpp"

namespace wdp::blowdown {

using pic::IMat;
using pic::Vec;

std::string QPoly::to_string() const {
  std::string s;
  auto term = [&](long long c, const std::string& x) {
    if (c == 0) return;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || x.empty()) s += std::to_string(a);
    s += x;
  };
  term(a2, "q^2");
  term(a1, "q");
  term(a0, "");
  return s.empty() ? "0" : s;
}

QPoly parse_qpoly(const std::string& text) {
  QPoly out;
  static const std::regex term(R"(([+-]?)(\d*)(q(\^2)?)?)");
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  size_t pos = 0;
  while (pos < s.size()) {
    std::smatch mt;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, mt, term, std::regex_constants::match_continuous) || mt.length(0) == 0)
      throw std::invalid_argument("bad polynomial in q: " + text);
    long long c = mt[2].length() ? std::stoll(mt[2]) : 1;
    if (mt[1] == "-") c = -c;
    if (mt[4].matched) out.a2 += c;
    else if (mt[3].matched) out.a1 += c;
    else out.a0 += c;
    pos += static_cast<size_t>(mt.length(0));
  }
  return out;
}

namespace {

const types::GeometricType& geo_of(const types::ArithmeticType& at) {
  return types::type_table(at.degree).geo[at.geo];
}
const IMat& frob_of(const types::ArithmeticType& at) { return pic::weyl_group(at.degree).elems[at.rep]; }

std::string class_name(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty() || v[i] < 0) s += v[i] > 0 ? "+" : "-";
    int a = std::abs(v[i]);
    if (a != 1) s += std::to_string(a);
    s += "E" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string curve_name(const types::GeometricType& gt, int idx) {
  auto cs = gt.curves();
  std::string n = class_name(cs.at(idx));
  return idx < static_cast<int>(gt.lines.size()) ? n : "r:" + n;
}

std::vector<std::vector<int>> curve_action(const types::ArithmeticType& deg4) {
  auto perm = types::curve_permutation(geo_of(deg4), frob_of(deg4));
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cycles.push_back(c);
  }
  return cycles;
}

std::pair<std::vector<int>, std::vector<int>> action_shape(const types::ArithmeticType& deg4) {
  const int nl = static_cast<int>(geo_of(deg4).lines.size());
  std::vector<int> lines, roots;
  for (auto& c : curve_action(deg4)) (c[0] < nl ? lines : roots).push_back(static_cast<int>(c.size()));
  std::sort(lines.rbegin(), lines.rend());
  std::sort(roots.rbegin(), roots.rend());
  return {lines, roots};
}

OffCurveCount off_curve_count(const types::ArithmeticType& deg4) {
  if (deg4.degree != 4) throw std::invalid_argument("off-curve counts are for degree 4");
  const auto& gt = geo_of(deg4);
  const IMat& w = frob_of(deg4);
  auto cs = gt.curves();
  auto perm = types::curve_permutation(gt, w);
  OffCurveCount o;
  o.type_no = deg4.type_no;
  for (int i = 0; i < w.n; ++i) o.t += w(i, i);
  const int n = static_cast<int>(cs.size());
  for (int i = 0; i < n; ++i) {
    if (perm[i] == i) {
      ++o.nfix;
      for (int j = i + 1; j < n; ++j)
        if (perm[j] == j) o.i1 += pic::pairing(cs[i], cs[j]);
    } else if (perm[perm[i]] == i && i < perm[i] && pic::pairing(cs[i], cs[perm[i]]) == 1) {
      ++o.i2;
    }
  }
  o.n = {1, o.t - o.nfix, 1 - o.nfix + o.i1 - o.i2};
  return o;
}

int deg3_from_deg4(const types::ArithmeticType& deg4) {
  const auto& at = plane::identify(plane::blowup_at_point(deg4, {}));
  return at.type_no;
}

bool no_concurrent_triples(const types::GeometricType& gt) {
  auto cs = gt.curves();
  const int n = static_cast<int>(cs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (pic::pairing(cs[i], cs[j]) <= 0) continue;
      for (int k = j + 1; k < n; ++k)
        if (pic::pairing(cs[i], cs[k]) > 0 && pic::pairing(cs[j], cs[k]) > 0) return false;
    }
  return true;
}

std::vector<Table1Row> table1() {
  const auto& T = types::type_table(4);
  std::vector<Table1Row> out;
  for (auto* at : T.numbered()) {
    Table1Row r;
    r.type_no = at->type_no;
    r.count = off_curve_count(*at);
    auto [l, rt] = action_shape(*at);
    r.line_cycles = l;
    r.root_cycles = rt;
    r.deg3_type = deg3_from_deg4(*at);
    out.push_back(r);
  }
  return out;
}

namespace {

// degree-4 model of a source type, verified before use
std::optional<quad::Pair> source_model(const types::ArithmeticType& at, const gf::Field& K, std::uint64_t seed) {
  try {
    auto res = synth4::synthesize(at, K, seed);
    if (!count::verify(res.pair, at, 2).pass()) return std::nullopt;
    return res.pair;
  } catch (const synth4::NotRealizable&) {
    return std::nullopt;
  }
}

enum class Shape { OneCurve, TwoCurves };

struct PointRecipe {
  int target;
  std::vector<int> sources;
  Shape shape;
  const char* text;
};

// blowups of degree-4 surfaces at rational points on negative curves
const std::vector<PointRecipe>& point_recipes() {
  static const std::vector<PointRecipe> v = {
      {39, {22}, Shape::OneCurve, "rational point on a rational exceptional curve meeting one (-2)-curve"},
      {54, {16}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {55, {17}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {56, {20}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {57, {21}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {58, {22}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {59, {25}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {65, {31}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {66, {34}, Shape::TwoCurves, "meeting point of two exceptional curves"},
      {71, {52}, Shape::OneCurve, "rational point on a rational exceptional curve"},
  };
  return v;
}

std::vector<std::vector<int>> profiles(const types::ArithmeticType& at, Shape shape) {
  const auto& gt = geo_of(at);
  auto cs = gt.curves();
  auto perm = types::curve_permutation(gt, frob_of(at));
  const int nl = static_cast<int>(gt.lines.size());
  std::vector<std::vector<int>> out;
  if (shape == Shape::OneCurve) {
    for (int i = 0; i < nl; ++i)
      if (perm[i] == i) out.push_back({i});
  } else {
    for (int i = 0; i < nl; ++i)
      for (int j = i + 1; j < nl; ++j) {
        if (pic::pairing(cs[i], cs[j]) != 1) continue;
        bool stable = (perm[i] == i && perm[j] == j) || (perm[i] == j && perm[j] == i);
        if (stable) out.push_back({i, j});
      }
  }
  return out;
}

// closed points of degree d on P^1 over F_q
long long closed_points(long long q, int d) {
  if (d == 1) return q + 1;
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = 1, n = e;
    for (int f = 2; f <= n; ++f)
      if (n % f == 0) {
        n /= f;
        if (n % f == 0) mu = 0;
        mu = -mu;
      }
    long long pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= q;
    total += mu * pw;
  }
  return total / d;
}

// An ordinary degree-4 surface is cut out by a pencil whose singular members
// form orbits with the cycle lengths of its signed cycle type; P^1 must carry
// that many closed points of each degree.
bool pencil_fits(const types::ArithmeticType& at, long long q) {
  if (!geo_of(at).ordinary()) return true;
  std::map<int, int> need;
  for (char ch : at.wd5)
    if (ch != '|') ++need[ch - '0'];
  for (auto [d, k] : need)
    if (closed_points(q, d) < k) return false;
  return true;
}

// A rational line of a cubic surface contracts to a rational point of a
// degree-4 surface, so the type is ruled out when every (source, point
// profile) that blows up to it has no such point over F_q.
std::optional<std::string> fixed_line_certificate(int type_no, long long q) {
  const auto& T3 = types::type_table(3);
  const auto& at3 = T3.by_number(type_no);
  const auto& gt3 = geo_of(at3);
  auto perm3 = types::curve_permutation(gt3, frob_of(at3));
  bool has_line = false;
  for (size_t i = 0; i < gt3.lines.size(); ++i) has_line = has_line || perm3[i] == static_cast<int>(i);
  if (!has_line) return std::nullopt;
  const auto& T4 = types::type_table(4);
  std::vector<const types::ArithmeticType*> sources = T4.numbered();
  for (int o = 1; o <= 18; ++o) sources.push_back(&T4.ordinary(o));
  // one entry per source: reason and the number of point profiles it covers
  std::vector<std::pair<std::string, int>> routes;
  auto note = [&](const std::string& reason) {
    if (!routes.empty() && routes.back().first == reason) ++routes.back().second;
    else routes.push_back({reason, 1});
  };
  for (auto* at : sources) {
    if (!no_concurrent_triples(geo_of(*at))) return std::nullopt;  // profiles below would be incomplete
    std::vector<std::vector<int>> profs = {{}};
    for (Shape shape : {Shape::OneCurve, Shape::TwoCurves})
      for (auto& p : profiles(*at, shape)) profs.push_back(p);
    for (auto& prof : profs) {
      int got;
      try {
        got = plane::identify(plane::blowup_at_point(*at, prof)).type_no;
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (got != type_no) continue;
      if (!pencil_fits(*at, q)) {
        note(at->name() + ": the pencil has singular members of degrees " + at->wd5 +
             ", more than P^1 carries");
        continue;
      }
      long long n = plane::profile_points(*at, prof, q);
      if (n > 0) return std::nullopt;
      if (prof.empty())
        note(at->name() + " off the negative curves: N(q) = " + off_curve_count(*at).n.to_string() + " = 0");
      else
        note(at->name() + " on exceptional curves: no free rational point");
    }
  }
  if (routes.empty()) return std::nullopt;
  std::string s = "every rational line contracts to a rational point of a degree-4 surface, and none exists over F_" +
                  std::to_string(q) + ":";
  for (auto& [r, k] : routes) s += " " + r + (k > 1 ? " (" + std::to_string(k) + " profiles)" : "") + ";";
  s.pop_back();
  return s;
}

}  // namespace

Realization realizability(int type_no, int p, int m, std::uint64_t seed) {
  const auto& T3 = types::type_table(3);
  if (type_no < 1 || type_no > T3.count_numbered()) throw std::invalid_argument("no degree-3 type " + std::to_string(type_no));
  if (p == 2) throw std::invalid_argument("degree-3 routes go through degree 4 and need odd characteristic");
  const gf::Field& K = gf::field(p, m);
  const long long q = K.q;
  Realization r;
  r.type_no = type_no;
  r.p = p;
  r.m = m;
  if (type_no == 36) {
    r.status = Status::OutOfScope;
    r.certificate = "type 36 needs the conconic degree-one construction, which is not implemented";
    return r;
  }
  const auto& T4 = types::type_table(4);
  // (a) a rational point off the negative curves of a degree-4 source
  for (auto* s : T4.numbered()) {
    if (deg3_from_deg4(*s) != type_no) continue;
    long long n = off_curve_count(*s).n.at(q);
    r.source_counts.push_back({s->type_no, n});
  }
  for (auto [s, n] : r.source_counts) {
    if (n <= 0) continue;
    const auto& at = T4.by_number(s);
    auto pair = source_model(at, K, seed);
    if (!pair) continue;
    plane::BlowupPlan plan;
    plan.degree = 3;
    plan.type_no = type_no;
    plan.p = p;
    plan.m = m;
    plan.route = "deg4-point";
    plan.recipe = "rational point off every negative curve";
    plan.source_type = s;
    plan.source_name = std::to_string(s);
    plan.result = plane::blowup_at_point(at, {});
    plan.identified = plane::identify(plan.result).type_no;
    if (plan.identified != type_no) throw std::logic_error("blowup route identifies to the wrong type");
    r.plan = plan;
    r.source_pair = pair;
    return r;
  }
  // (b) points on negative curves
  for (auto& pr : point_recipes()) {
    if (pr.target != type_no) continue;
    for (int s : pr.sources) {
      const auto& at = T4.by_number(s);
      for (auto& prof : profiles(at, pr.shape)) {
        if (plane::profile_points(at, prof, q) <= 0) continue;
        auto d = plane::blowup_at_point(at, prof);
        int got;
        try {
          got = plane::identify(d).type_no;
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (got != type_no) continue;
        auto pair = source_model(at, K, seed);
        if (!pair) continue;
        plane::BlowupPlan plan;
        plan.degree = 3;
        plan.type_no = type_no;
        plan.p = p;
        plan.m = m;
        plan.route = "deg4-point";
        plan.recipe = pr.text;
        plan.source_type = s;
        plan.source_name = std::to_string(s);
        plan.profile = prof;
        plan.result = d;
        plan.identified = got;
        r.plan = plan;
        r.source_pair = pair;
        return r;
      }
    }
  }
  // (c) plane configurations
  if (auto plan = plane::deg3_plane_plan(type_no, p, m, seed)) {
    r.plan = plan;
    return r;
  }
  // (d) any degree-4 source, point on one or two exceptional curves
  std::vector<const types::ArithmeticType*> sources = T4.numbered();
  for (int o = 1; o <= 18; ++o) sources.push_back(&T4.ordinary(o));
  for (auto* at : sources)
    for (Shape shape : {Shape::OneCurve, Shape::TwoCurves})
      for (auto& prof : profiles(*at, shape)) {
        if (plane::profile_points(*at, prof, q) <= 0) continue;
        auto d = plane::blowup_at_point(*at, prof);
        int got;
        try {
          got = plane::identify(d).type_no;
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (got != type_no) continue;
        auto pair = source_model(*at, K, seed);
        if (!pair) continue;
        plane::BlowupPlan plan;
        plan.degree = 3;
        plan.type_no = type_no;
        plan.p = p;
        plan.m = m;
        plan.route = "deg4-point";
        plan.recipe = shape == Shape::OneCurve ? "rational point on a rational exceptional curve"
                                               : "meeting point of two exceptional curves";
        plan.source_type = at->type_no;
        plan.source_name = at->name();
        plan.profile = prof;
        plan.result = d;
        plan.identified = got;
        r.plan = plan;
        r.source_pair = pair;
        return r;
      }
  if (auto cert = fixed_line_certificate(type_no, q)) {
    r.status = Status::NotRealizable;
    r.certificate = *cert;
  } else {
    r.status = Status::Unresolved;
    r.certificate = "no construction route applies and no rational line rules the type out";
  }
  return r;
}

}  // namespace wdp::blowdown
