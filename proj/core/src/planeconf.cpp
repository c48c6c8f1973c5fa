#include "wdp/planeconf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace wdp::plane {

using gf::Elt;
using gf::Field;
using pic::IMat;
using pic::Vec;
using Pt = std::vector<Elt>;

const types::ArithmeticType& identify(const LatticeData& d) { return types::identify(d.degree, d.w, d.basis); }

int PointConfiguration::size() const {
  int n = 0;
  for (auto& c : chains) n += static_cast<int>(c.labels.size());
  return n;
}

namespace {

// coefficient i of the germ of a chain
const Pt& germ(const Chain& c, int i) { return i == 0 ? c.base : c.jet.at(static_cast<size_t>(i) - 1); }

Pt normalized(const Field& L, Pt v) {
  for (Elt x : v)
    if (x != 0) {
      Elt s = L.inv(x);
      for (auto& y : v) y = L.mul(y, s);
      return v;
    }
  throw std::invalid_argument("zero vector is not a point");
}

Pt frob(const Field& L, unsigned long long q, const Pt& v) {
  Pt out;
  for (Elt x : v) out.push_back(L.pow(x, q));
  return out;
}

// Per-chain prefix lengths of a label set, or empty when some chain is not
// met in a prefix (a curve cannot pass through p_2 without p_1).
std::vector<int> prefixes(const PointConfiguration& c, const std::vector<int>& labels) {
  std::vector<int> out;
  for (auto& ch : c.chains) {
    int k = 0;
    std::vector<bool> in(ch.labels.size());
    for (size_t i = 0; i < ch.labels.size(); ++i)
      in[i] = std::find(labels.begin(), labels.end(), ch.labels[i]) != labels.end();
    while (k < static_cast<int>(in.size()) && in[k]) ++k;
    for (size_t i = k; i < in.size(); ++i)
      if (in[i]) return {};
    out.push_back(k);
  }
  return out;
}

bool on_common_line(const PointConfiguration& c, const std::vector<int>& pre) {
  const Field& L = c.coord_field();
  std::vector<Pt> rows;
  for (size_t i = 0; i < c.chains.size(); ++i)
    for (int j = 0; j < pre[i]; ++j) rows.push_back(germ(c.chains[i], j));
  gf::Matrix M(static_cast<int>(rows.size()), 3);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 3; ++j) M(static_cast<int>(i), j) = rows[i][j];
  return gf::rank(L, M) <= 2;
}

// Linear conditions on the six conic coefficients, x^2 y^2 z^2 xy xz yz.
bool on_common_conic(const PointConfiguration& c, const std::vector<int>& pre) {
  const Field& L = c.coord_field();
  static const int mono[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
  std::vector<std::vector<Elt>> rows;
  for (size_t i = 0; i < c.chains.size(); ++i)
    for (int k = 0; k < pre[i]; ++k) {
      std::vector<Elt> row(6, 0);
      for (int a = 0; a <= k; ++a) {
        const Pt& u = germ(c.chains[i], a);
        const Pt& v = germ(c.chains[i], k - a);
        for (int t = 0; t < 6; ++t) row[t] = L.add(row[t], L.mul(u[mono[t][0]], v[mono[t][1]]));
      }
      rows.push_back(row);
    }
  gf::Matrix M(static_cast<int>(rows.size()), 6);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 6; ++j) M(static_cast<int>(i), j) = rows[i][j];
  return gf::rank(L, M) <= 5;
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

Vec line_class(int degree, const std::vector<int>& labels, int a) {
  Vec v(pic::rank_r(degree) + 1, 0);
  v[0] = a;
  for (int l : labels) v[l] = -1;
  return v;
}

IMat permutation_matrix(int n, const std::vector<int>& img) {
  IMat m(n);
  m(0, 0) = 1;
  for (int i = 1; i < n; ++i) m(img[i], i) = 1;
  return m;
}

}  // namespace

Incidences incidences(const PointConfiguration& c) {
  const int r = c.size();
  if (r > 6) throw std::invalid_argument("at most six points");
  Incidences inc;
  for (int k = 3; k <= std::min(r, 4); ++k)
    subsets(r, k, [&](const std::vector<int>& s) {
      auto pre = prefixes(c, s);
      if (pre.empty() || !on_common_line(c, pre)) return;
      if (k == 4) throw std::invalid_argument("four points on a line: not in almost general position");
      inc.lines.push_back(s);
    });
  if (r == 6) {
    std::vector<int> all{1, 2, 3, 4, 5, 6};
    auto pre = prefixes(c, all);
    if (!pre.empty() && on_common_conic(c, pre)) inc.conics.push_back(all);
  }
  return inc;
}

std::vector<Vec> effective_roots(const PointConfiguration& c) {
  const int r = c.size();
  const int degree = 9 - r;
  auto inc = incidences(c);
  std::vector<Vec> gens;
  for (auto& ch : c.chains)
    for (size_t i = 0; i + 1 < ch.labels.size(); ++i) {
      Vec v(r + 1, 0);
      v[ch.labels[i]] = 1;
      v[ch.labels[i + 1]] = -1;
      gens.push_back(v);
    }
  for (auto& l : inc.lines) gens.push_back(line_class(degree, l, 1));
  for (auto& q : inc.conics) gens.push_back(line_class(degree, q, 2));
  // positive roots of the subsystem are reached by adding generators one at a time
  const auto& W = pic::weyl_group(degree);
  std::set<Vec> eff(gens.begin(), gens.end());
  std::vector<Vec> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (auto& a : frontier)
      for (auto& g : gens) {
        Vec s = pic::add(a, g);
        if (W.root_index(s) >= 0 && eff.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {eff.begin(), eff.end()};
}

std::vector<Vec> irreducible_roots(const std::vector<Vec>& effective) {
  std::set<Vec> eff(effective.begin(), effective.end());
  std::vector<Vec> out;
  for (auto& v : effective) {
    bool sum = false;
    for (auto& a : effective)
      if (eff.count(pic::sub(v, a))) {
        sum = true;
        break;
      }
    if (!sum) out.push_back(v);
  }
  return out;
}

IMat frobenius_weyl(const PointConfiguration& c) {
  const Field& L = c.coord_field();
  const unsigned long long q = c.base_field().q;
  const int r = c.size();
  std::vector<int> img(r + 1, 0);
  for (auto& ch : c.chains) {
    Pt fb = normalized(L, frob(L, q, ch.base));
    const Chain* target = nullptr;
    for (auto& other : c.chains)
      if (normalized(L, other.base) == fb) target = &other;
    if (!target || target->labels.size() != ch.labels.size())
      throw std::invalid_argument("configuration is not Galois stable");
    // conjugate germs are built by applying Frobenius, so they agree exactly
    for (size_t j = 0; j < ch.jet.size(); ++j)
      if (frob(L, q, ch.jet[j]) != target->jet[j]) throw std::invalid_argument("configuration is not Galois stable");
    for (size_t j = 0; j < ch.labels.size(); ++j) img[ch.labels[j]] = target->labels[j];
  }
  IMat w = permutation_matrix(r + 1, img);
  return w;
}

LatticeData lattice(const PointConfiguration& c) {
  LatticeData d;
  d.degree = 9 - c.size();
  d.w = frobenius_weyl(c);
  d.basis = irreducible_roots(effective_roots(c));
  std::set<Vec> b(d.basis.begin(), d.basis.end());
  for (auto& v : d.basis)
    if (!b.count(pic::apply(d.w, v))) throw std::invalid_argument("Frobenius does not stabilize the effective roots");
  return d;
}

LatticeData contract(const LatticeData& d, const Vec& e) {
  const int r = pic::rank_r(d.degree);
  if (d.degree >= 9) throw std::invalid_argument("nothing to contract");
  Vec K = pic::canonical_class(d.degree);
  if (pic::pairing(e, e) != -1 || pic::pairing(e, K) != -1) throw std::invalid_argument("not an exceptional class");
  if (pic::apply(d.w, e) != e) throw std::invalid_argument("class is not fixed by Frobenius");
  for (auto& b : d.basis)
    if (pic::pairing(e, b) != 0) throw std::invalid_argument("class meets a (-2)-curve");
  const auto& W = pic::weyl_group(d.degree);
  Vec er = pic::basis_vector(d.degree, r);
  int gi = -1;
  for (int g = 0; g < W.size() && gi < 0; ++g)
    if (pic::apply(W.elems[g], e) == er) gi = g;
  if (gi < 0) throw std::logic_error("exceptional class outside the Weyl orbit of E_r");
  const IMat& g = W.elems[gi];
  const IMat& gin = W.elems[W.inv(gi)];
  IMat w = pic::mul(g, pic::mul(d.w, gin));
  LatticeData out;
  out.degree = d.degree + 1;
  out.w = IMat(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.w(i, j) = w(i, j);
  for (auto& b : d.basis) {
    Vec v = pic::apply(g, b);
    if (v[r] != 0) throw std::logic_error("basis does not descend");
    v.pop_back();
    out.basis.push_back(v);
  }
  return out;
}

LatticeData blowup_at_point(const types::ArithmeticType& deg4, const std::vector<int>& profile) {
  if (deg4.degree != 4) throw std::invalid_argument("blowup_at_point starts from degree 4");
  const auto& gt = types::type_table(4).geo[deg4.geo];
  const auto& W4 = pic::weyl_group(4);
  const IMat& w = W4.elems[deg4.rep];
  auto curves = gt.curves();
  const int nl = static_cast<int>(gt.lines.size());
  std::set<int> prof(profile.begin(), profile.end());
  if (prof.size() != profile.size()) throw std::invalid_argument("profile repeats a curve");
  for (int i : profile) {
    if (i < 0 || i >= static_cast<int>(curves.size())) throw std::invalid_argument("profile index out of range");
    if (i >= nl) throw std::invalid_argument("profile contains a (-2)-curve");
  }
  if (profile.size() > 2) throw std::invalid_argument("three negative curves are never concurrent");
  if (profile.size() == 2 && pic::pairing(curves[profile[0]], curves[profile[1]]) != 1)
    throw std::invalid_argument("profile curves do not meet");
  auto perm = types::curve_permutation(gt, w);
  for (int i : profile)
    if (!prof.count(perm[i])) throw std::invalid_argument("profile is not Galois stable");
  LatticeData d;
  d.degree = 3;
  d.w = IMat(7);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) d.w(i, j) = w(i, j);
  d.w(6, 6) = 1;
  for (auto& b : gt.basis_vecs) {
    Vec v = b;
    v.push_back(0);
    d.basis.push_back(v);
  }
  for (int i : profile) {
    Vec v = curves[i];
    v.push_back(-1);
    d.basis.push_back(v);
  }
  return d;
}

long long profile_points(const types::ArithmeticType& deg4, const std::vector<int>& profile, long long q) {
  const auto& gt = types::type_table(4).geo[deg4.geo];
  const IMat& w = pic::weyl_group(4).elems[deg4.rep];
  auto curves = gt.curves();
  auto perm = types::curve_permutation(gt, w);
  const int n = static_cast<int>(curves.size());
  if (profile.size() == 2) return 1;
  if (profile.size() == 1) {
    int c = profile[0];
    if (perm[c] != c) return 0;
    long long pts = q + 1;
    for (int j = 0; j < n; ++j)
      if (j != c && perm[j] == j && pic::pairing(curves[c], curves[j]) == 1) --pts;
    return pts;
  }
  // off every negative curve
  long long t = 0, nfix = 0, i1 = 0, i2 = 0;
  for (int i = 0; i < w.n; ++i) t += w(i, i);
  for (int i = 0; i < n; ++i) {
    if (perm[i] == i) {
      ++nfix;
      for (int j = i + 1; j < n; ++j)
        if (perm[j] == j) i1 += pic::pairing(curves[i], curves[j]);
    } else if (perm[perm[i]] == i && i < perm[i] && pic::pairing(curves[i], curves[perm[i]]) == 1) {
      ++i2;
    }
  }
  return q * q + t * q + 1 - (nfix * (q + 1) - i1) - i2;
}

// ---------------------------------------------------------------------------
// Concrete configurations

namespace {

struct Builder {
  int p, m, ext;
  const Field& K;
  const Field& L;
  unsigned long long q;
  std::mt19937_64 rng;

  Builder(int p_, int m_, int ext_, std::uint64_t seed)
      : p(p_), m(m_), ext(ext_), K(gf::field(p_, m_)), L(gf::field(p_, m_ * ext_)), q(K.q), rng(seed) {}

  // random element of F_{q^k} inside the coordinate field
  Elt elt(int k) {
    const Field& F = gf::field(p, m * k);
    Elt a = static_cast<Elt>(std::uniform_int_distribution<std::uint64_t>(0, F.q - 1)(rng));
    return gf::embed(F, L, a);
  }
  int degree_of(const Pt& v) {
    Pt n = normalized(L, v);
    Pt x = n;
    for (int k = 1; k <= ext; ++k) {
      x = frob(L, q, x);
      if (x == n) return k;
    }
    return ext;
  }
  // element of exact degree k over F_q
  Elt elt_exact(int k) {
    while (true) {
      Elt a = elt(k);
      if (degree_of({a, 1}) == k) return a;
    }
  }
  Pt point(int k) {
    while (true) {
      Pt v{elt(k), elt(k), elt(k)};
      if (std::all_of(v.begin(), v.end(), [](Elt x) { return x == 0; })) continue;
      v = normalized(L, v);
      if (degree_of(v) == k) return v;
    }
  }
  Pt vec(int k) { return {elt(k), elt(k), elt(k)}; }
  Pt comb(const Pt& a, Elt s, const Pt& b) {
    Pt out(3);
    for (int i = 0; i < 3; ++i) out[i] = L.add(a[i], L.mul(s, b[i]));
    return out;
  }
  Pt scaled(const Pt& a, Elt s) {
    Pt out(3);
    for (int i = 0; i < 3; ++i) out[i] = L.mul(s, a[i]);
    return out;
  }
  Pt cross(const Pt& a, const Pt& b) {
    return {L.sub(L.mul(a[1], b[2]), L.mul(a[2], b[1])), L.sub(L.mul(a[2], b[0]), L.mul(a[0], b[2])),
            L.sub(L.mul(a[0], b[1]), L.mul(a[1], b[0]))};
  }
  bool independent(const std::vector<Pt>& vs) {
    gf::Matrix M(static_cast<int>(vs.size()), 3);
    for (size_t i = 0; i < vs.size(); ++i)
      for (int j = 0; j < 3; ++j) M(static_cast<int>(i), j) = vs[i][j];
    return gf::rank(L, M) == static_cast<int>(vs.size());
  }
  // conjugates of a chain under Frobenius, labels assigned consecutively
  std::vector<Chain> orbit(const Chain& c, int& next_label) {
    std::vector<Chain> out;
    Chain cur = c;
    for (int i = 0; i < c.field_degree; ++i) {
      cur.labels.clear();
      for (size_t j = 0; j < c.labels.size(); ++j) cur.labels.push_back(next_label++);
      out.push_back(cur);
      cur.base = frob(L, q, cur.base);
      for (auto& v : cur.jet) v = frob(L, q, v);
    }
    return out;
  }
  // chain of the given length at a point of degree k; jets drawn over F_{q^k}
  Chain chain(const Pt& base, int k, int len) {
    Chain c;
    c.base = base;
    c.field_degree = k;
    c.labels.assign(static_cast<size_t>(len), 0);
    for (int i = 1; i < len; ++i) c.jet.push_back(vec(k));
    return c;
  }
};

PointConfiguration assemble(Builder& b, const std::vector<Chain>& reps) {
  PointConfiguration c{b.p, b.m, b.ext, {}};
  int label = 1;
  for (auto& r : reps)
    for (auto& ch : b.orbit(r, label)) c.chains.push_back(ch);
  return c;
}

// A rational line through two rational points, and points on it.
struct Line {
  Pt a, b;
};

// plane recipes for degrees 5 and 6; returns the configuration and the
// classes to contract afterwards
using Recipe = std::function<PointConfiguration(Builder&, std::vector<Vec>&)>;

int ext_for(int degree, int type_no) {
  if (degree == 6 && type_no == 5) return 3;
  if (degree == 5 && type_no == 3) return 3;
  if ((degree == 6 && (type_no == 2 || type_no == 4 || type_no == 8)) ||
      (degree == 5 && (type_no == 2 || type_no == 5 || type_no == 7)))
    return 2;
  return 1;
}

Pt on_line(Builder& b, const Line& l, int k) {
  // a point of exact degree k on the line a + s b
  Elt s = b.elt_exact(k);
  return normalized(b.L, b.comb(l.a, s, l.b));
}

Line rational_line(Builder& b) {
  while (true) {
    Pt a = b.point(1), c = b.point(1);
    if (b.independent({a, c})) return {a, c};
  }
}

// k points on the line given by the partition of their degrees
std::vector<Chain> points_on_line(Builder& b, const Line& l, const std::vector<int>& degs, std::set<Pt> used = {}) {
  std::vector<Chain> out;
  for (int k : degs) {
    while (true) {
      Pt p;
      if (k == 1) {
        // include the point at s = infinity so q = 2 has three rational points
        std::uint64_t i = std::uniform_int_distribution<std::uint64_t>(0, b.q)(b.rng);
        p = i == b.q ? normalized(b.L, l.b) : on_line(b, l, 1);
      } else {
        p = on_line(b, l, k);
      }
      if (used.count(p)) continue;
      Pt x = p;
      for (int i = 0; i < k; ++i) {
        used.insert(x);
        x = normalized(b.L, frob(b.L, b.q, x));
      }
      out.push_back(b.chain(p, k, 1));
      break;
    }
  }
  return out;
}

Pt off_line(Builder& b, const Line& l, int k) {
  while (true) {
    Pt p = b.point(k);
    if (b.independent({l.a, l.b, p})) return p;
  }
}

Recipe deg5_recipe(int type_no) {
  switch (type_no) {
    case 1:
    case 2:
    case 3: {
      // three collinear points with the given Galois orbits, p_4 rational off the line
      static const std::vector<int> parts[] = {{1, 1, 1}, {2, 1}, {3}};
      const std::vector<int> degs = parts[type_no - 1];
      return [degs](Builder& b, std::vector<Vec>&) {
        Line l = rational_line(b);
        auto reps = points_on_line(b, l, degs);
        reps.push_back(b.chain(off_line(b, l, 1), 1, 1));
        return assemble(b, reps);
      };
    }
    case 4:
      return [](Builder& b, std::vector<Vec>&) {
        return assemble(b, {b.chain(b.point(1), 1, 2), b.chain(b.point(1), 1, 2)});
      };
    case 5:
      return [](Builder& b, std::vector<Vec>&) { return assemble(b, {b.chain(b.point(2), 2, 2)}); };
    case 6:
    case 7: {
      // p_1, p_3, p_4 collinear, p_2 > p_1 off the line
      const int k = type_no == 6 ? 1 : 2;
      return [k](Builder& b, std::vector<Vec>&) {
        Line l = rational_line(b);
        Chain c = b.chain(l.a, 1, 2);
        auto rest = points_on_line(b, l, k == 1 ? std::vector<int>{1, 1} : std::vector<int>{2}, {l.a});
        std::vector<Chain> reps{c};
        reps.insert(reps.end(), rest.begin(), rest.end());
        return assemble(b, reps);
      };
    }
    case 8:
      return [](Builder& b, std::vector<Vec>&) {
        Chain c = b.chain(b.point(1), 1, 3);
        c.jet[1] = {0, 0, 0};
        return assemble(b, {c, b.chain(b.point(1), 1, 1)});
      };
    case 9:
      return [](Builder& b, std::vector<Vec>&) { return assemble(b, {b.chain(b.point(1), 1, 4)}); };
    case 10:
      return [](Builder& b, std::vector<Vec>&) {
        Chain c = b.chain(b.point(1), 1, 4);
        c.jet[1] = {0, 0, 0};
        return assemble(b, {c});
      };
  }
  throw std::invalid_argument("no degree-5 type " + std::to_string(type_no));
}

Vec exc_line(int degree, int i, int j) {
  Vec v(pic::rank_r(degree) + 1, 0);
  v[0] = 1;
  v[i] = v[j] = -1;
  return v;
}

Recipe deg6_recipe(int type_no) {
  switch (type_no) {
    case 1:
      return [](Builder& b, std::vector<Vec>&) {
        return assemble(b, {b.chain(b.point(1), 1, 2), b.chain(b.point(1), 1, 1)});
      };
    case 2:
      return [](Builder& b, std::vector<Vec>& contract_out) {
        contract_out = {exc_line(5, 3, 4)};
        return deg5_recipe(2)(b, contract_out);
      };
    case 3:
    case 4:
    case 5: {
      static const std::vector<int> parts[] = {{1, 1, 1}, {2, 1}, {3}};
      const std::vector<int> degs = parts[type_no - 3];
      return [degs](Builder& b, std::vector<Vec>&) { return assemble(b, points_on_line(b, rational_line(b), degs)); };
    }
    case 6:
      return [](Builder& b, std::vector<Vec>&) {
        Line l = rational_line(b);
        Chain c = b.chain(normalized(b.L, l.a), 1, 2);
        c.jet[0] = l.b;
        Pt p3;
        do p3 = on_line(b, l, 1);
        while (p3 == normalized(b.L, l.a));
        return assemble(b, {c, b.chain(p3, 1, 1)});
      };
    case 7:
      return [](Builder& b, std::vector<Vec>&) { return assemble(b, {b.chain(b.point(1), 1, 3)}); };
    case 8:
      return [](Builder& b, std::vector<Vec>& contract_out) {
        contract_out = {exc_line(5, 1, 2)};
        return deg5_recipe(7)(b, contract_out);
      };
    case 9:
      return [](Builder& b, std::vector<Vec>&) {
        Chain c = b.chain(b.point(1), 1, 3);
        c.jet[1] = {0, 0, 0};
        return assemble(b, {c});
      };
  }
  throw std::invalid_argument("no degree-6 type " + std::to_string(type_no));
}

const char* deg6_text[] = {"",
                           "p1 < p2 and p3 rational, not collinear",
                           "degree-5 type 2 configuration, then contract E0-E3-E4",
                           "three collinear rational points",
                           "conjugate pair over F_q^2 and a rational point, collinear",
                           "three conjugate collinear points over F_q^3",
                           "p1 < p2 and p3 rational, collinear",
                           "p1 < p2 < p3 rational, not collinear",
                           "degree-5 type 7 configuration, then contract E0-E1-E2",
                           "p1 < p2 < p3 rational, collinear"};
const char* deg5_text[] = {"",
                           "three collinear rational points, p4 rational off the line",
                           "collinear conjugate pair over F_q^2 and rational point, p4 rational off the line",
                           "three conjugate collinear points over F_q^3, p4 rational off the line",
                           "p1 < p2 and p3 < p4 rational",
                           "p1 < p2 over F_q^2 and its conjugate chain p3 < p4",
                           "p1, p3, p4 collinear rational, p2 > p1 off the line",
                           "p1 rational, p3, p4 conjugate over F_q^2 on a rational line through p1, p2 > p1 off it",
                           "p1 < p2 < p3 collinear, p4 rational off the line",
                           "p1 < p2 < p3 < p4 with p1, p2, p3 not collinear",
                           "p1 < p2 < p3 < p4 with p1, p2, p3 collinear"};

}  // namespace

BlowupPlan build_plan(int degree, int type_no, int p, int m, std::uint64_t seed) {
  if (degree != 5 && degree != 6) throw std::invalid_argument("blowup plans cover degrees 5 and 6");
  const auto& T = types::type_table(degree);
  if (type_no < 1 || type_no > T.count_numbered())
    throw std::invalid_argument("no degree-" + std::to_string(degree) + " type " + std::to_string(type_no));
  Recipe recipe = degree == 6 ? deg6_recipe(type_no) : deg5_recipe(type_no);
  Builder b(p, m, ext_for(degree, type_no), seed * 1000003 + static_cast<std::uint64_t>(degree * 100 + type_no));
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Vec> contracted;
    PointConfiguration c;
    LatticeData d;
    try {
      c = recipe(b, contracted);
      d = lattice(c);
      for (auto& e : contracted) d = contract(d, e);
      const auto& at = identify(d);
      if (at.degree != degree || at.type_no != type_no) continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    BlowupPlan plan;
    plan.degree = degree;
    plan.type_no = type_no;
    plan.p = p;
    plan.m = m;
    plan.route = contracted.empty() ? "plane" : "plane+contract";
    plan.recipe = degree == 6 ? deg6_text[type_no] : deg5_text[type_no];
    plan.config = c;
    plan.contracted = contracted;
    plan.result = d;
    plan.identified = type_no;
    return plan;
  }
  throw std::runtime_error("no configuration found for degree " + std::to_string(degree) + " type " +
                           std::to_string(type_no));
}

namespace {

// Group points into Frobenius orbits, one chain of length one per orbit.
std::vector<Chain> orbit_reps(Builder& b, const std::vector<Pt>& pts) {
  std::vector<Chain> out;
  std::set<Pt> seen;
  for (auto& p0 : pts) {
    Pt p = normalized(b.L, p0);
    if (seen.count(p)) continue;
    int k = 0;
    Pt x = p;
    do {
      seen.insert(x);
      x = normalized(b.L, frob(b.L, b.q, x));
      ++k;
    } while (x != p);
    out.push_back(b.chain(p, k, 1));
  }
  return out;
}

Pt conic_point(Builder& b, Elt t) { return {1, t, b.L.mul(t, t)}; }  // on x z = y^2

// distinct parameters on the conic, one per part, of the given degrees
std::vector<Pt> conic_orbits(Builder& b, const std::vector<int>& degs) {
  std::vector<Pt> reps;
  std::set<Pt> used;
  for (int k : degs) {
    Pt p;
    int guard = 0;
    while (true) {
      if (++guard > 1000) throw std::invalid_argument("not enough points on the conic");
      if (k == 1 && std::uniform_int_distribution<std::uint64_t>(0, b.q)(b.rng) == b.q) p = {0, 0, 1};
      else p = conic_point(b, b.elt_exact(k));
      if (!used.count(p)) break;
    }
    Pt x = p;
    for (int i = 0; i < k; ++i) {
      used.insert(x);
      x = normalized(b.L, frob(b.L, b.q, x));
    }
    reps.push_back(p);
  }
  return reps;
}

// a line of exact degree k over F_q
Pt line_of_degree(Builder& b, int k) { return b.point(k); }

struct Deg3Recipe {
  std::string text;
  int ext;
  std::function<PointConfiguration(Builder&)> build;
};

std::vector<Deg3Recipe> deg3_recipes() {
  std::vector<Deg3Recipe> v;
  // A1: six points of a smooth conic, Galois orbits given by a partition of 6
  const std::vector<std::vector<int>> parts6 = {{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {3, 1, 1, 1},
                                                {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  for (auto& part : parts6) {
    int ext = 1;
    for (int k : part) ext = std::lcm(ext, k);
    std::string text = "six points of a smooth conic, orbit degrees";
    for (int k : part) text += " " + std::to_string(k);
    v.push_back({text, ext, [part](Builder& b) { return assemble(b, orbit_reps(b, conic_orbits(b, part))); }});
  }
  // A2: three points on each of two lines, away from their meeting point
  const std::vector<std::vector<int>> parts3 = {{1, 1, 1}, {2, 1}, {3}};
  for (auto& p1 : parts3)
    for (auto& p2 : parts3) {
      int ext = 1;
      for (int k : p1) ext = std::lcm(ext, k);
      for (int k : p2) ext = std::lcm(ext, k);
      std::string text = "three points on each of two rational lines, orbit degrees";
      for (int k : p1) text += " " + std::to_string(k);
      text += " /";
      for (int k : p2) text += " " + std::to_string(k);
      v.push_back({text, ext, [p1, p2](Builder& b) {
                     Line l1 = rational_line(b), l2 = rational_line(b);
                     Pt meet = normalized(b.L, b.cross(b.cross(l1.a, l1.b), b.cross(l2.a, l2.b)));
                     auto a = points_on_line(b, l1, p1, {meet});
                     std::set<Pt> used{meet};
                     for (auto& c : a) used.insert(c.base);
                     auto c2 = points_on_line(b, l2, p2, used);
                     a.insert(a.end(), c2.begin(), c2.end());
                     return assemble(b, a);
                   }});
    }
  v.push_back({"conjugate lines over F_q^2 and a point of degree 6 on one of them with its conjugates", 6,
               [](Builder& b) {
                 Pt a = b.point(2), c = b.point(2);
                 Pt x = normalized(b.L, b.comb(a, b.elt_exact(6), c));
                 return assemble(b, {b.chain(x, b.degree_of(x), 1)});
               }});
  // 3A1 type 35: three conjugate points and three conjugate points infinitely near them
  v.push_back({"point of degree 3 and an infinitely near point on each conjugate", 3,
               [](Builder& b) { return assemble(b, {b.chain(b.point(3), 3, 2)}); }});
  // 4A1: the six meeting points of four lines in general position
  const std::vector<std::vector<int>> parts4 = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  for (auto& part : parts4) {
    int ext = 1;
    for (int k : part) ext = std::lcm(ext, k);
    std::string text = "meeting points of four lines, line orbit degrees";
    for (int k : part) text += " " + std::to_string(k);
    v.push_back({text, ext, [part](Builder& b) {
                   std::vector<Pt> lines;
                   for (int k : part) {
                     Pt l = line_of_degree(b, k);
                     for (int i = 0; i < k; ++i) {
                       lines.push_back(l);
                       l = normalized(b.L, frob(b.L, b.q, l));
                     }
                   }
                   std::vector<Pt> pts;
                   for (size_t i = 0; i < lines.size(); ++i)
                     for (size_t j = i + 1; j < lines.size(); ++j) pts.push_back(b.cross(lines[i], lines[j]));
                   return assemble(b, orbit_reps(b, pts));
                 }});
  }
  // A4 type 61: p1 < p2 < p3 < p4, and a point of degree 2 on a rational line through p1
  v.push_back({"p1 < p2 < p3 < p4 not collinear, and a point of degree 2 on a rational line through p1", 2,
               [](Builder& b) {
                 Chain c = b.chain(b.point(1), 1, 4);
                 Line l{c.base, b.point(1)};
                 Pt x = normalized(b.L, b.comb(l.a, b.elt_exact(2), l.b));
                 return assemble(b, {c, b.chain(x, 2, 1)});
               }});
  // D4 type 64: three conjugate collinear points and an infinitely near point on each
  v.push_back({"three conjugate collinear points over F_q^3 and an infinitely near point on each", 3,
               [](Builder& b) {
                 Line l = rational_line(b);
                 return assemble(b, {b.chain(on_line(b, l, 3), 3, 2)});
               }});
  // chains on the conic x z = y^2, whose germ at (1:0:0) is (1 : s : s^2)
  auto conic_chain = [](Builder& b, int len) {
    Chain c = b.chain({1, 0, 0}, 1, len);
    for (auto& j : c.jet) j = {0, 0, 0};
    if (len > 1) c.jet[0] = {0, 1, 0};
    if (len > 2) c.jet[1] = {0, 0, 1};
    return c;
  };
  v.push_back({"p1 < ... < p5 on a smooth conic, p6 a rational point of that conic", 1, [conic_chain](Builder& b) {
                 Pt p6;
                 do p6 = std::uniform_int_distribution<std::uint64_t>(0, b.q)(b.rng) == b.q ? Pt{0, 0, 1} : conic_point(b, b.elt(1));
                 while (p6 == Pt{1, 0, 0});
                 return assemble(b, {conic_chain(b, 5), b.chain(p6, 1, 1)});
               }});
  v.push_back({"p1 < ... < p6 with p1, p2, p3 not collinear", 1,
               [](Builder& b) { return assemble(b, {b.chain(b.point(1), 1, 6)}); }});
  v.push_back({"p1 < ... < p6 on a smooth conic", 1, [conic_chain](Builder& b) { return assemble(b, {conic_chain(b, 6)}); }});
  v.push_back({"p1 < ... < p6 with p1, p2, p3 collinear", 1, [](Builder& b) {
                 Chain c = b.chain(b.point(1), 1, 6);
                 c.jet[1] = {0, 0, 0};
                 return assemble(b, {c});
               }});
  // 3A2: three points, then on each exceptional curve the direction of the next point
  for (int k : {1, 3}) {
    v.push_back({k == 1 ? "three rational points, then the point of E_i towards p_{i+1}"
                        : "three conjugate points over F_q^3, then the point of E_i towards p_{i+1}",
                 k, [k](Builder& b) {
                   std::vector<Pt> p;
                   if (k == 1) p = {b.point(1), b.point(1), b.point(1)};
                   else {
                     Pt x = b.point(3);
                     p = {x, normalized(b.L, frob(b.L, b.q, x))};
                     p.push_back(normalized(b.L, frob(b.L, b.q, p[1])));
                   }
                   std::vector<Chain> reps;
                   for (int i = 0; i < (k == 1 ? 3 : 1); ++i) {
                     Chain c = b.chain(p[i], k, 2);
                     c.jet[0] = p[(i + 1) % 3];
                     reps.push_back(c);
                   }
                   return assemble(b, reps);
                 }});
  }
  return v;
}

}  // namespace

std::optional<BlowupPlan> deg3_plane_plan(int type_no, int p, int m, std::uint64_t seed) {
  const auto& T3 = types::type_table(3);
  const auto& target = T3.by_number(type_no);
  const std::string& dynkin = T3.geo[target.geo].dynkin;
  static const std::vector<Deg3Recipe> recipes = deg3_recipes();
  for (size_t ri = 0; ri < recipes.size(); ++ri) {
    auto& rec = recipes[ri];
    Builder b(p, m, rec.ext, seed * 1000003 + 300 + ri);
    int misses = 0;
    for (int attempt = 0; attempt < 40; ++attempt) {
      PointConfiguration c;
      LatticeData d;
      try {
        c = rec.build(b);
        if (c.size() != 6) continue;  // coincident points
        d = lattice(c);
        // special positions give other types, so only a long run of misses rules a recipe out
        if (types::dynkin_label(d.basis) != dynkin || identify(d).type_no != type_no) {
          if (++misses >= 12) break;
          continue;
        }
      } catch (const std::invalid_argument&) {
        continue;
      }
      BlowupPlan plan;
      plan.degree = 3;
      plan.type_no = type_no;
      plan.p = p;
      plan.m = m;
      plan.route = "plane";
      plan.recipe = rec.text;
      plan.config = c;
      plan.result = d;
      plan.identified = type_no;
      return plan;
    }
  }
  return std::nullopt;
}

}  // namespace wdp::plane
