#include "wdp/quadmod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wdp::quad {

using gf::Elt;
using gf::Field;
using gf::Matrix;
using gf::Poly;

Elt lambda(const Field& K, const Poly& F, const Poly& x) {
  const int n = gf::deg(F);
  Poly r = gf::pmod(K, x, F);
  return static_cast<int>(r.size()) >= n ? r[n - 1] : 0;
}

void check_cyclic(const Field& K, const Cyclic& c) {
  if (K.p == 2) throw std::invalid_argument("quadratic modules need odd characteristic");
  if (gf::deg(c.F) < 1 || c.F.back() != 1) throw std::invalid_argument("F must be monic and nonconstant");
  if (gf::deg(c.delta) >= gf::deg(c.F)) throw std::invalid_argument("delta must be reduced modulo F");
  if (gf::norm(K, c.F, c.delta) == 0) throw std::invalid_argument("delta is not a unit modulo F");
}

namespace {

Matrix gram_with(const Field& K, const Cyclic& c, const Poly& twist) {
  check_cyclic(K, c);
  const int n = gf::deg(c.F);
  Matrix g(n, n);
  Poly base = gf::pmod(K, gf::pmul(K, c.delta, twist), c.F);
  std::vector<Poly> pw{base};
  for (int k = 1; k <= 2 * n - 2; ++k) pw.push_back(gf::pmod(K, gf::pmul(K, pw.back(), Poly{0, 1}), c.F));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = lambda(K, c.F, pw[i + j]);
  return g;
}

}  // namespace

Matrix gram(const Field& K, const Cyclic& c) { return gram_with(K, c, Poly{1}); }
Matrix gram_t(const Field& K, const Cyclic& c) { return gram_with(K, c, Poly{0, 1}); }

Pair to_pair(const Field& K, const Module& M) {
  int total = 0;
  for (auto& c : M) total += gf::deg(c.F);
  if (total != 5) throw std::invalid_argument("module must have total degree 5");
  Pair P;
  P.p = K.p;
  P.m = K.m;
  P.Q0 = Matrix(5, 5);
  P.Qinf = Matrix(5, 5);
  int off = 0;
  for (auto& c : M) {
    Matrix a = gram_t(K, c), b = gram(K, c);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) {
        P.Q0(off + i, off + j) = a(i, j);
        P.Qinf(off + i, off + j) = b(i, j);
      }
    off += a.rows;
  }
  return P;
}

Pair embed_pair(const Pair& P, int n) {
  const Field& K = P.field();
  const Field& E = gf::field(P.p, P.m * n);
  Pair out;
  out.p = P.p;
  out.m = P.m * n;
  out.Q0 = gf::membed(K, E, P.Q0);
  out.Qinf = gf::membed(K, E, P.Qinf);
  return out;
}

Elt discriminant(const Field& K, const Cyclic& c) {
  check_cyclic(K, c);
  const int n = gf::deg(c.F);
  Elt sign = (n * (n - 1) / 2) % 2 ? K.neg(1) : 1;
  return K.mul(sign, gf::norm(K, c.F, c.delta));
}

Elt restricted_discriminant(const Field& K, const Cyclic& c, const Field& E, Elt theta) {
  Poly FE = gf::pembed(K, E, c.F);
  if (gf::peval(E, FE, theta) != 0) throw std::invalid_argument("theta is not a root of F");
  Elt d = gf::embed(K, E, discriminant(K, c));
  return E.mul(d, gf::peval(E, gf::pembed(K, E, c.delta), theta));
}

Elt form_discriminant(const Field& K, const Matrix& x) {
  Elt d = 1;
  for (Elt e : gf::diagonalize(K, x)) d = K.mul(d, e);
  return d;
}

Poly pencil_poly(const Pair& P) {
  const Field& K = P.field();
  const int n = P.Q0.rows;
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = gf::trim({K.neg(P.Q0(i, j)), P.Qinf(i, j)});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term{1};
    for (int i = 0; i < n && !term.empty(); ++i) term = gf::pmul(K, term, M[i][perm[i]]);
    det = inversions % 2 ? gf::psub(K, det, term) : gf::padd(K, det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool degenerate(const Pair& P) { return pencil_poly(P).empty(); }

Matrix member(const Pair& P, const Field& E, Elt theta, bool infinite) {
  const Field& K = P.field();
  Matrix qinf = gf::membed(K, E, P.Qinf);
  if (infinite) return qinf;
  return gf::madd(E, gf::membed(K, E, P.Q0), gf::mscale(E, qinf, E.neg(theta)));
}

int SegreGroup::mult() const { return std::accumulate(exps.begin(), exps.end(), 0); }

namespace {

using Group = std::vector<int>;

std::string emit(std::vector<Group> groups) {
  for (auto& g : groups) std::sort(g.rbegin(), g.rend());
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  std::string s = "[";
  for (auto& g : groups) {
    if (g.size() > 1) s += "(";
    for (int e : g) s += std::to_string(e);
    if (g.size() > 1) s += ")";
  }
  return s + "]";
}

// Smallest extension degree e with a nonsingular member Q0 - s Qinf, s in F_{q^e}.
std::pair<int, Elt> nonsingular_member(const Pair& P) {
  for (int e = 1; e <= 3; ++e) {
    const Field& E = gf::field(P.p, P.m * e);
    for (Elt s = 0; s < E.q; ++s)
      if (gf::det(E, member(P, E, s, false)) != 0) return {e, s};
  }
  throw std::invalid_argument("degenerate pencil");
}

}  // namespace

std::string Segre::symbol() const {
  std::vector<Group> all;
  for (auto& g : groups)
    for (int k = 0; k < g.deg; ++k) all.push_back(g.exps);
  return emit(all);
}

std::string canonical_segre(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("bad Segre symbol " + s);
  std::vector<Group> groups;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') {
      Group g;
      for (++i; i < s.size() && s[i] != ')'; ++i) g.push_back(s[i] - '0');
      groups.push_back(g);
    } else {
      groups.push_back({s[i] - '0'});
    }
  }
  return emit(groups);
}

Segre segre_symbol(const Pair& P) {
  const Field& K = P.field();
  if (K.p == 2) throw std::invalid_argument("Segre symbols need odd characteristic here");
  Poly det = pencil_poly(P);
  if (det.empty()) throw std::invalid_argument("degenerate pencil");
  auto [e, s] = nonsingular_member(P);
  struct Root {
    Poly g;
    int deg, mult;
  };
  std::vector<Root> roots;
  const int dinf = 5 - gf::deg(det);
  if (dinf > 0) roots.push_back({{}, 1, dinf});
  for (auto& f : gf::factor(K, det)) roots.push_back({f.g, gf::deg(f.g), f.mult});

  Segre out;
  for (auto& r : roots) {
    const int ld = std::lcm(e, r.deg);
    const Field& L = gf::field(P.p, P.m * ld);
    const Field& Es = gf::field(P.p, P.m * e);
    Elt sL = gf::embed(Es, L, s);
    Matrix N = member(P, L, sL, false), Ninv;
    gf::invert(L, N, Ninv);
    Matrix v = gf::mmul(L, Ninv, gf::membed(K, L, P.Qinf));
    Elt mu = 0;
    if (!r.g.empty()) {
      auto th = gf::roots(L, gf::pembed(K, L, r.g));
      mu = L.inv(L.sub(th.at(0), sL));
    }
    Matrix a = gf::madd(L, v, gf::mscale(L, gf::identity(5), L.neg(mu)));
    std::vector<int> ranks{5};
    Matrix pw = gf::identity(5);
    while (true) {
      pw = gf::mmul(L, pw, a);
      int rk = gf::rank(L, pw);
      if (rk == ranks.back()) break;
      ranks.push_back(rk);
    }
    // ranks[j-1] - ranks[j] blocks of size >= j
    std::vector<int> exps;
    const int J = static_cast<int>(ranks.size()) - 1;
    for (int j = 1; j <= J; ++j) {
      int atleast = ranks[j - 1] - ranks[j];
      int next = j < J ? ranks[j] - ranks[j + 1] : 0;
      for (int k = 0; k < atleast - next; ++k) exps.push_back(j);
    }
    std::sort(exps.rbegin(), exps.rend());
    SegreGroup g{r.g, r.deg, exps};
    if (g.mult() != r.mult) throw std::logic_error("Jordan data disagrees with the pencil determinant");
    out.groups.push_back(g);
  }
  return out;
}

bool vertex_rationality(const Field& K, Elt d1, Elt d2) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("delta values must be nonzero");
  return K.is_square(K.neg(K.mul(d1, d2)));
}

}  // namespace wdp::quad
