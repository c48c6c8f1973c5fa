#include "wdp/oracle.hpp"

#include "wdp/blowdown.hpp"
#include "wdp/count.hpp"
#include "wdp/synth4.hpp"
#include "wdp/zeta.hpp"

namespace wdp::oracle {

using gf::Elt;
using gf::Field;
using gf::Matrix;
using gf::Poly;

namespace {

Elt rand_elt(const Field& K, std::mt19937_64& rng) {
  return static_cast<Elt>(std::uniform_int_distribution<std::uint32_t>(0, K.q - 1)(rng));
}

std::pair<int, int> split_q(int q) {
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      int m = 0;
      for (int x = q; x > 1; x /= p) ++m;
      return {p, m};
    }
  return {0, 0};
}

std::string qname(const Field& K) { return "q=" + std::to_string(K.q); }

// determinant with the kernel coordinate deleted: the form on a complement
Elt quotient_det(const Field& E, const Matrix& M, const std::vector<Elt>& k) {
  int skip = 0;
  while (k[skip] == 0) ++skip;
  const int n = M.rows;
  Matrix R(n - 1, n - 1);
  for (int i = 0, a = 0; i < n; ++i) {
    if (i == skip) continue;
    for (int j = 0, b = 0; j < n; ++j) {
      if (j == skip) continue;
      R(a, b++) = M(i, j);
    }
    ++a;
  }
  return n == 1 ? 1 : gf::det(E, R);
}

}  // namespace

quad::Pair random_pair(const Field& K, std::mt19937_64& rng) {
  quad::Pair P;
  P.p = K.p;
  P.m = K.m;
  P.Q0 = Matrix(5, 5);
  P.Qinf = Matrix(5, 5);
  while (true) {
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        P.Q0(i, j) = P.Q0(j, i) = rand_elt(K, rng);
        P.Qinf(i, j) = P.Qinf(j, i) = rand_elt(K, rng);
      }
    if (gf::det(K, P.Qinf) != 0) return P;
  }
}

quad::Cyclic random_cyclic(const Field& K, std::mt19937_64& rng) {
  int n = std::uniform_int_distribution<int>(1, 5)(rng);
  quad::Cyclic c;
  c.F.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) c.F[i] = rand_elt(K, rng);
  c.F[n] = 1;
  while (true) {
    Poly d(static_cast<size_t>(n));
    for (auto& x : d) x = rand_elt(K, rng);
    d = gf::trim(d);
    if (!d.empty() && gf::deg(gf::pgcd(K, c.F, d)) == 0) {
      c.delta = d;
      return c;
    }
  }
}

Check counters(int instances, const std::vector<int>& qs, std::uint64_t seed) {
  Check c{"charsum == brute", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    auto [p, m] = split_q(qs[static_cast<size_t>(i) % qs.size()]);
    const Field& K = gf::field(p, m);
    auto P = random_pair(K, rng);
    long long a = count::count_charsum(P, 1), b = count::count_brute(P, 1);
    ++c.instances;
    if (a != b) c.fail(qname(K) + " pair " + std::to_string(i) + ": charsum " + std::to_string(a) + " brute " + std::to_string(b));
  }
  return c;
}

Check discriminants(int instances, const std::vector<int>& qs, std::uint64_t seed) {
  Check c{"discriminant lemma", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    auto [p, m] = split_q(qs[static_cast<size_t>(i) % qs.size()]);
    const Field& K = gf::field(p, m);
    auto cy = random_cyclic(K, rng);
    Matrix G = quad::gram(K, cy);
    ++c.instances;
    if (K.chi(quad::discriminant(K, cy)) != K.chi(gf::det(K, G)))
      c.fail(qname(K) + " item 1, F " + gf::poly_to_string(K, cy.F));
    // a root theta of one irreducible factor, in the extension it generates
    auto fs = gf::factor(K, cy.F);
    const auto& g = fs[static_cast<size_t>(i) % fs.size()].g;
    const Field& E = gf::field(p, m * gf::deg(g));
    Elt theta = gf::roots(E, gf::pembed(K, E, g)).front();
    Matrix GE = gf::membed(K, E, G), TE = gf::membed(K, E, quad::gram_t(K, cy));
    Matrix M = gf::madd(E, gf::mscale(E, GE, theta), gf::mscale(E, TE, E.neg(1)));
    auto ker = gf::kernel(E, M);
    ++c.instances;
    if (ker.size() != 1) {
      c.fail(qname(K) + " item 2: corank " + std::to_string(ker.size()));
      continue;
    }
    Elt oracle = quotient_det(E, M, ker[0]);
    Elt formula = quad::restricted_discriminant(K, cy, E, theta);
    if (oracle == 0 || E.chi(oracle) != E.chi(formula)) c.fail(qname(K) + " item 2, F " + gf::poly_to_string(K, cy.F));
  }
  return c;
}

long long off_curve_brute(const quad::Pair& P) {
  const Field& K = P.field();
  const long long q = K.q;
  long long n = 0;
  std::vector<Elt> x(5);
  for (int lead = 0; lead < 5; ++lead) {
    long long cnt = 1;
    for (int i = lead + 1; i < 5; ++i) cnt *= q;
    for (long long code = 0; code < cnt; ++code) {
      long long t = code;
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      for (int i = lead + 1; i < 5; ++i) {
        x[i] = static_cast<Elt>(t % q);
        t /= q;
      }
      if (gf::qform(K, P.Q0, x) != 0 || gf::qform(K, P.Qinf, x) != 0) continue;
      Matrix Gr(2, 5);
      for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i) {
          Gr(0, j) = K.add(Gr(0, j), K.mul(x[i], P.Q0(i, j)));
          Gr(1, j) = K.add(Gr(1, j), K.mul(x[i], P.Qinf(i, j)));
        }
      if (gf::rank(K, Gr) < 2) continue;  // singular point
      // the tangent plane T_x cuts X_s in x plus the lines through x; with
      // T_x = <x, u1, u2> a line exists iff the two binary forms Q(s u1 + t u2)
      // have a common zero
      std::vector<std::vector<Elt>> us;
      for (auto& v : gf::kernel(K, Gr)) {
        Matrix M(static_cast<int>(us.size()) + 2, 5);
        for (int j = 0; j < 5; ++j) M(0, j) = x[j];
        for (size_t k = 0; k < us.size(); ++k)
          for (int j = 0; j < 5; ++j) M(static_cast<int>(k) + 1, j) = us[k][j];
        for (int j = 0; j < 5; ++j) M(static_cast<int>(us.size()) + 1, j) = v[j];
        if (gf::rank(K, M) == static_cast<int>(us.size()) + 2) us.push_back(v);
        if (us.size() == 2) break;
      }
      auto coeffs = [&](const Matrix& Q, Elt& A, Elt& B, Elt& C) {
        A = gf::qform(K, Q, us[0]);
        C = gf::qform(K, Q, us[1]);
        std::vector<Elt> s(5);
        for (int j = 0; j < 5; ++j) s[j] = K.add(us[0][j], us[1][j]);
        B = K.sub(K.sub(gf::qform(K, Q, s), A), C);
      };
      Elt A, B, C, A2, B2, C2;
      coeffs(P.Q0, A, B, C);
      coeffs(P.Qinf, A2, B2, C2);
      // resultant of A s^2 + B s t + C t^2 and A2 s^2 + B2 s t + C2 t^2
      Elt r1 = K.sub(K.mul(A, C2), K.mul(A2, C));
      Elt res = K.sub(K.mul(r1, r1),
                      K.mul(K.sub(K.mul(A, B2), K.mul(A2, B)), K.sub(K.mul(B, C2), K.mul(B2, C))));
      if (res != 0) ++n;
    }
  }
  return n;
}

Check off_curve(const std::vector<int>& types, const std::vector<int>& qs, std::uint64_t seed) {
  Check c{"N(q) == points off the negative curves", 0, 0, {}};
  const auto& T = types::type_table(4);
  for (int q : qs) {
    auto [p, m] = split_q(q);
    const Field& K = gf::field(p, m);
    for (int t : types) {
      const auto& at = T.by_number(t);
      auto P = synth4::synthesize(at, K, seed).pair;
      long long formula = blowdown::off_curve_count(at).n.at(K.q), brute = off_curve_brute(P);
      ++c.instances;
      if (formula != brute)
        c.fail("type " + std::to_string(t) + " " + qname(K) + ": formula " + std::to_string(formula) + " brute " +
               std::to_string(brute));
    }
  }
  return c;
}

Check brute_counts(const std::vector<int>& types, const std::vector<int>& qs, std::uint64_t seed) {
  Check c{"brute counts == zeta prediction", 0, 0, {}};
  const auto& T = types::type_table(4);
  for (int q : qs) {
    auto [p, m] = split_q(q);
    const Field& K = gf::field(p, m);
    for (int t : types) {
      const auto& at = T.by_number(t);
      auto P = synth4::synthesize(at, K, seed).pair;
      long long Q = 1;
      for (int n = 1; (Q *= K.q) <= 32; ++n) {
        ++c.instances;
        long long brute = count::count_brute(P, n);
        if (zeta::count_sing(at, K.q, n) != brute)
          c.fail("type " + std::to_string(t) + " " + qname(K) + " n=" + std::to_string(n));
      }
    }
  }
  return c;
}

}  // namespace wdp::oracle
