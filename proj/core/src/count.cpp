#include "wdp/count.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wdp/zeta.hpp"

namespace wdp::count {

using gf::Elt;
using gf::Field;
using gf::Matrix;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_regular(const quad::Pair& P) {
  if (P.field().p == 2) throw std::invalid_argument("point counting needs odd characteristic");
  if (quad::degenerate(P)) throw std::invalid_argument("degenerate pencil");
}

}  // namespace

long long count_brute(const quad::Pair& P, int n) {
  const Field& E = gf::field(P.p, P.m * n);
  if (E.q > 32) throw std::invalid_argument("brute-force budget exceeded (q^n > 32)");
  Matrix A = gf::membed(P.field(), E, P.Q0), B = gf::membed(P.field(), E, P.Qinf);
  long long count = 0;
  std::vector<Elt> v(5);
  for (int lead = 0; lead < 5; ++lead) {
    // v = (0, ..., 0, 1, *, ..., *)
    const int free = 4 - lead;
    long long total = ipow(E.q, free);
    for (long long code = 0; code < total; ++code) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      long long c = code;
      for (int k = 0; k < free; ++k) {
        v[lead + 1 + k] = static_cast<Elt>(c % E.q);
        c /= E.q;
      }
      if (gf::qform(E, A, v) == 0 && gf::qform(E, B, v) == 0) ++count;
    }
  }
  return count;
}

long long count_charsum(const quad::Pair& P, int n) {
  require_regular(P);
  const Field& E = gf::field(P.p, P.m * n);
  const __int128 Q = E.q;
  Matrix A = gf::membed(P.field(), E, P.Q0), B = gf::membed(P.field(), E, P.Qinf);
  __int128 sum = 0;
  auto contribute = [&](const Matrix& M) {
    auto diag = gf::diagonalize(E, M);
    const int r = static_cast<int>(diag.size());
    if (r % 2) return;
    Elt d = (r / 2) % 2 ? E.neg(1) : 1;
    for (Elt e : diag) d = E.mul(d, e);
    __int128 term = Q - 1;
    for (int i = 0; i < 5 - r + r / 2; ++i) term *= Q;
    sum += E.chi(d) * term;
  };
  contribute(B);
  for (Elt t = 0; t < E.q; ++t) contribute(gf::madd(E, A, gf::mscale(E, B, t)));
  const __int128 Q2 = Q * Q;
  if (sum % Q2 != 0) throw std::logic_error("character sum not divisible by Q^2");
  __int128 affine = Q * Q * Q + sum / Q2;
  if ((affine - 1) % (Q - 1) != 0) throw std::logic_error("affine count not projective");
  return static_cast<long long>((affine - 1) / (Q - 1));
}

std::vector<std::vector<Elt>> singular_points(const quad::Pair& P, int n) {
  require_regular(P);
  const Field& K = P.field();
  const Field& E = gf::field(P.p, P.m * n);
  Matrix A = gf::membed(K, E, P.Q0), B = gf::membed(K, E, P.Qinf);
  auto normalize = [&](std::vector<Elt> v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elt x) { return x != 0; });
    Elt s = E.inv(*it);
    for (auto& x : v) x = E.mul(x, s);
    return v;
  };
  auto on_x = [&](const std::vector<Elt>& v) { return gf::qform(E, A, v) == 0 && gf::qform(E, B, v) == 0; };
  std::set<std::vector<Elt>> pts;
  auto visit = [&](Elt theta, bool infinite) {
    Matrix M = quad::member(P, E, theta, infinite);
    auto ker = gf::kernel(E, M);
    if (ker.size() == 1) {
      if (on_x(ker[0])) pts.insert(normalize(ker[0]));
    } else if (ker.size() == 2) {
      std::vector<Elt> x(5);
      for (Elt t = 0; t <= E.q; ++t) {
        // [1:t] for t < q, [0:1] for t = q
        for (int i = 0; i < 5; ++i)
          x[i] = t == E.q ? ker[1][i] : E.add(ker[0][i], E.mul(t, ker[1][i]));
        if (on_x(x)) pts.insert(normalize(x));
      }
    } else if (!ker.empty()) {
      throw std::invalid_argument("pencil member of corank > 2");
    }
  };
  gf::Poly det = quad::pencil_poly(P);
  if (gf::deg(det) < 5) visit(0, true);
  for (auto& f : gf::factor(K, det)) {
    if (n % gf::deg(f.g) != 0) continue;
    for (Elt th : gf::roots(E, gf::pembed(K, E, f.g))) visit(th, false);
  }
  return {pts.begin(), pts.end()};
}

std::vector<types::OrbitSig> measured_signature(const quad::Pair& P) {
  require_regular(P);
  const Field& K = P.field();
  auto seg = quad::segre_symbol(P);
  std::vector<types::OrbitSig> out;
  for (auto& g : seg.groups) {
    types::OrbitSig s;
    s.len = g.deg;
    if (g.corank() >= 2) {
      s.kind = 'c';
    } else {
      s.kind = g.mult() == 1 ? 'a' : 'b';
      const Field& L = gf::field(P.p, P.m * g.deg);
      Elt theta = 0;
      if (!g.root_poly.empty()) theta = gf::roots(L, gf::pembed(K, L, g.root_poly)).at(0);
      Matrix M = quad::member(P, L, theta, g.root_poly.empty());
      s.twisted = !L.is_square(quad::form_discriminant(L, M));
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string signature_string(const std::vector<types::OrbitSig>& sig) {
  std::string s;
  for (auto& o : sig) {
    if (!s.empty()) s += " ";
    s += o.kind;
    s += std::to_string(o.len);
    if (o.twisted) s += "~";
  }
  return s;
}

Report verify(const quad::Pair& P, const types::ArithmeticType& claimed, int nmax) {
  if (claimed.degree != 4) throw std::invalid_argument("pairs of quadrics model degree 4 only");
  if (nmax < 1 || nmax > 6) throw std::invalid_argument("nmax must be in 1..6");
  require_regular(P);
  const auto& gt = types::type_table(4).geo.at(static_cast<size_t>(claimed.geo));
  const auto& W = pic::weyl_group(4);
  Report r;
  r.type = claimed.name();
  r.q = P.field().q;
  r.nmax = nmax;
  r.segre_measured = quad::segre_symbol(P).symbol();
  r.segre_expected = quad::canonical_segre(types::segre_of(gt));
  r.segre_ok = r.segre_measured == r.segre_expected;
  for (int n = 1; n <= nmax; ++n) {
    r.counts_measured.push_back(count_charsum(P, n));
    r.counts_predicted.push_back(static_cast<long long>(zeta::count_sing(claimed, r.q, n)));
    r.sing_measured.push_back(static_cast<int>(singular_points(P, n).size()));
    r.sing_predicted.push_back(zeta::sing_locus_count(claimed, n));
  }
  r.counts_ok = r.counts_measured == r.counts_predicted;
  r.sing_ok = r.sing_measured == r.sing_predicted;
  r.signature_measured = signature_string(measured_signature(P));
  r.signature_expected = signature_string(types::galois_signature(gt, W.elems[claimed.rep]));
  r.signature_ok = r.signature_measured == r.signature_expected;
  return r;
}

}  // namespace wdp::count
