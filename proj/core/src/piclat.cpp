#include "wdp/piclat.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wdp::pic {

using Rat = boost::rational<long long>;

void check_degree(int degree) {
  if (degree < 3 || degree > 6) throw std::invalid_argument("unsupported degree " + std::to_string(degree));
}

int rank_r(int degree) { return 9 - degree; }

int pairing(const Vec& x, const Vec& y) {
  int s = x[0] * y[0];
  for (size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

Vec canonical_class(int degree) {
  Vec k(rank_r(degree) + 1, 1);
  k[0] = -3;
  return k;
}

Vec basis_vector(int degree, int i) {
  Vec v(rank_r(degree) + 1, 0);
  v[i] = 1;
  return v;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec neg(const Vec& x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::vector<Vec> enumerate_box(int degree, int square, int dot_k, int a_bound, int b_bound) {
  check_degree(degree);
  const int r = rank_r(degree);
  const Vec K = canonical_class(degree);
  std::vector<Vec> out;
  Vec v(r + 1, 0);
  // odometer over the box
  std::vector<int> lo(r + 1, -b_bound), hi(r + 1, b_bound);
  lo[0] = -a_bound;
  hi[0] = a_bound;
  for (int i = 0; i <= r; ++i) v[i] = lo[i];
  while (true) {
    if (pairing(v, v) == square && pairing(v, K) == dot_k) out.push_back(v);
    int i = 0;
    while (i <= r && v[i] == hi[i]) {
      v[i] = lo[i];
      ++i;
    }
    if (i > r) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bounds: on K^perp the form is negative definite, so both sets are finite;
// |a| <= 3, |b_i| <= 2 already contains all of them for degree >= 3, and the
// unit tests assert that widening the box adds nothing.
std::vector<Vec> roots(int degree) { return enumerate_box(degree, -2, 0, 3, 2); }
std::vector<Vec> exceptional_classes(int degree) { return enumerate_box(degree, -1, -1, 3, 2); }

std::vector<Vec> simple_roots(int degree) {
  check_degree(degree);
  const int r = rank_r(degree);
  std::vector<Vec> s;
  Vec a0(r + 1, 0);
  a0[0] = 1;
  a0[1] = a0[2] = a0[3] = -1;
  s.push_back(a0);
  for (int i = 1; i < r; ++i) {
    Vec a(r + 1, 0);
    a[i] = 1;
    a[i + 1] = -1;
    s.push_back(a);
  }
  return s;
}

IMat identity(int n) {
  IMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat reflection(const Vec& alpha) {
  if (pairing(alpha, alpha) != -2) throw std::invalid_argument("reflection in a non-root");
  const int n = static_cast<int>(alpha.size());
  // s(x) = x + (x.alpha) alpha, x.alpha = x_0 a_0 - sum x_i a_i
  IMat m = identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) += alpha[i] * (j == 0 ? alpha[0] : -alpha[j]);
  return m;
}

IMat mul(const IMat& x, const IMat& y) {
  IMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int a = x(i, k);
      if (!a) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += a * y(k, j);
    }
  return r;
}

Vec apply(const IMat& m, const Vec& v) {
  Vec r(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r[i] += m(i, j) * v[j];
  return r;
}

bool preserves_form(const IMat& m, int degree) {
  const int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ci(n), cj(n);
      for (int k = 0; k < n; ++k) {
        ci[k] = m(k, i);
        cj[k] = m(k, j);
      }
      int expect = i == j ? (i == 0 ? 1 : -1) : 0;
      if (pairing(ci, cj) != expect) return false;
    }
  return pic::apply(m, canonical_class(degree)) == canonical_class(degree);
}

std::string to_string(const IMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += std::to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

// ---- Weyl group ----

std::uint64_t WeylGroup::key_from_perm(const std::uint8_t* perm) const {
  std::uint64_t k = 0;
  for (int c : key_classes_) k = (k << 5) | perm[c];
  return k;
}

int WeylGroup::exc_index(const Vec& v) const {
  auto it = std::lower_bound(exc.begin(), exc.end(), v);
  return (it != exc.end() && *it == v) ? static_cast<int>(it - exc.begin()) : -1;
}

int WeylGroup::root_index(const Vec& v) const {
  auto it = std::lower_bound(rts.begin(), rts.end(), v);
  return (it != rts.end() && *it == v) ? static_cast<int>(it - rts.begin()) : -1;
}

int WeylGroup::mul(int g, int h) const {
  const std::uint8_t* pg = exc_perm(g);
  const std::uint8_t* ph = exc_perm(h);
  std::uint64_t k = 0;
  for (int c : key_classes_) k = (k << 5) | pg[ph[c]];
  return index_.at(k);
}

int WeylGroup::find(const IMat& m) const {
  if (m.n != n) return -1;
  std::uint64_t k = 0;
  for (int c : key_classes_) {
    int j = exc_index(pic::apply(m, exc[c]));
    if (j < 0) return -1;
    k = (k << 5) | static_cast<std::uint64_t>(j);
  }
  auto it = index_.find(k);
  if (it == index_.end() || elems[it->second] != m) return -1;
  return it->second;
}

void WeylGroup::build(int d) {
  check_degree(d);
  degree = d;
  n = rank_r(d) + 1;
  exc = exceptional_classes(d);
  rts = roots(d);
  // E_1..E_r and E0-E1-E2 are exceptional and span the lattice
  for (int i = 1; i < n; ++i) key_classes_.push_back(exc_index(basis_vector(d, i)));
  Vec l12 = basis_vector(d, 0);
  l12[1] = l12[2] = -1;
  key_classes_.push_back(exc_index(l12));

  std::vector<IMat> gen_mats;
  for (auto& a : simple_roots(d)) gen_mats.push_back(reflection(a));

  auto key_of = [&](const IMat& m) {
    std::uint64_t k = 0;
    for (int c : key_classes_) k = (k << 5) | static_cast<std::uint64_t>(exc_index(pic::apply(m, exc[c])));
    return k;
  };
  std::unordered_map<std::uint64_t, int> seen;
  std::vector<IMat> frontier{identity(n)};
  seen[key_of(frontier[0])] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    for (auto& m : frontier) {
      elems.push_back(m);
      layer.push_back(depth);
    }
    std::vector<IMat> next;
    for (auto& m : frontier)
      for (auto& s : gen_mats) {
        IMat x = pic::mul(s, m);
        auto k = key_of(x);
        if (seen.emplace(k, 0).second) next.push_back(x);
      }
    frontier = std::move(next);
    ++depth;
  }
  const size_t N = elems.size();
  exc_perm_.resize(N * exc.size());
  root_perm_.resize(N * rts.size());
  for (size_t g = 0; g < N; ++g) {
    for (size_t i = 0; i < exc.size(); ++i)
      exc_perm_[g * exc.size() + i] = static_cast<std::uint8_t>(exc_index(pic::apply(elems[g], exc[i])));
    for (size_t i = 0; i < rts.size(); ++i)
      root_perm_[g * rts.size() + i] = static_cast<std::uint8_t>(root_index(pic::apply(elems[g], rts[i])));
    index_[key_from_perm(exc_perm(static_cast<int>(g)))] = static_cast<int>(g);
  }
  inverse_.assign(N, -1);
  std::vector<std::uint8_t> invp(exc.size());
  for (size_t g = 0; g < N; ++g) {
    const std::uint8_t* p = exc_perm(static_cast<int>(g));
    for (size_t i = 0; i < exc.size(); ++i) invp[p[i]] = static_cast<std::uint8_t>(i);
    inverse_[g] = index_.at(key_from_perm(invp.data()));
  }
  for (auto& s : gen_mats) gens.push_back(find(s));
}

const WeylGroup& weyl_group(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return *it->second;
  auto w = std::make_unique<WeylGroup>();
  w->build(degree);
  const WeylGroup& ref = *w;
  cache.emplace(degree, std::move(w));
  return ref;
}

// ---- characteristic polynomials ----

IPoly char_poly(const IMat& m) {
  // Faddeev-LeVerrier; exact over the integers since the divisions are exact
  const int n = m.n;
  IPoly c(n + 1, 0);
  c[n] = 1;
  std::vector<long long> M(static_cast<size_t>(n) * n, 0), AM(static_cast<size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::fill(AM.begin(), AM.end(), 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) AM[i * n + j] += static_cast<long long>(m(i, l)) * M[l * n + j];
    for (int i = 0; i < n; ++i) AM[i * n + i] += c[n - k + 1];
    M = AM;
    long long tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += static_cast<long long>(m(i, l)) * M[l * n + i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {
IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial; returns false if not divisible
bool ipoly_divide(const IPoly& a, const IPoly& b, IPoly& quot) {
  if (a.size() < b.size()) return false;
  IPoly r = a;
  quot.assign(a.size() - b.size() + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    long long c = r[k + b.size() - 1];
    quot[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  for (auto x : r)
    if (x) return false;
  return true;
}
}  // namespace

IPoly cyclotomic(int n) {
  IPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    IPoly q;
    ipoly_divide(f, cyclotomic(d), q);
    f = q;
  }
  return f;
}

Cyclo cyclotomic_factor(IPoly f) {
  Cyclo out;
  for (int n = 1; n <= 30 && f.size() > 1; ++n) {
    IPoly phi = cyclotomic(n), q;
    int mult = 0;
    while (f.size() >= phi.size() && ipoly_divide(f, phi, q)) {
      f = q;
      ++mult;
    }
    if (mult) out.push_back({n, mult});
  }
  if (f.size() != 1 || f[0] != 1) throw std::runtime_error("non-cyclotomic factor in characteristic polynomial");
  return out;
}

IPoly from_cyclo(const Cyclo& c) {
  IPoly f{1};
  for (auto [n, m] : c)
    for (int i = 0; i < m; ++i) f = ipoly_mul(f, cyclotomic(n));
  return f;
}

std::string cyclo_to_string(const Cyclo& c) {
  std::string s;
  for (auto [n, m] : c) {
    s += "Phi" + std::to_string(n);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

Cyclo parse_cyclo(const std::string& s) {
  Cyclo out;
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 3, "Phi") != 0) throw std::invalid_argument("bad cyclotomic string: " + s);
    i += 3;
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    int n = std::stoi(s.substr(i, j - i));
    int m = 1;
    i = j;
    if (i < s.size() && s[i] == '^') {
      ++i;
      j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      m = std::stoi(s.substr(i, j - i));
      i = j;
    }
    out.push_back({n, m});
  }
  std::map<int, int> acc;
  for (auto [n, m] : out) acc[n] += m;
  return Cyclo(acc.begin(), acc.end());
}

Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) {
  std::map<int, int> acc;
  for (auto [n, m] : a) acc[n] += m;
  for (auto [n, m] : b) acc[n] += m;
  return Cyclo(acc.begin(), acc.end());
}

int cyclo_degree(const Cyclo& c) {
  int d = 0;
  for (auto [n, m] : c) d += m * (static_cast<int>(cyclotomic(n).size()) - 1);
  return d;
}

// ---- integer lattices ----

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> diag;
  int t = 0;
  while (t < R && t < C) {
    // pivot: nonzero entry of least absolute value in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (a[i][j] && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < R; ++i) {
        long long f = a[i][t] / a[t][t];
        if (f)
          for (int j = t; j < C; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t]) {
          clean = false;
          std::swap(a[t], a[i]);
        }
      }
      for (int j = t + 1; j < C; ++j) {
        long long f = a[t][j] / a[t][t];
        if (f)
          for (int i = t; i < R; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j]) {
          clean = false;
          for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
        }
      }
      if (clean) {
        // enforce divisibility of the rest by the pivot
        for (int i = t + 1; i < R && clean; ++i)
          for (int j = t + 1; j < C; ++j)
            if (a[i][j] % a[t][t]) {
              for (int k = t; k < C; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

namespace {
// Solve x = sum c_j b_j over Q; returns false if x is outside the span.
bool rational_coords(const std::vector<Vec>& basis, const Vec& x, std::vector<Rat>& coords) {
  const int n = static_cast<int>(x.size());
  const int k = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) M[i][j] = basis[j][i];
    M[i][k] = x[i];
  }
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (M[i][col] != Rat(0)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[row]);
    Rat inv = Rat(1) / M[row][col];
    for (auto& e : M[row]) e *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || M[i][col] == Rat(0)) continue;
      Rat f = M[i][col];
      for (int j = 0; j <= k; ++j) M[i][j] -= f * M[row][j];
    }
    piv.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (M[i][k] != Rat(0)) return false;
  coords.assign(k, Rat(0));
  for (int r = 0; r < row; ++r) coords[piv[r]] = M[r][k];
  return true;
}
}  // namespace

std::vector<long long> quotient_torsion(const std::vector<Vec>& sub, const std::vector<Vec>& ambient) {
  std::vector<std::vector<long long>> m;
  for (auto& v : sub) {
    std::vector<Rat> c;
    if (!rational_coords(ambient, v, c)) throw std::invalid_argument("sublattice not contained in ambient span");
    std::vector<long long> row;
    for (auto& x : c) {
      if (x.denominator() != 1) throw std::invalid_argument("sublattice not contained in ambient lattice");
      row.push_back(x.numerator());
    }
    m.push_back(row);
  }
  std::vector<long long> out;
  if (m.empty()) return out;
  for (auto d : smith_diagonal(m))
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<Vec> orthogonal_complement(int degree, const std::vector<Vec>& vs) {
  const int n = rank_r(degree) + 1;
  // rows G v; integer kernel by unimodular column operations
  const int k = static_cast<int>(vs.size());
  std::vector<std::vector<long long>> A(k, std::vector<long long>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = j == 0 ? vs[i][0] : -vs[i][j];
  std::vector<std::vector<long long>> U(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;
  auto colop = [&](int dst, int src, long long f) {  // col dst -= f col src
    for (int i = 0; i < k; ++i) A[i][dst] -= f * A[i][src];
    for (int i = 0; i < n; ++i) U[i][dst] -= f * U[i][src];
  };
  auto colswap = [&](int x, int y) {
    for (int i = 0; i < k; ++i) std::swap(A[i][x], A[i][y]);
    for (int i = 0; i < n; ++i) std::swap(U[i][x], U[i][y]);
  };
  int pc = 0;
  for (int r = 0; r < k && pc < n; ++r) {
    while (true) {
      int best = -1;
      for (int j = pc; j < n; ++j)
        if (A[r][j] && (best < 0 || std::llabs(A[r][j]) < std::llabs(A[r][best]))) best = j;
      if (best < 0) break;
      colswap(pc, best);
      bool done = true;
      for (int j = pc + 1; j < n; ++j)
        if (A[r][j]) {
          colop(j, pc, A[r][j] / A[r][pc]);
          if (A[r][j]) done = false;
        }
      if (done) {
        ++pc;
        break;
      }
    }
  }
  std::vector<Vec> out;
  for (int j = pc; j < n; ++j) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<int>(U[i][j]);
    out.push_back(v);
  }
  return out;
}

IPoly restricted_char_poly(const IMat& m, const std::vector<Vec>& basis) {
  const int k = static_cast<int>(basis.size());
  if (k == 0) return IPoly{1};
  std::vector<std::vector<Rat>> X(k, std::vector<Rat>(k));
  for (int j = 0; j < k; ++j) {
    std::vector<Rat> c;
    if (!rational_coords(basis, apply(m, basis[j]), c)) throw std::invalid_argument("subspace is not stable");
    for (int i = 0; i < k; ++i) X[i][j] = c[i];
  }
  // Faddeev-LeVerrier over Q
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = 1;
  std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, Rat(0)));
  for (int s = 1; s <= k; ++s) {
    std::vector<std::vector<Rat>> AM(k, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l)
        for (int j = 0; j < k; ++j) AM[i][j] += X[i][l] * M[l][j];
    for (int i = 0; i < k; ++i) AM[i][i] += c[k - s + 1];
    M = AM;
    Rat tr = 0;
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) tr += X[i][l] * M[l][i];
    c[k - s] = -tr / Rat(s);
  }
  IPoly out(k + 1);
  for (int i = 0; i <= k; ++i) {
    if (c[i].denominator() != 1) throw std::runtime_error("non-integral characteristic polynomial");
    out[i] = c[i].numerator();
  }
  return out;
}

}  // namespace wdp::pic
