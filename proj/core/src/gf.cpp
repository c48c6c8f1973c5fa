#include "wdp/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wdp::gf {

namespace {

// digit-vector arithmetic over F_p used only while building tables
using Digits = std::vector<int>;

Digits dmulmod(const Digits& a, const Digits& b, const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<long long> r(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m; ++j) r[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  for (auto& x : r) x %= p;
  for (int k = 2 * m - 2; k >= m; --k) {
    long long c = r[k];
    if (!c) continue;
    r[k] = 0;
    for (int j = 0; j < m; ++j) r[k - m + j] = ((r[k - m + j] - c * mod[j]) % p + p) % p;
  }
  Digits out(m);
  for (int i = 0; i < m; ++i) out[i] = static_cast<int>(r[i]);
  return out;
}

Digits dpow(Digits a, unsigned long long e, const std::vector<int>& mod, int p) {
  Digits r(mod.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = dmulmod(r, a, mod, p);
    a = dmulmod(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::map<std::pair<int, int>, std::unique_ptr<Field>>& registry() {
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> r;
  return r;
}

// lexicographically least monic irreducible of degree m over F_p, ordering
// by the code of (c_0..c_{m-1}), i.e. c_{m-1} most significant
std::vector<int> least_irreducible(int p, int m) {
  const Field& Fp = field(p, 1);
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    Poly f(m + 1);
    long long c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<Elt>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible(Fp, f)) {
      std::vector<int> out(f.begin(), f.end());
      return out;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Field::build() {
  const unsigned long long order = q - 1;
  exp_.assign(2 * static_cast<size_t>(order) + 2, 0);
  log_.assign(q, -1);
  if (q == 2) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    log_[1] = 0;
    zech_.assign(1, -1);
    neg_one_log_ = 0;
    return;
  }
  auto divs = prime_divisors(order);
  Digits gen;
  for (Elt cand = 2; cand < q; ++cand) {
    Digits d = digits(cand);
    bool ok = true;
    for (auto l : divs) {
      Digits t = dpow(d, order / l, modulus, p);
      bool is_one = t[0] == 1;
      for (int i = 1; i < m && is_one; ++i) is_one = t[i] == 0;
      if (is_one) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = d;
      break;
    }
  }
  if (m == 1 && gen.empty()) gen = Digits{1};  // unreachable for q > 2
  Digits cur(m, 0);
  cur[0] = 1;
  for (unsigned long long k = 0; k < order; ++k) {
    Elt c = from_digits(cur);
    exp_[k] = c;
    exp_[k + order] = c;
    log_[c] = static_cast<int>(k);
    cur = dmulmod(cur, gen, modulus, p);
  }
  exp_[2 * order] = exp_[0];
  zech_.assign(order, -1);
  for (unsigned long long k = 0; k < order; ++k) {
    Elt e = exp_[k];
    Elt s = (e % p == static_cast<Elt>(p - 1)) ? e - (p - 1) : e + 1;
    zech_[k] = s == 0 ? -1 : log_[s];
  }
  neg_one_log_ = p == 2 ? 0 : static_cast<int>(order / 2);
}

Elt Field::from_int(long long v) const {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elt>(r);
}

Elt Field::add(Elt a, Elt b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const int order = static_cast<int>(q - 1);
  int la = log_[a], lb = log_[b];
  int k = lb - la;
  if (k < 0) k += order;
  int z = zech_[k];
  if (z < 0) return 0;
  return exp_[la + z];
}

Elt Field::neg(Elt a) const {
  if (a == 0 || p == 2) return a;
  return exp_[log_[a] + neg_one_log_];
}

Elt Field::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  int l = log_[a];
  return exp_[l == 0 ? 0 : (q - 1) - l];
}

Elt Field::pow(Elt a, unsigned long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  unsigned long long l = static_cast<unsigned long long>(log_[a]) * (e % (q - 1)) % (q - 1);
  return exp_[l];
}

bool Field::is_square(Elt a) const {
  if (p == 2) throw std::domain_error("is_square in characteristic 2");
  if (a == 0) throw std::domain_error("is_square of zero");
  return log_[a] % 2 == 0;
}

int Field::chi(Elt a) const {
  if (a == 0) return 0;
  return is_square(a) ? 1 : -1;
}

Elt Field::sqrt(Elt a) const {
  if (a == 0) return 0;
  if (p == 2) return pow(a, q / 2);
  if (log_[a] % 2) throw std::domain_error("sqrt of a non-square");
  return exp_[log_[a] / 2];
}

std::vector<int> Field::digits(Elt a) const {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

Elt Field::from_digits(const std::vector<int>& d) const {
  Elt c = 0;
  for (int i = m - 1; i >= 0; --i) c = c * p + static_cast<Elt>(((d[i] % p) + p) % p);
  return c;
}

std::string Field::to_string(Elt a) const {
  auto d = digits(a);
  std::string s = "[";
  for (int i = 0; i < m; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

Elt Field::parse(const std::string& s) const {
  std::vector<int> d;
  std::string cur;
  for (char ch : s) {
    if (ch == '-' || (ch >= '0' && ch <= '9')) {
      cur += ch;
    } else if (!cur.empty()) {
      d.push_back(std::stoi(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) d.push_back(std::stoi(cur));
  if (static_cast<int>(d.size()) > m) throw std::invalid_argument("element has too many coefficients: " + s);
  d.resize(m, 0);
  return from_digits(d);
}

const Field& field(int p, int m) {
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  auto& reg = registry();
  auto key = std::make_pair(p, m);
  auto it = reg.find(key);
  if (it != reg.end()) return *it->second;
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1LL << 20)) throw std::invalid_argument("field too large for table arithmetic");
  }
  auto F = std::make_unique<Field>();
  F->p = p;
  F->m = m;
  F->q = static_cast<Elt>(q);
  if (m == 1) {
    F->modulus = {0, 1};
  } else {
    F->modulus = least_irreducible(p, m);
  }
  F->build();
  const Field& ref = *F;
  reg.emplace(key, std::move(F));
  return ref;
}

std::pair<int, int> parse_q(const std::string& s) {
  auto caret = s.find('^');
  long long p, m = 1;
  try {
    if (caret != std::string::npos) {
      p = std::stoll(s.substr(0, caret));
      m = std::stoll(s.substr(caret + 1));
      if (!is_prime(p) || m < 1) throw std::invalid_argument("");
    } else {
      long long q = std::stoll(s);
      if (q < 2) throw std::invalid_argument("");
      p = 0;
      for (long long d = 2; d <= q; ++d)
        if (q % d == 0) {
          p = d;
          break;
        }
      m = 0;
      while (q % p == 0) {
        q /= p;
        ++m;
      }
      if (q != 1) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("not a prime power: " + s);
  }
  return {static_cast<int>(p), static_cast<int>(m)};
}

namespace {
Elt embed_generator(const Field& sub, const Field& sup) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Elt> cache;
  auto key = std::make_tuple(sub.p, sub.m, sup.m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poly f(sub.modulus.begin(), sub.modulus.end());
  Elt best = 0;
  bool found = false;
  if (sub.m == 1) {
    best = sup.from_int(-sub.modulus[0]);
    found = true;
  } else {
    auto rs = roots(sup, f);
    if (!rs.empty()) {
      best = rs.front();
      found = true;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in the extension");
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = best;
  return best;
}
}  // namespace

Elt embed(const Field& sub, const Field& sup, Elt a) {
  if (sub.p != sup.p || sup.m % sub.m != 0) throw std::invalid_argument("incompatible fields for embedding");
  if (sub.m == sup.m) return a;
  Elt g = embed_generator(sub, sup);
  auto d = sub.digits(a);
  Elt r = 0, pw = 1;
  for (int i = 0; i < sub.m; ++i) {
    r = sup.add(r, sup.mul(sup.from_int(d[i]), pw));
    pw = sup.mul(pw, g);
  }
  return r;
}

Elt restrict_to(const Field& sub, const Field& sup, Elt a) {
  if (sub.m == sup.m) return a;
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::map<Elt, Elt>> cache;
  auto key = std::make_tuple(sub.p, sub.m, sup.m);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::map<Elt, Elt> back;
    for (Elt c = 0; c < sub.q; ++c) back[embed(sub, sup, c)] = c;
    it = cache.emplace(key, std::move(back)).first;
  }
  auto jt = it->second.find(a);
  if (jt == it->second.end()) throw std::invalid_argument("element not in subfield");
  return jt->second;
}

// ---- polynomials ----

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly pconst(Elt c) { return c ? Poly{c} : Poly{}; }

Poly linear(const Field& F, Elt root) { return Poly{F.neg(root), 1}; }

Poly padd(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(r);
}

Poly psub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(r);
}

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return trim(r);
}

Poly pscale(const Field& F, const Poly& a, Elt c) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return trim(r);
}

std::pair<Poly, Poly> pdivmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  Poly r = trim(a);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly qt(r.size() - b.size() + 1, 0);
  Elt lc_inv = F.inv(b.back());
  for (int k = deg(r) - deg(b); k >= 0; --k) {
    Elt c = F.mul(r[k + deg(b)], lc_inv);
    qt[k] = c;
    if (!c) continue;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  return {trim(qt), trim(r)};
}

Poly pmod(const Field& F, const Poly& a, const Poly& b) { return pdivmod(F, a, b).second; }

Poly pmonic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return pscale(F, a, F.inv(a.back()));
}

Poly pgcd(const Field& F, Poly a, Poly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

Poly pderiv(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<long long>(i)));
  return trim(r);
}

Poly ppowmod(const Field& F, Poly a, unsigned long long e, const Poly& mod) {
  Poly r = pmod(F, Poly{1}, mod);
  a = pmod(F, a, mod);
  while (e) {
    if (e & 1) r = pmod(F, pmul(F, r, a), mod);
    e >>= 1;
    if (e) a = pmod(F, pmul(F, a, a), mod);
  }
  return r;
}

Elt peval(const Field& F, const Poly& a, Elt x) {
  Elt r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Poly pembed(const Field& sub, const Field& sup, const Poly& a) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = embed(sub, sup, a[i]);
  return r;
}

std::string poly_to_string(const Field& F, const Poly& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += F.to_string(a[i]);
  }
  return s + "]";
}

namespace {

// a^q mod f
Poly frob_mod(const Field& F, const Poly& a, const Poly& f) { return ppowmod(F, a, F.q, f); }

Poly pth_root(const Field& F, const Poly& c) {
  Poly r(c.size() / F.p + 1, 0);
  unsigned long long e = 1;
  for (int i = 1; i < F.m; ++i) e *= F.p;  // x -> x^{p^{m-1}} inverts Frobenius
  for (size_t k = 0; k < c.size(); k += F.p) r[k / F.p] = F.pow(c[k], e);
  return trim(r);
}

void squarefree(const Field& F, const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (deg(f) < 1) return;
  Poly c = pgcd(F, f, pderiv(F, f));
  Poly w = pdivmod(F, f, c).first;
  int i = 1;
  while (deg(w) > 0) {
    Poly y = pgcd(F, w, c);
    Poly z = pdivmod(F, w, y).first;
    if (deg(z) > 0) out.push_back({pmonic(F, z), i * mult});
    ++i;
    w = y;
    c = pdivmod(F, c, y).first;
  }
  if (deg(c) > 0) squarefree(F, pth_root(F, pmonic(F, c)), mult * F.p, out);
}

void equal_degree(const Field& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(pmonic(F, f));
    return;
  }
  const int n = deg(f);
  while (true) {
    Poly a(n);
    for (int i = 0; i < n; ++i) a[i] = static_cast<Elt>(rng() % F.q);
    a = trim(a);
    if (deg(a) < 1) continue;
    Poly g;
    if (F.p == 2) {
      // absolute trace over F_2 of the degree-d extension
      Poly t = a, s = a;
      for (int i = 1; i < F.m * d; ++i) {
        t = pmod(F, pmul(F, t, t), f);
        s = padd(F, s, t);
      }
      g = pgcd(F, s, f);
    } else {
      Poly s = pmod(F, a, f), t = s;
      for (int i = 1; i < d; ++i) {
        t = frob_mod(F, t, f);
        s = pmod(F, pmul(F, s, t), f);
      }
      Poly h = ppowmod(F, s, (F.q - 1) / 2, f);
      h = psub(F, h, Poly{1});
      g = pgcd(F, h, f);
    }
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, pdivmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<Factor> factor(const Field& F, const Poly& f0, std::uint64_t seed) {
  Poly f = trim(f0);
  if (f.empty()) throw std::invalid_argument("factor of zero polynomial");
  std::vector<Factor> res;
  if (deg(f) == 0) return res;
  std::vector<std::pair<Poly, int>> parts;
  squarefree(F, pmonic(F, f), 1, parts);
  std::mt19937_64 rng(seed);
  for (auto& [g0, mult] : parts) {
    Poly g = g0;
    Poly x = Poly{0, 1};
    Poly h = pmod(F, x, g);
    for (int d = 1; deg(g) >= 2 * d; ++d) {
      h = frob_mod(F, h, g);
      Poly dd = pgcd(F, psub(F, h, x), g);
      if (deg(dd) > 0) {
        std::vector<Poly> pieces;
        equal_degree(F, dd, d, rng, pieces);
        for (auto& pc : pieces) res.push_back({pc, mult});
        g = pdivmod(F, g, dd).first;
        h = pmod(F, h, g);
      }
    }
    if (deg(g) > 0) res.push_back({pmonic(F, g), mult});
  }
  std::sort(res.begin(), res.end(), [](const Factor& a, const Factor& b) {
    if (poly_less(a.g, b.g)) return true;
    if (poly_less(b.g, a.g)) return false;
    return a.mult < b.mult;
  });
  // merge duplicates (possible across squarefree layers only in degenerate input)
  std::vector<Factor> merged;
  for (auto& fc : res) {
    if (!merged.empty() && merged.back().g == fc.g)
      merged.back().mult += fc.mult;
    else
      merged.push_back(fc);
  }
  return merged;
}

bool is_irreducible(const Field& F, const Poly& f0) {
  Poly f = pmonic(F, trim(f0));
  int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  Poly x = Poly{0, 1};
  std::vector<Poly> powers(n + 1);  // x^{q^k} mod f
  powers[0] = pmod(F, x, f);
  for (int k = 1; k <= n; ++k) powers[k] = frob_mod(F, powers[k - 1], f);
  if (psub(F, powers[n], powers[0]) != Poly{}) return false;
  for (auto l : prime_divisors(static_cast<unsigned long long>(n))) {
    Poly g = pgcd(F, psub(F, powers[n / l], x), f);
    if (deg(g) != 0) return false;
  }
  return true;
}

std::vector<Elt> roots(const Field& F, const Poly& f) {
  std::vector<Elt> out;
  if (trim(f).empty()) throw std::invalid_argument("roots of zero polynomial");
  for (auto& fc : factor(F, f))
    if (deg(fc.g) == 1) out.push_back(F.neg(fc.g[0]));
  std::sort(out.begin(), out.end());
  return out;
}

Elt norm(const Field& F, const Poly& f0, const Poly& d) {
  Poly f = trim(f0);
  if (deg(f) < 1) throw std::invalid_argument("norm modulo a constant");
  if (f.back() != 1) throw std::invalid_argument("norm modulus must be monic");
  const int n = deg(f);
  Matrix M(n, n);
  Poly cur = pmod(F, d, f);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) M(i, j) = i < static_cast<int>(cur.size()) ? cur[i] : 0;
    cur = pmod(F, pmul(F, cur, Poly{0, 1}), f);
  }
  return det(F, M);
}

// ---- matrices ----

Matrix identity(int n) {
  Matrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Matrix mmul(const Field& F, const Matrix& x, const Matrix& y) {
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Elt a = x(i, k);
      if (!a) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) = F.add(r(i, j), F.mul(a, y(k, j)));
    }
  return r;
}

Matrix madd(const Field& F, const Matrix& x, const Matrix& y) {
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

Matrix mscale(const Field& F, const Matrix& x, Elt c) {
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.mul(x.a[i], c);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

Matrix membed(const Field& sub, const Field& sup, const Matrix& x) {
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = embed(sub, sup, x.a[i]);
  return r;
}

namespace {
// in-place row reduction; returns pivot columns
std::vector<int> rref(const Field& F, Matrix& x) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < x.cols && row < x.rows; ++col) {
    int sel = -1;
    for (int i = row; i < x.rows; ++i)
      if (x(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < x.cols; ++j) std::swap(x(sel, j), x(row, j));
    Elt inv = F.inv(x(row, col));
    for (int j = 0; j < x.cols; ++j) x(row, j) = F.mul(x(row, j), inv);
    for (int i = 0; i < x.rows; ++i) {
      if (i == row || !x(i, col)) continue;
      Elt c = x(i, col);
      for (int j = 0; j < x.cols; ++j) x(i, j) = F.sub(x(i, j), F.mul(c, x(row, j)));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}
}  // namespace

int rank(const Field& F, Matrix x) { return static_cast<int>(rref(F, x).size()); }

Elt det(const Field& F, Matrix x) {
  if (x.rows != x.cols) throw std::invalid_argument("det of non-square matrix");
  const int n = x.rows;
  Elt d = 1;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (x(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(x(sel, j), x(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, x(col, col));
    Elt inv = F.inv(x(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (!x(i, col)) continue;
      Elt c = F.mul(x(i, col), inv);
      for (int j = col; j < n; ++j) x(i, j) = F.sub(x(i, j), F.mul(c, x(col, j)));
    }
  }
  return d;
}

bool invert(const Field& F, const Matrix& x, Matrix& out) {
  const int n = x.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = x(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(F, aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return false;
  out = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return true;
}

std::vector<std::vector<Elt>> kernel(const Field& F, const Matrix& x0) {
  Matrix x = x0;
  auto piv = rref(F, x);
  std::vector<bool> is_piv(x.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Elt>> basis;
  for (int f = 0; f < x.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Elt> v(x.cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(x(static_cast<int>(r), f));
    basis.push_back(v);
  }
  return basis;
}

Elt qform(const Field& F, const Matrix& x, const std::vector<Elt>& v) {
  Elt s = 0;
  for (int i = 0; i < x.rows; ++i) {
    if (!v[i]) continue;
    Elt row = 0;
    for (int j = 0; j < x.cols; ++j)
      if (v[j]) row = F.add(row, F.mul(x(i, j), v[j]));
    s = F.add(s, F.mul(v[i], row));
  }
  return s;
}

std::vector<Elt> diagonalize(const Field& F, Matrix x) {
  if (F.p == 2) throw std::domain_error("diagonalization in characteristic 2");
  const int n = x.rows;
  std::vector<Elt> diag;
  for (int k = 0; k < n; ++k) {
    int sel = -1;
    for (int i = k; i < n; ++i)
      if (x(i, i)) {
        sel = i;
        break;
      }
    if (sel < 0) {
      // all diagonal entries vanish: use x_i -> x_i + x_j for some nonzero x(i,j)
      int si = -1, sj = -1;
      for (int i = k; i < n && si < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (x(i, j)) {
            si = i;
            sj = j;
            break;
          }
      if (si < 0) break;  // the remaining block is zero
      for (int c = 0; c < n; ++c) x(si, c) = F.add(x(si, c), x(sj, c));
      for (int r = 0; r < n; ++r) x(r, si) = F.add(x(r, si), x(r, sj));
      sel = si;
    }
    if (sel != k) {
      for (int c = 0; c < n; ++c) std::swap(x(sel, c), x(k, c));
      for (int r = 0; r < n; ++r) std::swap(x(r, sel), x(r, k));
    }
    Elt pivot = x(k, k);
    Elt inv = F.inv(pivot);
    for (int i = k + 1; i < n; ++i) {
      if (!x(i, k)) continue;
      Elt c = F.mul(x(i, k), inv);
      for (int j = k; j < n; ++j) x(i, j) = F.sub(x(i, j), F.mul(c, x(k, j)));
      for (int r = k; r < n; ++r) x(r, i) = F.sub(x(r, i), F.mul(c, x(r, k)));
    }
    diag.push_back(pivot);
  }
  return diag;
}

}  // namespace wdp::gf
