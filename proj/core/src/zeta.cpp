#include "wdp/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdp::zeta {

namespace {

const types::GeometricType& geo_of(const types::ArithmeticType& at) {
  return types::type_table(at.degree).geo.at(static_cast<size_t>(at.geo));
}

const pic::IMat& matrix_of(const types::ArithmeticType& at) { return pic::weyl_group(at.degree).elems[at.rep]; }

Int ipow(long long q, int n) {
  Int r = 1;
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

}  // namespace

std::vector<int> trace_pic(const types::ArithmeticType& at, int nmax) {
  const pic::IMat& w = matrix_of(at);
  std::vector<int> out;
  pic::IMat x = w;
  for (int n = 1; n <= nmax; ++n) {
    int tr = 0;
    for (int i = 0; i < x.n; ++i) tr += x(i, i);
    out.push_back(tr);
    x = pic::mul(x, w);
  }
  return out;
}

std::vector<int> trace_root(const types::ArithmeticType& at, int nmax) {
  const auto& W = pic::weyl_group(at.degree);
  const auto& gt = geo_of(at);
  std::vector<int> out;
  int x = at.rep;
  for (int n = 1; n <= nmax; ++n) {
    const std::uint8_t* rp = W.root_perm(x);
    int fixed = 0;
    for (int b : gt.basis) fixed += rp[b] == b;
    out.push_back(fixed);
    x = W.mul(x, at.rep);
  }
  return out;
}

Int count_weak(const types::ArithmeticType& at, long long q, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Int qn = ipow(q, n);
  return qn * qn + qn * trace_pic(at, n).back() + 1;
}

Int count_sing(const types::ArithmeticType& at, long long q, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Int qn = ipow(q, n);
  return qn * qn + qn * (trace_pic(at, n).back() - trace_root(at, n).back()) + 1;
}

std::vector<Int> zeta_denominator(const types::ArithmeticType& at, long long q) {
  pic::IPoly c = pic::from_cyclo(at.chi_pic_s);
  const int k = static_cast<int>(c.size()) - 1;
  // det(1 - qT w) = sum_j c_{k-j} q^j T^j
  std::vector<Int> d(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) d[j] = Int(c[k - j]) * ipow(q, j);
  std::vector<Int> f{1, -1};
  std::vector<Int> g{1, -Int(q) * q};
  auto mul = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  return mul(mul(f, g), d);
}

std::vector<Int> counts_from_denominator(const std::vector<Int>& den, int nmax) {
  if (den.empty() || den[0] != 1) throw std::invalid_argument("denominator must have constant term 1");
  // Z = 1/D, so T Z'/Z = -T D'/D = sum_n N_n T^n; Newton's identities on D.
  std::vector<Int> N(static_cast<size_t>(nmax) + 1);
  for (int n = 1; n <= nmax; ++n) {
    Int s = n < static_cast<int>(den.size()) ? Int(-n) * den[n] : Int(0);
    for (int i = 1; i < n; ++i)
      if (n - i < static_cast<int>(den.size())) s -= den[n - i] * N[i];
    N[n] = s;
  }
  return {N.begin() + 1, N.end()};
}

int sing_locus_count(const types::ArithmeticType& at, int n) {
  const auto& W = pic::weyl_group(at.degree);
  const auto& gt = geo_of(at);
  int x = 0;
  for (int i = 0; i < n; ++i) x = W.mul(x, at.rep);
  const std::uint8_t* rp = W.root_perm(x);
  int count = 0;
  for (auto& comp : gt.components) {
    bool stable = true;
    for (int pos : comp) {
      int img = rp[gt.basis[pos]];
      bool inside = false;
      for (int other : comp) inside = inside || gt.basis[other] == img;
      stable = stable && inside;
    }
    count += stable;
  }
  return count;
}

}  // namespace wdp::zeta
