#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wdp::pic {

// Coordinates (a, b_1, ..., b_r) in the basis E_0, E_1, ..., E_r, r = 9 - degree.
using Vec = std::vector<int>;
using IPoly = std::vector<long long>;            // integer polynomial, little-endian
using Cyclo = std::vector<std::pair<int, int>>;  // (n, multiplicity) of Phi_n, n ascending

struct IMat {
  int n = 0;
  std::vector<int> a;  // row-major
  IMat() = default;
  explicit IMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  int& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const IMat&) const = default;
  auto operator<=>(const IMat&) const = default;
};

void check_degree(int degree);
int rank_r(int degree);  // r = 9 - degree
int pairing(const Vec& x, const Vec& y);
Vec canonical_class(int degree);
Vec basis_vector(int degree, int i);  // E_i
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec neg(const Vec& x);
std::string to_string(const Vec& v);

std::vector<Vec> roots(int degree);                // sorted
std::vector<Vec> exceptional_classes(int degree);  // sorted
// all vectors with given square and degree against K inside a coefficient box
std::vector<Vec> enumerate_box(int degree, int square, int dot_k, int a_bound, int b_bound);
// simple roots E0-E1-E2-E3, E1-E2, ..., E_{r-1}-E_r
std::vector<Vec> simple_roots(int degree);

IMat identity(int n);
IMat reflection(const Vec& alpha);
IMat mul(const IMat& x, const IMat& y);
Vec apply(const IMat& m, const Vec& v);
bool preserves_form(const IMat& m, int degree);
std::string to_string(const IMat& m);

class WeylGroup {
 public:
  int degree = 0;
  int n = 0;
  std::vector<IMat> elems;  // BFS layer, then lexicographic
  std::vector<int> layer;   // word length of each element
  std::vector<Vec> exc;     // exceptional classes, sorted
  std::vector<Vec> rts;     // roots, sorted
  std::vector<int> gens;    // indices of the simple reflections

  int size() const { return static_cast<int>(elems.size()); }
  const std::uint8_t* exc_perm(int g) const { return &exc_perm_[static_cast<size_t>(g) * exc.size()]; }
  const std::uint8_t* root_perm(int g) const { return &root_perm_[static_cast<size_t>(g) * rts.size()]; }
  int mul(int g, int h) const;  // index of g*h (apply h first)
  int inv(int g) const { return inverse_[g]; }
  int find(const IMat& m) const;  // -1 if absent
  int exc_index(const Vec& v) const;
  int root_index(const Vec& v) const;

 private:
  friend const WeylGroup& weyl_group(int);
  void build(int degree);
  std::uint64_t key_from_perm(const std::uint8_t* perm) const;
  std::vector<std::uint8_t> exc_perm_, root_perm_;
  std::vector<int> key_classes_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> inverse_;
};

const WeylGroup& weyl_group(int degree);

IPoly char_poly(const IMat& m);
IPoly cyclotomic(int n);
Cyclo cyclotomic_factor(IPoly f);
IPoly from_cyclo(const Cyclo& c);
std::string cyclo_to_string(const Cyclo& c);  // e.g. "Phi1^4Phi2"
Cyclo parse_cyclo(const std::string& s);
Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b);
int cyclo_degree(const Cyclo& c);

// Smith normal form diagonal of an integer matrix (rows x cols).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);
// Torsion invariants (> 1) of span(ambient) / span(sub); sub must lie in the
// rational span of ambient with integral coordinates.
std::vector<long long> quotient_torsion(const std::vector<Vec>& sub, const std::vector<Vec>& ambient);
// Integral basis of {x : x.v = 0 for all v in vs} (saturated).
std::vector<Vec> orthogonal_complement(int degree, const std::vector<Vec>& vs);
// Characteristic polynomial of m restricted to the m-stable span of basis.
IPoly restricted_char_poly(const IMat& m, const std::vector<Vec>& basis);

}  // namespace wdp::pic
