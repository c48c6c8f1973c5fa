#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wdp::gf {

// Elements are integer codes: code = c_0 + c_1 p + ... + c_{m-1} p^{m-1},
// the little-endian coefficient vector over F_p in the basis 1, g, ..., g^{m-1}
// where g is the class of T modulo the defining polynomial.
using Elt = std::uint32_t;
using Poly = std::vector<Elt>;  // little-endian, trimmed; empty means zero

class Field {
 public:
  int p = 0;
  int m = 0;
  Elt q = 0;
  std::vector<int> modulus;  // over F_p, little-endian, monic, length m+1

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(long long v) const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, unsigned long long e) const;
  Elt frobenius(Elt a) const { return pow(a, static_cast<unsigned long long>(p)); }

  // odd characteristic only; a != 0
  bool is_square(Elt a) const;
  // the quadratic character: 0, 1 or -1
  int chi(Elt a) const;
  Elt sqrt(Elt a) const;  // some square root of a square

  std::vector<int> digits(Elt a) const;
  Elt from_digits(const std::vector<int>& d) const;
  std::string to_string(Elt a) const;  // "[c0,c1,...]"
  Elt parse(const std::string& s) const;

  Elt generator() const { return exp_[1]; }  // a primitive element
  int log(Elt a) const { return log_[a]; }

 private:
  friend const Field& field(int, int);
  void build();
  std::vector<Elt> exp_;
  std::vector<int> log_;
  std::vector<int> zech_;  // zech_[k] = log(1 + g^k), -1 when that sum is 0
  int neg_one_log_ = 0;
};

// The field F_{p^m}; built once and cached. Throws on bad input.
const Field& field(int p, int m);
// Parse "p^m" or an integer prime power.
std::pair<int, int> parse_q(const std::string& s);
bool is_prime(long long n);

// Embedding of sub into sup (sub.m divides sup.m, same p). The image of the
// class of T is the root of sub.modulus in sup with least code.
Elt embed(const Field& sub, const Field& sup, Elt a);
// Inverse of embed on its image; throws if a is not in the image.
Elt restrict_to(const Field& sub, const Field& sup, Elt a);

// polynomials over a field
Poly trim(Poly f);
int deg(const Poly& f);
Poly padd(const Field& F, const Poly& a, const Poly& b);
Poly psub(const Field& F, const Poly& a, const Poly& b);
Poly pmul(const Field& F, const Poly& a, const Poly& b);
Poly pscale(const Field& F, const Poly& a, Elt c);
std::pair<Poly, Poly> pdivmod(const Field& F, const Poly& a, const Poly& b);
Poly pmod(const Field& F, const Poly& a, const Poly& b);
Poly pgcd(const Field& F, Poly a, Poly b);  // monic
Poly pmonic(const Field& F, const Poly& a);
Poly pderiv(const Field& F, const Poly& a);
Poly ppowmod(const Field& F, Poly a, unsigned long long e, const Poly& mod);
Elt peval(const Field& F, const Poly& a, Elt x);
Poly pembed(const Field& sub, const Field& sup, const Poly& a);
Poly linear(const Field& F, Elt root);  // T - root
Poly pconst(Elt c);
std::string poly_to_string(const Field& F, const Poly& a);

struct Factor {
  Poly g;
  int mult;
  bool operator==(const Factor&) const = default;
};
// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
// Equal-degree splitting uses a PRNG seeded with `seed`.
std::vector<Factor> factor(const Field& F, const Poly& f, std::uint64_t seed = 0x5eed);
bool is_irreducible(const Field& F, const Poly& f);
// all roots of f lying in F, sorted by code, without multiplicity
std::vector<Elt> roots(const Field& F, const Poly& f);
// Norm of d in F[T]/(f): determinant of multiplication by d.
Elt norm(const Field& F, const Poly& f, const Poly& d);

// dense matrices over a field
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Elt> a;
  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  Elt& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Elt operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const Matrix&) const = default;
};
Matrix identity(int n);
Matrix mmul(const Field& F, const Matrix& x, const Matrix& y);
Matrix madd(const Field& F, const Matrix& x, const Matrix& y);
Matrix mscale(const Field& F, const Matrix& x, Elt c);
Matrix transpose(const Matrix& x);
Matrix membed(const Field& sub, const Field& sup, const Matrix& x);
int rank(const Field& F, Matrix x);
Elt det(const Field& F, Matrix x);
bool invert(const Field& F, const Matrix& x, Matrix& out);
// basis of {v : x v = 0}, in reduced form (deterministic)
std::vector<std::vector<Elt>> kernel(const Field& F, const Matrix& x);
// value of the quadratic form v^T x v
Elt qform(const Field& F, const Matrix& x, const std::vector<Elt>& v);

// Symmetric diagonalization by congruence (odd characteristic).
// Returns the nonzero diagonal entries; their count is the rank.
std::vector<Elt> diagonalize(const Field& F, Matrix x);

}  // namespace wdp::gf
