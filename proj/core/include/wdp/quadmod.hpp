#pragma once

#include <string>
#include <vector>

#include "wdp/gf.hpp"

namespace wdp::quad {

// The Frobenius algebra F_q[T]/(F) with the form (x, y) -> lambda_F(delta x y).
struct Cyclic {
  gf::Poly F;      // monic, nonconstant
  gf::Poly delta;  // unit modulo F, degree < deg F
};
using Module = std::vector<Cyclic>;

// Pencil {Q0 - theta Qinf}; the member at infinity is Qinf.
struct Pair {
  int p = 0, m = 0;
  gf::Matrix Q0, Qinf;
  const gf::Field& field() const { return gf::field(p, m); }
  bool operator==(const Pair&) const = default;
};

// lambda_F(x): coefficient of t^{n-1} in x mod F.
gf::Elt lambda(const gf::Field& K, const gf::Poly& F, const gf::Poly& x);
// Entries lambda_F(delta t^{i+j}).
gf::Matrix gram(const gf::Field& K, const Cyclic& c);
// Entries lambda_F(T delta t^{i+j}).
gf::Matrix gram_t(const gf::Field& K, const Cyclic& c);
void check_cyclic(const gf::Field& K, const Cyclic& c);  // throws if degenerate

Pair to_pair(const gf::Field& K, const Module& M);
Pair embed_pair(const Pair& P, int n);  // base change to F_{q^n}

// (-1)^{n(n-1)/2} N_F(delta)
gf::Elt discriminant(const gf::Field& K, const Cyclic& c);
// (-1)^{n(n-1)/2} N_F(delta) delta(theta), theta a root of F in the extension E.
gf::Elt restricted_discriminant(const gf::Field& K, const Cyclic& c, const gf::Field& E, gf::Elt theta);
// Product of the nonzero diagonal entries of a diagonalization: the
// discriminant of the form induced on V / ker.
gf::Elt form_discriminant(const gf::Field& K, const gf::Matrix& x);

// det(T Qinf - Q0) as a polynomial over the base field.
gf::Poly pencil_poly(const Pair& P);
// The binary form det(a Q0 - b Qinf) vanishes identically.
bool degenerate(const Pair& P);

// Member Q0 - theta Qinf over E (theta in E), or Qinf when infinite.
gf::Matrix member(const Pair& P, const gf::Field& E, gf::Elt theta, bool infinite);

// One Galois orbit of roots of the pencil.
struct SegreGroup {
  gf::Poly root_poly;  // monic irreducible over the base field; empty at infinity
  int deg = 1;         // size of the orbit
  std::vector<int> exps;  // Jordan block sizes, descending
  int mult() const;
  int corank() const { return static_cast<int>(exps.size()); }
};
struct Segre {
  std::vector<SegreGroup> groups;
  std::string symbol() const;  // canonical, over the algebraic closure
};
Segre segre_symbol(const Pair& P);
// Re-emit a symbol such as "[(11)21]" in canonical group order.
std::string canonical_segre(const std::string& s);

// Two summands [[T-theta, d1]] and [[T-theta, d2]]: the two points where the
// vertex line meets X_s are rational iff -d1 d2 is a square.
bool vertex_rationality(const gf::Field& K, gf::Elt d1, gf::Elt d2);

}  // namespace wdp::quad
