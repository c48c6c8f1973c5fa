#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdp/gf.hpp"
#include "wdp/piclat.hpp"
#include "wdp/typetab.hpp"

namespace wdp::plane {

// Frobenius element together with the classes of the (-2)-curves.
struct LatticeData {
  int degree = 0;
  pic::IMat w;
  std::vector<pic::Vec> basis;
};
const types::ArithmeticType& identify(const LatticeData& d);

// A chain p_1 < p_2 < ... of infinitely near points, cut out by the germ
// gamma(s) = base + s v_1 + s^2 v_2 + ... in homogeneous coordinates over
// the coordinate field. A single plane point is a chain of length one.
struct Chain {
  std::vector<gf::Elt> base;
  std::vector<std::vector<gf::Elt>> jet;  // v_1 .. v_{len-1}
  std::vector<int> labels;                // E index of each point, 1..r
  int field_degree = 1;                   // degree of the base point over F_q
};

struct PointConfiguration {
  int p = 0, m = 0;  // F_q with q = p^m
  int ext = 1;       // coordinates live in F_{q^ext}
  std::vector<Chain> chains;

  int size() const;
  const gf::Field& base_field() const { return gf::field(p, m); }
  const gf::Field& coord_field() const { return gf::field(p, m * ext); }
};

// Label sets of collinear triples and conconic sextuples, counted in the
// infinitely near sense. Throws when four points are collinear.
struct Incidences {
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> conics;
};
Incidences incidences(const PointConfiguration& c);

std::vector<pic::Vec> effective_roots(const PointConfiguration& c);
// Effective roots that are not a sum of two effective roots.
std::vector<pic::Vec> irreducible_roots(const std::vector<pic::Vec>& effective);
// Permutation of E_1..E_r induced by Frobenius; throws if the configuration
// is not Galois stable.
pic::IMat frobenius_weyl(const PointConfiguration& c);
LatticeData lattice(const PointConfiguration& c);

// Contract a Frobenius-fixed exceptional class orthogonal to the basis.
LatticeData contract(const LatticeData& d, const pic::Vec& e);
// Blow up a rational point on the degree-4 surface of type `deg4` lying on
// exactly the negative curves listed in `profile` (indices into curves()).
LatticeData blowup_at_point(const types::ArithmeticType& deg4, const std::vector<int>& profile);
// Number of rational points available for that profile over F_q, under the
// no-triple-point rule: N(q) for the empty profile, the points of a fixed
// curve off the other fixed curves, or 1 for the meeting point of two curves.
long long profile_points(const types::ArithmeticType& deg4, const std::vector<int>& profile, long long q);

struct BlowupPlan {
  int degree = 0, type_no = 0;
  int p = 0, m = 0;
  std::string route;  // "plane", "plane+contract", "deg4-point"
  std::string recipe;
  std::optional<PointConfiguration> config;
  std::vector<pic::Vec> contracted;  // in configuration coordinates, applied in order
  int source_type = 0;               // degree-4 source for "deg4-point"
  std::string source_name;           // "16" or "O3"
  std::vector<int> profile;
  LatticeData result;
  int identified = 0;
};

// Degrees 5 and 6, any q.
BlowupPlan build_plan(int degree, int type_no, int p, int m, std::uint64_t seed = 1);
// Degree-3 plane recipes; nullopt when no recipe exists for the type or the
// configuration does not exist over F_q.
std::optional<BlowupPlan> deg3_plane_plan(int type_no, int p, int m, std::uint64_t seed = 1);

}  // namespace wdp::plane
