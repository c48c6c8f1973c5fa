#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "wdp/piclat.hpp"

namespace wdp::types {

// One conjugacy class of Stab(R_irr).
struct ArithmeticType {
  int degree = 0;
  int geo = 0;          // index into TypeTable::geo
  int type_no = 0;      // published number; 0 for ordinary surfaces
  int ordinary_no = 0;  // 1..18 for degree-4 ordinary classes, else 0
  int rep = 0;          // Weyl group index of the representative
  int class_size = 0;
  int order = 0;
  pic::Cyclo chi_pic, chi_root, chi_pic_s;
  std::string wd5;          // degree 4: signed cycle type "pos|neg"
  std::vector<int> cycles;  // cycle type on negative curves, descending
  int n_fixed_curves = 0;

  std::string name() const;  // "12" or "O3"
};

struct GeometricType {
  int degree = 0;
  int row = 0;  // 1-based order of the appendix; 0 for ordinary
  std::string dynkin;
  std::vector<int> basis;  // root indices into the Weyl group root list
  std::vector<pic::Vec> basis_vecs;
  std::vector<std::vector<int>> components;  // positions in basis, per Dynkin component
  std::vector<int> lines;                    // exceptional curve indices
  int orbit_size = 0;
  std::vector<int> stab;  // Weyl indices, ascending
  std::vector<long long> brauer;
  std::vector<ArithmeticType> arith;
  std::unordered_map<int, int> class_of;  // stabilizer element -> arith index

  bool ordinary() const { return basis.empty(); }
  // negative curves: lines followed by the basis
  std::vector<pic::Vec> curves() const;
};

struct TypeTable {
  int degree = 0;
  std::vector<GeometricType> geo;  // geo[0] is ordinary, then appendix order

  const ArithmeticType& by_number(int type_no) const;
  const ArithmeticType& ordinary(int ordinary_no) const;
  std::vector<const ArithmeticType*> numbered() const;  // published order
  int count_numbered() const;
};

const TypeTable& type_table(int degree);

// Dynkin label such as "2A1+A2", plus connected components (positions).
std::string dynkin_label(const std::vector<pic::Vec>& basis, std::vector<std::vector<int>>* components = nullptr);
// Exceptional classes D with D.R >= 0 for every R in the basis.
std::vector<pic::Vec> exceptional_curves(int degree, const std::vector<pic::Vec>& basis);

struct Graph {
  std::vector<pic::Vec> vertices;
  std::vector<bool> circle;           // true for (-2)-curves
  std::vector<std::vector<int>> adj;  // intersection numbers (off diagonal)
};
Graph negative_curve_graph(const GeometricType& gt);

// Permutation induced by w on the negative curves of gt.
std::vector<int> curve_permutation(const GeometricType& gt, const pic::IMat& w);
std::vector<int> cycle_type(const std::vector<int>& perm);  // descending

// Resolve (w, R) to its arithmetic type; throws std::invalid_argument when R
// is not a root basis of a known type or w does not stabilize it.
const ArithmeticType& identify(int degree, const pic::IMat& w, const std::vector<pic::Vec>& basis);

// Degree 4: conic classes C_i = E0 - E_i and C_i' = -K - C_i.
std::vector<pic::Vec> conic_classes();
std::string wd5_class(const pic::IMat& w);

struct P1Maps {
  int n = 0, a = 0, b = 0, c = 0;
};
// Counted from conic classes meeting no (-2)-curve negatively.
P1Maps count_p1_maps(const GeometricType& gt);
// Counted from a Segre symbol such as "[(21)11]".
P1Maps segre_split(const std::string& segre);
std::string segre_of(const GeometricType& gt);  // degree 4 only

// Galois signature of a degree-4 type: one entry per Frobenius orbit on the
// morphism classes. kind 'a': complementary couples with C.R = 0; 'b': pairs
// coming from a rank-4 multiple root; 'c': single classes from a rank-3
// quadric. `twisted` is set when w^len swaps the two members.
struct OrbitSig {
  char kind = 'a';
  int len = 1;
  bool twisted = false;
  auto operator<=>(const OrbitSig&) const = default;
};
std::vector<OrbitSig> galois_signature(const GeometricType& gt, const pic::IMat& w);

}  // namespace wdp::types
