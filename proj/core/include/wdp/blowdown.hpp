#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdp/planeconf.hpp"
#include "wdp/quadmod.hpp"
#include "wdp/typetab.hpp"

namespace wdp::blowdown {

// a2 q^2 + a1 q + a0
struct QPoly {
  long long a2 = 0, a1 = 0, a0 = 0;
  long long at(long long q) const { return (a2 * q + a1) * q + a0; }
  std::string to_string() const;  // "q^2-7q+12"
  bool operator==(const QPoly&) const = default;
};
QPoly parse_qpoly(const std::string& s);

// Disjoint cycles of Frobenius on the negative curves, as curve indices
// (lines first, then the (-2)-curves of the root basis).
std::vector<std::vector<int>> curve_action(const types::ArithmeticType& deg4);
std::string curve_name(const types::GeometricType& gt, int idx);  // "E1", "E0-E1-E2", "r:E1-E2"
// Cycle type per vertex class: lengths on lines, lengths on (-2)-curves.
std::pair<std::vector<int>, std::vector<int>> action_shape(const types::ArithmeticType& deg4);

struct OffCurveCount {
  int type_no = 0;
  int t = 0, nfix = 0, i1 = 0, i2 = 0;
  QPoly n;
};
OffCurveCount off_curve_count(const types::ArithmeticType& deg4);
// Degree-3 type obtained by blowing up a rational point off the negative curves.
int deg3_from_deg4(const types::ArithmeticType& deg4);
// No three negative curves meet pairwise with products 1 around a common
// point; checked as: no three pairwise-meeting negative curves at all.
bool no_concurrent_triples(const types::GeometricType& gt);

struct Table1Row {
  int type_no = 0;
  OffCurveCount count;
  std::vector<int> line_cycles, root_cycles;
  int deg3_type = 0;
};
std::vector<Table1Row> table1();

enum class Status { Plan, NotRealizable, OutOfScope, Unresolved };

struct Realization {
  Status status = Status::Plan;
  int type_no = 0;
  int p = 0, m = 0;
  std::optional<plane::BlowupPlan> plan;
  std::optional<quad::Pair> source_pair;  // verified degree-4 model for blowup routes
  std::string certificate;                // non-existence argument or scope note
  std::vector<std::pair<int, long long>> source_counts;  // (degree-4 type, N(q))
};

// Degree 3, odd q.
Realization realizability(int type_no, int p, int m, std::uint64_t seed = 1);

}  // namespace wdp::blowdown
