#include "wdp/typetab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "wdp/golden.hpp"

namespace wdp::types {

using pic::Vec;

std::string ArithmeticType::name() const {
  if (type_no > 0) return std::to_string(type_no);
  if (ordinary_no > 0) return "O" + std::to_string(ordinary_no);
  return "ordinary";
}

std::vector<Vec> GeometricType::curves() const {
  const auto& W = pic::weyl_group(degree);
  std::vector<Vec> out;
  for (int l : lines) out.push_back(W.exc[l]);
  for (auto& b : basis_vecs) out.push_back(b);
  return out;
}

namespace {

// Arm lengths of a tree component are enough to name it.
struct Component {
  char letter;
  int rank;
};

bool ade_component(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp, Component& out) {
  const int n = static_cast<int>(comp.size());
  int edges = 0, branch = -1;
  for (int v : comp) {
    int d = static_cast<int>(adj[v].size());
    edges += d;
    if (d > 3) return false;
    if (d == 3) {
      if (branch >= 0) return false;
      branch = v;
    }
  }
  if (edges / 2 != n - 1) return false;  // not a tree
  if (branch < 0) {
    out = {'A', n};
    return true;
  }
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int prev = branch, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    out = {'D', n};
    return true;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    out = {'E', n};
    return true;
  }
  return false;
}

// Returns false when the vectors do not form an ADE configuration.
bool classify(const std::vector<Vec>& basis, std::string& label, std::vector<std::vector<int>>& comps) {
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (pic::pairing(basis[i], basis[i]) != -2) return false;
    for (int j = i + 1; j < n; ++j) {
      int p = pic::pairing(basis[i], basis[j]);
      if (p != 0 && p != 1) return false;
      if (p == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  comps.clear();
  std::vector<int> seen(n, 0);
  std::map<std::pair<char, int>, int> count;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int t : adj[comp[k]])
        if (!seen[t]) {
          seen[t] = 1;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    Component c{};
    if (!ade_component(adj, comp, c)) return false;
    ++count[{c.letter, c.rank}];
    comps.push_back(comp);
  }
  label.clear();
  for (auto& [key, mult] : count) {
    if (!label.empty()) label += "+";
    if (mult > 1) label += std::to_string(mult);
    label += key.first;
    label += std::to_string(key.second);
  }
  if (label.empty()) label = "ordinary";
  return true;
}

struct Mask {
  std::uint64_t lo = 0, hi = 0;
  void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
  bool operator==(const Mask&) const = default;
};
struct MaskHash {
  size_t operator()(const Mask& m) const { return std::hash<std::uint64_t>()(m.lo * 0x9e3779b97f4a7c15ULL ^ m.hi); }
};

int element_order(const pic::WeylGroup& W, int g) {
  int x = g, k = 1;
  while (x != 0) {
    x = W.mul(g, x);
    ++k;
  }
  return k;
}

// cycle type of the permutation of the basis, as a product of x^l - 1
pic::Cyclo perm_char(const std::vector<int>& perm) {
  pic::Cyclo out;
  std::map<int, int> acc;
  std::vector<int> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    for (int d = 1; d <= len; ++d)
      if (len % d == 0) ++acc[d];
  }
  for (auto& [n, m] : acc) out.push_back({n, m});
  return out;
}

const std::vector<std::string>& ordinary_order() {
  static const std::vector<std::string> v = {"11111|", "111|11", "1|1111", "2111|", "21|11", "221|",
                                             "311|",   "2|21",   "41|",    "11|21", "|2111", "1|22",
                                             "5|",     "32|",    "3|11",   "1|31",  "|41",   "|32"};
  return v;
}

void build_classes(const pic::WeylGroup& W, GeometricType& gt) {
  std::vector<int> gens;
  if (static_cast<int>(gt.stab.size()) == W.size())
    gens = W.gens;
  else
    gens = gt.stab;
  std::vector<std::vector<int>> classes;
  for (int x : gt.stab) {
    if (gt.class_of.count(x)) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({x});
    gt.class_of[x] = id;
    for (size_t k = 0; k < classes[id].size(); ++k) {
      int y = classes[id][k];
      for (int g : gens) {
        int z = W.mul(W.mul(g, y), W.inv(g));
        if (gt.class_of.emplace(z, id).second) classes[id].push_back(z);
      }
    }
  }
  auto complement = pic::orthogonal_complement(gt.degree, gt.basis_vecs);
  std::vector<Vec> curves = gt.curves();
  for (size_t id = 0; id < classes.size(); ++id) {
    ArithmeticType at;
    at.degree = gt.degree;
    at.rep = classes[id][0];  // smallest index, since stab is ascending
    at.class_size = static_cast<int>(classes[id].size());
    at.order = element_order(W, at.rep);
    const pic::IMat& m = W.elems[at.rep];
    at.chi_pic = pic::cyclotomic_factor(pic::char_poly(m));
    at.chi_pic_s = pic::cyclotomic_factor(pic::restricted_char_poly(m, complement));
    std::vector<int> bperm;
    const std::uint8_t* rp = W.root_perm(at.rep);
    for (int b : gt.basis) {
      int img = rp[b];
      auto it = std::find(gt.basis.begin(), gt.basis.end(), img);
      bperm.push_back(static_cast<int>(it - gt.basis.begin()));
    }
    at.chi_root = perm_char(bperm);
    if (gt.degree == 4) at.wd5 = wd5_class(m);
    auto cp = curve_permutation(gt, m);
    at.cycles = cycle_type(cp);
    at.n_fixed_curves = static_cast<int>(std::count(at.cycles.begin(), at.cycles.end(), 1));
    gt.arith.push_back(at);
  }
}

void number_types(TypeTable& T) {
  const int d = T.degree;
  auto rows = golden::appendix(d);
  // geometric rows in appendix order
  std::vector<std::pair<std::string, int>> geo_keys;
  for (auto& r : rows) {
    std::pair<std::string, int> k{r.dynkin, r.n_lines};
    if (geo_keys.empty() || geo_keys.back() != k) geo_keys.push_back(k);
  }
  std::vector<GeometricType> sorted;
  std::vector<int> used(T.geo.size(), 0);
  for (size_t i = 0; i < T.geo.size(); ++i)
    if (T.geo[i].ordinary()) {
      sorted.push_back(std::move(T.geo[i]));
      used[i] = 1;
    }
  if (sorted.size() != 1) throw std::logic_error("expected one ordinary type");
  for (size_t k = 0; k < geo_keys.size(); ++k) {
    int hit = -1;
    for (size_t i = 0; i < T.geo.size(); ++i)
      if (!used[i] && T.geo[i].dynkin == geo_keys[k].first &&
          static_cast<int>(T.geo[i].lines.size()) == geo_keys[k].second) {
        if (hit >= 0) throw std::logic_error("ambiguous geometric key " + geo_keys[k].first);
        hit = static_cast<int>(i);
      }
    if (hit < 0) throw std::logic_error("no geometric type for " + geo_keys[k].first);
    used[hit] = 1;
    T.geo[hit].row = static_cast<int>(k) + 1;
    sorted.push_back(std::move(T.geo[hit]));
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw std::logic_error("computed geometric type missing from the tables: " + T.geo[i].dynkin);
  T.geo = std::move(sorted);

  for (size_t gi = 1; gi < T.geo.size(); ++gi) {
    auto& gt = T.geo[gi];
    std::vector<int> taken(gt.arith.size(), 0);
    for (auto& r : rows) {
      if (r.dynkin != gt.dynkin || r.n_lines != static_cast<int>(gt.lines.size())) continue;
      auto cp = pic::parse_cyclo(r.chi_pic), cs = pic::parse_cyclo(r.chi_pic_s);
      std::vector<int> cand;
      for (size_t a = 0; a < gt.arith.size(); ++a) {
        const auto& at = gt.arith[a];
        if (taken[a] || at.chi_pic != cp || at.chi_pic_s != cs) continue;
        if (d == 4 && at.wd5 != r.wd5_class) continue;
        cand.push_back(static_cast<int>(a));
      }
      if (cand.size() > 1 && d == 4) {
        std::vector<int> keep;
        for (auto& t1 : golden::table1())
          if (t1.type_no == r.type_no)
            for (int a : cand)
              if (gt.arith[a].n_fixed_curves == t1.nfix) keep.push_back(a);
        cand = keep;
      }
      if (cand.size() != 1)
        throw std::logic_error("degree " + std::to_string(d) + " type " + std::to_string(r.type_no) + ": " +
                               std::to_string(cand.size()) + " matching classes");
      taken[cand[0]] = 1;
      gt.arith[cand[0]].type_no = r.type_no;
    }
    for (int t : taken)
      if (!t) throw std::logic_error("unnumbered class in " + gt.dynkin);
  }
  if (d == 4) {
    auto& gt = T.geo[0];
    const auto& order = ordinary_order();
    for (auto& at : gt.arith) {
      auto it = std::find(order.begin(), order.end(), at.wd5);
      if (it == order.end()) throw std::logic_error("unknown W(D5) class " + at.wd5);
      at.ordinary_no = static_cast<int>(it - order.begin()) + 1;
    }
  }
  for (auto& gt : T.geo) {
    std::vector<int> perm(gt.arith.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
      const auto& a = gt.arith[x];
      const auto& b = gt.arith[y];
      if (a.type_no != b.type_no) return a.type_no < b.type_no;
      return a.ordinary_no < b.ordinary_no;
    });
    std::vector<ArithmeticType> re;
    std::vector<int> where(perm.size());
    for (size_t k = 0; k < perm.size(); ++k) {
      re.push_back(gt.arith[perm[k]]);
      where[perm[k]] = static_cast<int>(k);
    }
    gt.arith = std::move(re);
    for (auto& [x, id] : gt.class_of) id = where[id];
  }
  for (size_t gi = 0; gi < T.geo.size(); ++gi)
    for (auto& at : T.geo[gi].arith) at.geo = static_cast<int>(gi);
}

std::unique_ptr<TypeTable> build_table(int degree) {
  const auto& W = pic::weyl_group(degree);
  const int nR = static_cast<int>(W.rts.size());
  const int r = pic::rank_r(degree);
  std::vector<std::vector<int>> P(nR, std::vector<int>(nR));
  for (int i = 0; i < nR; ++i)
    for (int j = 0; j < nR; ++j) P[i][j] = pic::pairing(W.rts[i], W.rts[j]);

  auto T = std::make_unique<TypeTable>();
  T->degree = degree;
  std::unordered_set<Mask, MaskHash> visited;

  auto new_orbit = [&](const std::vector<int>& s) {
    GeometricType gt;
    gt.degree = degree;
    gt.basis = s;
    for (int i : s) gt.basis_vecs.push_back(W.rts[i]);
    if (!classify(gt.basis_vecs, gt.dynkin, gt.components)) throw std::logic_error("non-ADE root subset");
    for (size_t e = 0; e < W.exc.size(); ++e) {
      bool ok = true;
      for (auto& b : gt.basis_vecs) ok = ok && pic::pairing(W.exc[e], b) >= 0;
      if (ok) gt.lines.push_back(static_cast<int>(e));
    }
    Mask self;
    for (int i : s) self.set(i);
    for (int g = 0; g < W.size(); ++g) {
      const std::uint8_t* rp = W.root_perm(g);
      Mask m;
      for (int i : s) m.set(rp[i]);
      if (m == self) gt.stab.push_back(g);
      if (visited.insert(m).second) ++gt.orbit_size;
    }
    gt.brauer = s.empty() ? std::vector<long long>{} : pic::quotient_torsion(gt.basis_vecs, pic::simple_roots(degree));
    T->geo.push_back(std::move(gt));
  };

  // depth-first over increasing index sequences: the first subset met in an
  // orbit becomes its representative
  std::vector<int> cur;
  std::vector<Vec> cur_vecs;
  std::string label;
  std::vector<std::vector<int>> comps;
  std::function<void(int)> dfs = [&](int start) {
    Mask m;
    for (int i : cur) m.set(i);
    if (!visited.count(m)) new_orbit(cur);
    if (static_cast<int>(cur.size()) == r) return;
    for (int j = start; j < nR; ++j) {
      bool ok = true;
      for (int i : cur)
        if (P[i][j] != 0 && P[i][j] != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(j);
      cur_vecs.push_back(W.rts[j]);
      if (classify(cur_vecs, label, comps)) dfs(j + 1);
      cur.pop_back();
      cur_vecs.pop_back();
    }
  };
  dfs(0);
  for (auto& gt : T->geo) build_classes(W, gt);
  number_types(*T);
  return T;
}

}  // namespace

const ArithmeticType& TypeTable::by_number(int type_no) const {
  for (auto& gt : geo)
    for (auto& at : gt.arith)
      if (at.type_no == type_no) return at;
  throw std::out_of_range("no type " + std::to_string(type_no) + " in degree " + std::to_string(degree));
}

const ArithmeticType& TypeTable::ordinary(int ordinary_no) const {
  for (auto& at : geo[0].arith)
    if (at.ordinary_no == ordinary_no) return at;
  throw std::out_of_range("no ordinary type O" + std::to_string(ordinary_no));
}

std::vector<const ArithmeticType*> TypeTable::numbered() const {
  std::vector<const ArithmeticType*> out;
  for (auto& gt : geo)
    for (auto& at : gt.arith)
      if (at.type_no > 0) out.push_back(&at);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->type_no < b->type_no; });
  return out;
}

int TypeTable::count_numbered() const { return static_cast<int>(numbered().size()); }

const TypeTable& type_table(int degree) {
  pic::check_degree(degree);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TypeTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return *it->second;
  auto t = build_table(degree);
  const TypeTable& ref = *t;
  cache.emplace(degree, std::move(t));
  return ref;
}

std::string dynkin_label(const std::vector<Vec>& basis, std::vector<std::vector<int>>* components) {
  std::string label;
  std::vector<std::vector<int>> comps;
  if (!classify(basis, label, comps)) throw std::invalid_argument("not a root basis");
  if (components) *components = comps;
  return label;
}

std::vector<Vec> exceptional_curves(int degree, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  for (auto& e : pic::exceptional_classes(degree)) {
    bool ok = true;
    for (auto& b : basis) ok = ok && pic::pairing(e, b) >= 0;
    if (ok) out.push_back(e);
  }
  return out;
}

Graph negative_curve_graph(const GeometricType& gt) {
  Graph g;
  g.vertices = gt.curves();
  const size_t n = g.vertices.size();
  for (size_t i = 0; i < n; ++i) g.circle.push_back(i >= gt.lines.size());
  g.adj.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) g.adj[i][j] = pic::pairing(g.vertices[i], g.vertices[j]);
  return g;
}

std::vector<int> curve_permutation(const GeometricType& gt, const pic::IMat& w) {
  auto cs = gt.curves();
  std::vector<int> perm;
  for (auto& c : cs) {
    Vec img = pic::apply(w, c);
    auto it = std::find(cs.begin(), cs.end(), img);
    if (it == cs.end()) throw std::invalid_argument("element does not preserve the negative curves");
    perm.push_back(static_cast<int>(it - cs.begin()));
  }
  return perm;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> out;
  std::vector<int> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

const ArithmeticType& identify(int degree, const pic::IMat& w, const std::vector<Vec>& basis) {
  const auto& W = pic::weyl_group(degree);
  if (basis.empty() && degree != 4) throw std::invalid_argument("ordinary surfaces carry no type number in this degree");
  std::string label;
  std::vector<std::vector<int>> comps;
  if (!classify(basis, label, comps)) throw std::invalid_argument("not a root basis");
  std::vector<int> idx;
  for (auto& b : basis) {
    int i = W.root_index(b);
    if (i < 0) throw std::invalid_argument("not a root: " + pic::to_string(b));
    idx.push_back(i);
  }
  int wi = W.find(w);
  if (wi < 0) throw std::invalid_argument("matrix is not in the Weyl group");
  {
    const std::uint8_t* rp = W.root_perm(wi);
    for (int i : idx)
      if (std::find(idx.begin(), idx.end(), static_cast<int>(rp[i])) == idx.end())
        throw std::invalid_argument("element does not stabilize the root basis");
  }
  int nlines = static_cast<int>(exceptional_curves(degree, basis).size());
  const auto& T = type_table(degree);
  for (auto& gt : T.geo) {
    if (gt.dynkin != label || static_cast<int>(gt.lines.size()) != nlines) continue;
    for (int g = 0; g < W.size(); ++g) {
      const std::uint8_t* rp = W.root_perm(g);
      bool ok = true;
      for (int i : idx)
        if (std::find(gt.basis.begin(), gt.basis.end(), static_cast<int>(rp[i])) == gt.basis.end()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      int x = W.mul(W.mul(g, wi), W.inv(g));
      auto it = gt.class_of.find(x);
      if (it == gt.class_of.end()) throw std::logic_error("conjugate left the stabilizer");
      return gt.arith[it->second];
    }
    throw std::logic_error("root basis not in the orbit of its type");
  }
  throw std::invalid_argument("unknown geometric type " + label);
}

std::vector<Vec> conic_classes() {
  std::vector<Vec> out;
  Vec mk = pic::neg(pic::canonical_class(4));
  for (int i = 1; i <= 5; ++i) {
    Vec c = pic::sub(pic::basis_vector(4, 0), pic::basis_vector(4, i));
    out.push_back(c);
    out.push_back(pic::sub(mk, c));
  }
  return out;  // C_1, C_1', C_2, C_2', ...
}

namespace {

int conic_index(const std::vector<Vec>& cs, const Vec& v) {
  auto it = std::find(cs.begin(), cs.end(), v);
  if (it == cs.end()) throw std::logic_error("not a conic class");
  return static_cast<int>(it - cs.begin());
}

std::string join_parts(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  std::string s;
  for (int p : parts) s += std::to_string(p);
  return s;
}

Vec dominant(const Vec& x0, const std::vector<Vec>& basis) {
  Vec x = x0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto& b : basis) {
      int p = pic::pairing(x, b);
      if (p < 0) {
        for (size_t i = 0; i < x.size(); ++i) x[i] += p * b[i];
        moved = true;
      }
    }
  }
  return x;
}

}  // namespace

std::string wd5_class(const pic::IMat& w) {
  auto cs = conic_classes();
  std::vector<int> seen(5, 0), pos, negp;
  for (int i = 0; i < 5; ++i) {
    if (seen[i]) continue;
    int len = 0;
    Vec x = cs[2 * i];
    do {
      seen[conic_index(cs, x) / 2] = 1;
      x = pic::apply(w, x);
      ++len;
    } while (conic_index(cs, x) / 2 != i);
    (x == cs[2 * i] ? pos : negp).push_back(len);
  }
  return join_parts(pos) + "|" + join_parts(negp);
}

P1Maps count_p1_maps(const GeometricType& gt) {
  if (gt.degree != 4) throw std::invalid_argument("morphism count is defined in degree 4");
  P1Maps r;
  Vec mk = pic::neg(pic::canonical_class(4));
  int zero = 0;
  for (auto& c : conic_classes()) {
    bool nef = true, all_zero = true;
    for (auto& b : gt.basis_vecs) {
      int p = pic::pairing(c, b);
      nef = nef && p >= 0;
      all_zero = all_zero && p == 0;
    }
    if (!nef) continue;
    ++r.n;
    if (all_zero) {
      ++zero;
      continue;
    }
    Vec partner = dominant(pic::sub(mk, c), gt.basis_vecs);
    if (partner == c)
      ++r.c;
    else
      ++r.b;  // counted twice, once from each member
  }
  r.a = zero / 2;
  r.b /= 2;
  return r;
}

P1Maps segre_split(const std::string& s) {
  P1Maps r;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("bad Segre symbol " + s);
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') {
      size_t j = s.find(')', i);
      if (j == std::string::npos) throw std::invalid_argument("bad Segre symbol " + s);
      int parts = static_cast<int>(j - i - 1);
      if (parts == 2)
        ++r.c;
      else
        throw std::invalid_argument("unsupported Segre group in " + s);
      i = j;
    } else if (s[i] == '1') {
      ++r.a;
    } else if (s[i] >= '2' && s[i] <= '9') {
      ++r.b;
    } else {
      throw std::invalid_argument("bad Segre symbol " + s);
    }
  }
  r.n = 2 * r.a + 2 * r.b + r.c;
  return r;
}

std::string segre_of(const GeometricType& gt) {
  if (gt.degree != 4) throw std::invalid_argument("Segre symbols are defined in degree 4");
  for (auto& row : golden::segre4())
    if (row.dynkin == gt.dynkin && row.n_lines == static_cast<int>(gt.lines.size())) return row.segre;
  throw std::logic_error("no Segre symbol for " + gt.dynkin);
}

std::vector<OrbitSig> galois_signature(const GeometricType& gt, const pic::IMat& w) {
  Vec mk = pic::neg(pic::canonical_class(4));
  // groups of classes: pairs for kinds a and b, singletons for c
  struct Group {
    char kind;
    Vec first, second;
  };
  std::vector<Group> groups;
  std::set<Vec> done;
  for (auto& c : conic_classes()) {
    if (done.count(c)) continue;
    bool nef = true, all_zero = true;
    for (auto& b : gt.basis_vecs) {
      int p = pic::pairing(c, b);
      nef = nef && p >= 0;
      all_zero = all_zero && p == 0;
    }
    if (!nef) continue;
    if (all_zero) {
      Vec other = pic::sub(mk, c);
      groups.push_back({'a', c, other});
      done.insert(c);
      done.insert(other);
      continue;
    }
    Vec partner = dominant(pic::sub(mk, c), gt.basis_vecs);
    if (partner == c) {
      groups.push_back({'c', c, c});
      done.insert(c);
    } else {
      groups.push_back({'b', c, partner});
      done.insert(c);
      done.insert(partner);
    }
  }
  auto group_of = [&](const Vec& v) {
    for (size_t i = 0; i < groups.size(); ++i)
      if (groups[i].first == v || groups[i].second == v) return static_cast<int>(i);
    throw std::logic_error("class left the morphism set");
  };
  std::vector<OrbitSig> out;
  std::vector<int> seen(groups.size(), 0);
  for (size_t i = 0; i < groups.size(); ++i) {
    if (seen[i]) continue;
    OrbitSig sig;
    sig.kind = groups[i].kind;
    int len = 0;
    Vec x = groups[i].first;
    do {
      seen[group_of(x)] = 1;
      x = pic::apply(w, x);
      ++len;
    } while (group_of(x) != static_cast<int>(i));
    sig.len = len;
    sig.twisted = sig.kind != 'c' && x != groups[i].first;
    out.push_back(sig);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wdp::types
