#include "wdp/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wdp/zeta.hpp"

namespace wdp::io {

using Json = nlohmann::ordered_json;

namespace {

Json cyclo(const pic::Cyclo& c) {
  Json out = Json::array();
  for (auto [n, k] : c) out.push_back({n, k});
  return out;
}

Json imat(const pic::IMat& w) {
  Json out = Json::array();
  for (int i = 0; i < w.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < w.n; ++j) row.push_back(w(i, j));
    out.push_back(row);
  }
  return out;
}

Json vecs(const std::vector<pic::Vec>& vs) {
  Json out = Json::array();
  for (auto& v : vs) out.push_back(v);
  return out;
}

Json big(const zeta::Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json field_json(const gf::Field& K) { return {{"p", K.p}, {"m", K.m}, {"modulus", K.modulus}}; }

Json matrix(const gf::Field& K, const gf::Matrix& x) {
  Json out = Json::array();
  for (int i = 0; i < x.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < x.cols; ++j) row.push_back(K.to_string(x(i, j)));
    out.push_back(row);
  }
  return out;
}

Json point(const gf::Field& K, const std::vector<gf::Elt>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(K.to_string(x));
  return out;
}

Json pair_obj(const quad::Pair& P) {
  const auto& K = P.field();
  Json j = field_json(K);
  j["Q0"] = matrix(K, P.Q0);
  j["Qinf"] = matrix(K, P.Qinf);
  return j;
}

Json classification(const types::ArithmeticType& at, long long q) {
  const auto& gt = types::type_table(at.degree).geo[at.geo];
  Json counts = Json::array();
  for (int n = 1; n <= 4; ++n) counts.push_back(big(zeta::count_sing(at, q, n)));
  return {{"dynkin", gt.dynkin},
          {"n_lines", gt.lines.size()},
          {"chi_pic", pic::cyclo_to_string(at.chi_pic)},
          {"chi_pic_s", pic::cyclo_to_string(at.chi_pic_s)},
          {"brauer", gt.brauer},
          {"counts_sing", counts}};
}

const types::ArithmeticType& deg4_by_name(const std::string& name) {
  const auto& T4 = types::type_table(4);
  if (!name.empty() && name[0] == 'O') return T4.ordinary(std::stoi(name.substr(1)));
  return T4.by_number(std::stoi(name));
}

Json plan_obj(const plane::BlowupPlan& plan) {
  Json j;
  j["degree"] = plan.degree;
  j["type"] = plan.type_no;
  j["q"] = {{"p", plan.p}, {"m", plan.m}};
  j["route"] = plan.route;
  j["recipe"] = plan.recipe;
  if (plan.config) {
    const auto& c = *plan.config;
    const auto& L = c.coord_field();
    Json cj;
    cj["ext"] = c.ext;
    cj["coordinate_field"] = field_json(L);
    Json pts = Json::array();
    for (auto& ch : c.chains) {
      Json jet = Json::array();
      for (auto& v : ch.jet) jet.push_back(point(L, v));
      pts.push_back({{"labels", ch.labels}, {"field_degree", ch.field_degree}, {"base", point(L, ch.base)}, {"jet", jet}});
    }
    cj["points"] = pts;
    auto inc = plane::incidences(c);
    cj["incidences"] = {{"lines", inc.lines}, {"conics", inc.conics}};
    j["configuration"] = cj;
  }
  if (!plan.contracted.empty()) j["contracted"] = vecs(plan.contracted);
  if (!plan.source_name.empty()) {
    const auto& src = deg4_by_name(plan.source_name);
    const auto& gt = types::type_table(4).geo[src.geo];
    Json prof = Json::array();
    for (int i : plan.profile) prof.push_back(blowdown::curve_name(gt, i));
    j["source"] = {{"degree", 4}, {"type", plan.source_name}, {"profile", prof}};
  }
  j["weyl"] = imat(plan.result.w);
  j["root_basis"] = vecs(plan.result.basis);
  j["identified"] = plan.identified;
  return j;
}

const char* status_name(blowdown::Status s) {
  switch (s) {
    case blowdown::Status::Plan: return "plan";
    case blowdown::Status::NotRealizable: return "not-realizable";
    case blowdown::Status::OutOfScope: return "out-of-scope";
    case blowdown::Status::Unresolved: return "unresolved";
  }
  return "?";
}

std::string cycles_text(const types::GeometricType& gt, const std::vector<std::vector<int>>& cycles) {
  std::string s;
  for (auto& c : cycles) {
    if (c.size() < 2) continue;
    s += "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + blowdown::curve_name(gt, c[i]);
    s += ")";
  }
  return s.empty() ? "Id" : s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string pair_json(const quad::Pair& P) { return pair_obj(P).dump(2) + "\n"; }

quad::Pair parse_pair(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("pair: ") + e.what());
  }
  try {
    quad::Pair P;
    P.p = j.at("p").get<int>();
    P.m = j.at("m").get<int>();
    const auto& K = gf::field(P.p, P.m);
    if (j.contains("modulus") && j["modulus"].get<std::vector<int>>() != K.modulus)
      throw std::invalid_argument("pair: modulus differs from the canonical one for this field");
    auto read = [&](const char* key) {
      const auto& a = j.at(key);
      if (!a.is_array() || a.size() != 5) throw std::invalid_argument(std::string("pair: ") + key + " must be 5x5");
      gf::Matrix M(5, 5);
      for (int r = 0; r < 5; ++r) {
        if (!a[r].is_array() || a[r].size() != 5) throw std::invalid_argument(std::string("pair: ") + key + " must be 5x5");
        for (int c = 0; c < 5; ++c) M(r, c) = K.parse(a[r][c].get<std::string>());
      }
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < r; ++c)
          if (M(r, c) != M(c, r)) throw std::invalid_argument(std::string("pair: ") + key + " is not symmetric");
      return M;
    };
    P.Q0 = read("Q0");
    P.Qinf = read("Qinf");
    return P;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("pair: ") + e.what());
  }
}

std::string types_csv(int degree) {
  std::ostringstream out;
  out << "degree,type_no,dynkin,n_lines,stab_order,wd5_class,chi_pic,chi_pic_s,chi_root,brauer\n";
  for (auto* at : types::type_table(degree).numbered()) {
    const auto& gt = types::type_table(degree).geo[at->geo];
    std::string br;
    for (auto b : gt.brauer) br += (br.empty() ? "Z/" : " Z/") + std::to_string(b);
    out << degree << "," << at->type_no << "," << gt.dynkin << "," << gt.lines.size() << "," << gt.stab.size() << ","
        << at->wd5 << "," << pic::cyclo_to_string(at->chi_pic) << "," << pic::cyclo_to_string(at->chi_pic_s) << ","
        << pic::cyclo_to_string(at->chi_root) << "," << br << "\n";
  }
  return out.str();
}

std::string types_json(int degree) {
  Json rows = Json::array();
  const auto& T = types::type_table(degree);
  for (auto* at : T.numbered()) {
    const auto& gt = T.geo[at->geo];
    Json r;
    r["degree"] = degree;
    r["type_no"] = at->type_no;
    r["dynkin"] = gt.dynkin;
    r["n_lines"] = gt.lines.size();
    r["stab_order"] = gt.stab.size();
    if (degree == 4) r["wd5_class"] = at->wd5;
    r["chi_pic"] = cyclo(at->chi_pic);
    r["chi_pic_s"] = cyclo(at->chi_pic_s);
    r["chi_root"] = cyclo(at->chi_root);
    r["order"] = at->order;
    r["class_size"] = at->class_size;
    r["curve_cycles"] = at->cycles;
    r["w_matrix"] = imat(pic::weyl_group(degree).elems[at->rep]);
    r["root_basis"] = vecs(gt.basis_vecs);
    r["brauer"] = gt.brauer;
    rows.push_back(r);
  }
  return rows.dump(2) + "\n";
}

std::string zeta_json(const types::ArithmeticType& at, long long q, int nmax) {
  Json weak = Json::array(), sing = Json::array(), den = Json::array();
  for (int n = 1; n <= nmax; ++n) {
    weak.push_back(big(zeta::count_weak(at, q, n)));
    sing.push_back(big(zeta::count_sing(at, q, n)));
  }
  for (auto& c : zeta::zeta_denominator(at, q)) den.push_back(big(c));
  Json j;
  j["degree"] = at.degree;
  j["type"] = at.name();
  j["q"] = q;
  j["counts_weak"] = weak;
  j["counts_sing"] = sing;
  j["zeta_denominator"] = den;
  return j.dump(2) + "\n";
}

std::string synth_json(const types::ArithmeticType& at, const synth4::Result& r) {
  const auto& K = r.pair.field();
  Json j;
  j["degree"] = 4;
  j["type"] = at.name();
  j["method"] = r.method;
  if (r.method == "module") {
    Json mod = Json::array();
    for (auto& c : r.witness.module)
      mod.push_back({{"F", point(K, c.F)}, {"delta", point(K, c.delta)}});
    j["module"] = mod;
  } else {
    j["q3_classes"] = r.q3_classes;
  }
  j["pair"] = pair_obj(r.pair);
  return j.dump(2) + "\n";
}

std::string report_json(const count::Report& r) {
  Json j;
  j["type"] = r.type;
  j["q"] = r.q;
  j["nmax"] = r.nmax;
  j["segre"] = {{"measured", r.segre_measured}, {"expected", r.segre_expected}, {"ok", r.segre_ok}};
  j["counts"] = {{"measured", r.counts_measured}, {"predicted", r.counts_predicted}, {"ok", r.counts_ok}};
  j["singular_points"] = {{"measured", r.sing_measured}, {"predicted", r.sing_predicted}, {"ok", r.sing_ok}};
  j["signature"] = {{"measured", r.signature_measured}, {"expected", r.signature_expected}, {"ok", r.signature_ok}};
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string plan_json(const plane::BlowupPlan& plan) { return plan_obj(plan).dump(2) + "\n"; }

std::string realization_json(const blowdown::Realization& r) {
  const auto& at = types::type_table(3).by_number(r.type_no);
  const auto& K = gf::field(r.p, r.m);
  Json j;
  j["degree"] = 3;
  j["type"] = r.type_no;
  j["q"] = {{"p", r.p}, {"m", r.m}};
  j["status"] = status_name(r.status);
  j["classification"] = classification(at, K.q);
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  if (!r.source_counts.empty()) {
    Json sc = Json::array();
    for (auto [s, n] : r.source_counts) sc.push_back({{"degree4_type", s}, {"N", n}});
    j["source_counts"] = sc;
  }
  if (r.plan) j["plan"] = plan_obj(*r.plan);
  if (r.source_pair) j["source_pair"] = pair_obj(*r.source_pair);
  return j.dump(2) + "\n";
}

std::string table1_csv() {
  std::ostringstream out;
  out << "type_no,curve_action,line_cycles,root_cycles,t,nfix,I1,I2,N,deg3_type\n";
  const auto& T4 = types::type_table(4);
  for (auto& r : blowdown::table1()) {
    const auto& at = T4.by_number(r.type_no);
    out << r.type_no << "," << cycles_text(T4.geo[at.geo], blowdown::curve_action(at)) << "," << join(r.line_cycles)
        << "," << join(r.root_cycles) << "," << r.count.t << "," << r.count.nfix << "," << r.count.i1 << ","
        << r.count.i2 << "," << r.count.n.to_string() << "," << r.deg3_type << "\n";
  }
  return out.str();
}

std::string table1_json() {
  Json rows = Json::array();
  const auto& T4 = types::type_table(4);
  for (auto& r : blowdown::table1()) {
    const auto& at = T4.by_number(r.type_no);
    rows.push_back({{"type_no", r.type_no},
                    {"curve_action", cycles_text(T4.geo[at.geo], blowdown::curve_action(at))},
                    {"line_cycles", r.line_cycles},
                    {"root_cycles", r.root_cycles},
                    {"t", r.count.t},
                    {"nfix", r.count.nfix},
                    {"I1", r.count.i1},
                    {"I2", r.count.i2},
                    {"N", r.count.n.to_string()},
                    {"deg3_type", r.deg3_type}});
  }
  return rows.dump(2) + "\n";
}

}  // namespace wdp::io
