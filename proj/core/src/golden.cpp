#include "wdp/golden.hpp"

#include <stdexcept>

namespace wdp::golden {

std::string_view file(std::string_view name) {
  for (auto& [n, body] : embedded_files())
    if (n == name) return body;
  throw std::out_of_range("no embedded file " + std::string(name));
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    size_t s = 0;
    while (true) {
      size_t c = line.find(',', s);
      cells.emplace_back(line.substr(s, c == std::string_view::npos ? std::string_view::npos : c - s));
      if (c == std::string_view::npos) break;
      s = c + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

const std::vector<AppendixRow>& appendix() {
  static const std::vector<AppendixRow> rows = [] {
    std::vector<AppendixRow> out;
    for (auto& c : parse_csv(file("appendix.csv"))) {
      if (c.size() != 10) throw std::runtime_error("appendix.csv: bad row");
      AppendixRow r;
      r.degree = std::stoi(c[0]);
      r.type_no = std::stoi(c[1]);
      r.dynkin = c[2];
      r.n_lines = std::stoi(c[3]);
      r.stab_order = std::stoi(c[4]);
      r.wd5_class = c[5];
      r.chi_pic = c[6];
      r.chi_pic_s = c[7];
      r.h1_nontrivial = c[8] == "*";
      r.note = c[9];
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

std::vector<AppendixRow> appendix(int degree) {
  std::vector<AppendixRow> out;
  for (auto& r : appendix())
    if (r.degree == degree) out.push_back(r);
  return out;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    for (auto& c : parse_csv(file("table1.csv"))) {
      if (c.size() != 10) throw std::runtime_error("table1.csv: bad row");
      Table1Row r;
      r.type_no = std::stoi(c[0]);
      r.frobenius = c[1];
      r.curve_action = c[2];
      r.t = std::stoi(c[3]);
      r.nfix = std::stoi(c[4]);
      r.i1 = std::stoi(c[5]);
      r.i2 = std::stoi(c[6]);
      r.n_poly = c[7];
      r.deg3_type = std::stoi(c[8]);
      r.note = c[9];
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

const std::vector<SegreRow>& segre4() {
  static const std::vector<SegreRow> rows = [] {
    std::vector<SegreRow> out;
    for (auto& c : parse_csv(file("segre4.csv"))) {
      if (c.size() != 3) throw std::runtime_error("segre4.csv: bad row");
      out.push_back({c[0], std::stoi(c[1]), c[2]});
    }
    return out;
  }();
  return rows;
}

}  // namespace wdp::golden
