#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Hand-transcribed reference tables, compiled into the library.
namespace wdp::golden {

struct AppendixRow {
  int degree = 0;
  int type_no = 0;
  std::string dynkin;  // e.g. "2A1+A2"
  int n_lines = 0;
  int stab_order = 0;
  std::string wd5_class;  // degree 4 only, "pos|neg" signed cycle type
  std::string chi_pic;    // e.g. "Phi1^4Phi2"
  std::string chi_pic_s;
  bool h1_nontrivial = false;
  std::string note;  // non-empty where the printed value was corrected
};

struct Table1Row {
  int type_no = 0;
  std::string frobenius;     // product of reflections, or "Id"
  std::string curve_action;  // cycles on negative curves, or "Id"
  int t = 0, nfix = 0, i1 = 0, i2 = 0;
  std::string n_poly;  // e.g. "q^2-7q+12"
  int deg3_type = 0;
  std::string note;  // non-empty where the printed row was corrected
};

struct SegreRow {
  std::string dynkin;
  int n_lines = 0;
  std::string segre;
};

const std::vector<std::pair<std::string_view, std::string_view>>& embedded_files();
std::string_view file(std::string_view name);

// Minimal CSV reader: comma separated, no quoting; header row dropped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

const std::vector<AppendixRow>& appendix();
std::vector<AppendixRow> appendix(int degree);
const std::vector<Table1Row>& table1();
const std::vector<SegreRow>& segre4();

}  // namespace wdp::golden
