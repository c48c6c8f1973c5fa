#pragma once

#include <string>

#include "wdp/blowdown.hpp"
#include "wdp/count.hpp"
#include "wdp/planeconf.hpp"
#include "wdp/quadmod.hpp"
#include "wdp/synth4.hpp"
#include "wdp/typetab.hpp"

// JSON and CSV forms of the artifacts. All output is deterministic: keys in
// fixed order, field elements in the "[c0,c1,...]" form of gf::Field.
namespace wdp::io {

// {p, m, modulus, Q0, Qinf}; parse throws std::invalid_argument on bad input.
std::string pair_json(const quad::Pair& P);
quad::Pair parse_pair(const std::string& text);

// One row per arithmetic type with a published number.
std::string types_csv(int degree);
std::string types_json(int degree);

// {counts_weak, counts_sing, zeta_denominator}
std::string zeta_json(const types::ArithmeticType& at, long long q, int nmax);

std::string synth_json(const types::ArithmeticType& at, const synth4::Result& r);
std::string report_json(const count::Report& r);

std::string plan_json(const plane::BlowupPlan& plan);
std::string realization_json(const blowdown::Realization& r);

std::string table1_csv();
std::string table1_json();

}  // namespace wdp::io
