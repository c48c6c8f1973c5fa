#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "wdp/typetab.hpp"

namespace wdp::zeta {

using Int = boost::multiprecision::cpp_int;

// Tr(w^n) on Pic, n = 1..nmax.
std::vector<int> trace_pic(const types::ArithmeticType& at, int nmax = 12);
// Tr(w^n) on the span of R_irr, i.e. the number of (-2)-curves fixed by w^n.
std::vector<int> trace_root(const types::ArithmeticType& at, int nmax = 12);

// #X(F_{q^n}) for the weak surface.
Int count_weak(const types::ArithmeticType& at, long long q, int n);
// #X_s(F_{q^n}) for the anticanonical model.
Int count_sing(const types::ArithmeticType& at, long long q, int n);

// Z(X_s, T) = 1 / denominator; coefficients little-endian in T.
std::vector<Int> zeta_denominator(const types::ArithmeticType& at, long long q);
// Counts recovered from the log expansion of 1 / denominator, n = 1..nmax.
std::vector<Int> counts_from_denominator(const std::vector<Int>& den, int nmax);

// Rational singular points over F_{q^n}: Dynkin components stable under w^n.
int sing_locus_count(const types::ArithmeticType& at, int n);

}  // namespace wdp::zeta
