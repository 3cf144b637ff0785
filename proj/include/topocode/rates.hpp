#pragma once

#include <string>
#include <vector>

#include "topocode/rational.hpp"

namespace topocode {

/// Asymptotic quantum Hamming bound on the rate k/n at error fraction
/// x = t/n: 1 - x log2(3) - H2(x). Defined on (0, 1).
double hamming_bound_rate(double x);

/// Finite-length quantum Hamming bound, evaluated in exact integer
/// arithmetic: 2^k * sum_{j<=t} 3^j C(n, j) <= 2^n.
bool finite_hamming_feasible(long long n, long long k, long long t);

struct RateRow {
    std::string family;
    long long n = 0;
    long long k = 0;
    long long d = 0;
    long long t = 0;
    bool verified = false;  // distance machine-verified vs. formula-only
    Rational t_over_n;
    Rational k_over_n;
};

/// The plotted point sets: the K5 code, the optimal toric family for
/// t = 2..21, and the complete-graph codes K_s for s = 9..85 step 4.
std::vector<RateRow> figure1_table();

/// CSV with header family,n,k,d,verified,t_over_n,k_over_n and the exact
/// fractions appended as extra p/q columns. Decimals use 6 places.
std::string rates_csv(const std::vector<RateRow>& rows);

/// CSV sampling of the bound curve: header x,rate_bound, 9 decimal places.
std::string hamming_bound_csv(double from, double to, int samples);

}  // namespace topocode
