#include "topocode/rates.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace topocode {

double hamming_bound_rate(double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("hamming_bound_rate: x must lie in (0, 1)");
    }
    const double h2 = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    return 1.0 - x * std::log2(3.0) - h2;
}

bool finite_hamming_feasible(long long n, long long k, long long t) {
    if (n < 0 || k < 0 || k > n || t < 0) {
        throw std::invalid_argument("finite_hamming_feasible: need 0 <= k <= n and t >= 0");
    }
    mpz_class sum = 0;
    mpz_class pow3 = 1;
    for (long long j = 0; j <= t; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(j));
        sum += pow3 * binom;
        pow3 *= 3;
    }
    mpz_class lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, static_cast<unsigned long>(k));
    lhs *= sum;
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return lhs <= rhs;
}

namespace {

RateRow make_row(std::string family, long long n, long long k, long long d, bool verified) {
    RateRow row;
    row.family = std::move(family);
    row.n = n;
    row.k = k;
    row.d = d;
    row.t = (d - 1) / 2;
    row.verified = verified;
    row.t_over_n = Rational(row.t, n);
    row.k_over_n = Rational(k, n);
    return row;
}

}  // namespace

std::vector<RateRow> figure1_table() {
    std::vector<RateRow> rows;
    rows.push_back(make_row("complete(s=5)", 10, 2, 3, true));
    for (long long t = 2; t <= 21; ++t) {
        const long long d = 2 * t + 1;
        const long long n = d * d + 1;
        rows.push_back(make_row("optimal-toric(d=" + std::to_string(d) + ")", n, 2, d, d <= 7));
    }
    for (long long s = 9; s <= 85; s += 4) {
        const long long n = s * (s - 1) / 2;
        const long long k = n - 2 * (s - 1);
        rows.push_back(make_row("complete(s=" + std::to_string(s) + ")", n, k, 3, s <= 17));
    }
    return rows;
}

std::string rates_csv(const std::vector<RateRow>& rows) {
    std::ostringstream out;
    out << "family,n,k,d,verified,t_over_n,k_over_n,t_over_n_frac,k_over_n_frac\n";
    for (const RateRow& row : rows) {
        out << row.family << ',' << row.n << ',' << row.k << ',' << row.d << ','
            << (row.verified ? "verified" : "formula") << ',' << row.t_over_n.decimal(6) << ','
            << row.k_over_n.decimal(6) << ',' << row.t_over_n.fraction() << ','
            << row.k_over_n.fraction() << "\n";
    }
    return out.str();
}

std::string hamming_bound_csv(double from, double to, int samples) {
    if (!(from > 0.0 && to < 1.0 && from <= to)) {
        throw std::domain_error("hamming_bound_csv: need 0 < from <= to < 1");
    }
    if (samples < 1 || (samples == 1 && from != to)) {
        throw std::invalid_argument("hamming_bound_csv: need at least 2 samples for a range");
    }
    std::ostringstream out;
    out << "x,rate_bound\n";
    char buffer[64];
    for (int i = 0; i < samples; ++i) {
        const double x =
            samples == 1 ? from : from + (to - from) * static_cast<double>(i) / (samples - 1);
        std::snprintf(buffer, sizeof(buffer), "%.9f,%.9f\n", x, hamming_bound_rate(x));
        out << buffer;
    }
    return out.str();
}

}  // namespace topocode
