#include "aborders/counting.hpp"

#include <stdexcept>

#include "aborders/lattice.hpp"

namespace aborders {

BigInt count_minimal_border_total(int n, int k) {
    if (n < 2) throw std::domain_error("count_minimal_border_total: n must be >= 2");
    if (k < 1 || k > n / 2)
        throw std::domain_error("count_minimal_border_total: k must be in 1..n/2");
    return power(2, n - 2 * k + 1) * catalan(k - 1);
}

BigInt count_unbordered(int n) {
    if (n < 1) throw std::domain_error("count_unbordered: n must be >= 1");
    if (n % 2 == 0) return binomial(n, n / 2);
    return 2 * binomial(n - 1, (n - 1) / 2);
}

BigInt count_with_m_borders(int n, int m) {
    if (n < 1) throw std::domain_error("count_with_m_borders: n must be >= 1");
    if (m < 0 || m > n - 1)
        throw std::domain_error("count_with_m_borders: m must be in 0..n-1");

    if (n % 2 == 0 && m % 2 == 0)
        return power(2, m / 2 + 1) * binomial(n - m / 2 - 1, n / 2);
    if (n % 2 == 0 && m % 2 == 1) {
        // 2^((m-1)/2) (m+1) A! / (B! C!) with A = B + C - 1, evaluated as
        // (m+1) binom(A, C) / B to stay in exact integer products.
        const long b = n / 2, c = (n - m - 1) / 2, a = b + c - 1;
        return power(2, (m - 1) / 2) * exact_div(BigInt(m + 1) * binomial(a, c), BigInt(b));
    }
    if (n % 2 == 1 && m % 2 == 0)
        return power(2, m / 2 + 1) * binomial(n - m / 2 - 1, (n - 1) / 2);
    return 0;  // odd length, odd border count
}

BigInt g2(int k, int j) {
    if (k < 2) throw std::domain_error("g2: k must be >= 2 (use g_sigma_k1 for k = 1)");
    if (j < 0) throw std::domain_error("g2: j must be >= 0");
    return 2 * binomial(k, j) * catalan(k - 1);
}

BigInt g_sigma_k1(int sigma, int j, int h) {
    if (sigma < 1) throw std::domain_error("g_sigma_k1: sigma must be >= 1");
    if (j < 0) throw std::domain_error("g_sigma_k1: j must be >= 0");
    if (h < 1) throw std::domain_error("g_sigma_k1: h must be >= 1");
    if (j == 0) return sigma;
    if (j == 1) return 2 * sigma;
    if (h == 1) throw std::domain_error("g_sigma_k1: undefined for h = 1, j >= 2");
    return j == 2 ? 1 : 0;
}

BigInt count_minimal_border_partial(int n, int k, int h, int sigma, const GFunction& g) {
    if (k < 1) throw std::domain_error("count_minimal_border_partial: k must be >= 1");
    if (n < 2 * k) throw std::domain_error("count_minimal_border_partial: n must be >= 2k");
    if (h < 0) throw std::domain_error("count_minimal_border_partial: h must be >= 0");
    if (sigma < 1) throw std::domain_error("count_minimal_border_partial: sigma must be >= 1");

    BigInt total = 0;
    for (int j = 0; j <= h; ++j) {
        const BigInt interior = binomial(n - 2 * k, h - j);
        if (interior == 0) continue;  // also keeps the exponent non-negative
        total += g(k, j) * interior * power(sigma, n - 2 * k - h + j);
    }
    return total;
}

BigInt count_minimal_border_partial_binary(int n, int k, int h) {
    if (k < 2) throw std::domain_error("count_minimal_border_partial_binary: k must be >= 2");
    if (n < 2 * k)
        throw std::domain_error("count_minimal_border_partial_binary: n must be >= 2k");
    if (h < 0) throw std::domain_error("count_minimal_border_partial_binary: h must be >= 0");

    BigInt sum = 0;
    for (int j = 0; j <= h; ++j) {
        const BigInt interior = binomial(n - 2 * k, h - j);
        if (interior == 0) continue;
        // 2^(n-2k+1) * 2^(j-h), folded so each term stays integral.
        sum += binomial(k, j) * interior * power(2, n - 2 * k + 1 + j - h);
    }
    return catalan(k - 1) * sum;
}

BigInt count_one_hole_max_borders_even(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("count_one_hole_max_borders_even: n must be even and >= 2");
    return 4 * (power(3, n / 2) - power(2, n / 2));
}

std::vector<BigInt> unique_max_borders_by_position(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("unique_max_borders_by_position: n must be even and >= 2");
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(n / 2));
    for (int i = 0; i < n / 2; ++i)
        counts.push_back(power(2, i) * power(3, n / 2 - 1 - i));
    return counts;
}

UniqueMinimalCounts unique_minimal_nminus1_counts(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::domain_error("unique_minimal_nminus1_counts: n must be even and >= 4");
    const long half = n / 2;
    UniqueMinimalCounts counts;
    counts.no_ones_first_half = BigInt(half - 1) * power(2, half - 2);
    counts.one_zero_first_half = 1;
    counts.two_zeros_first_half = BigInt(n) * n / 4 - half - 2;
    counts.one_one_first_half = BigInt(half - 2) * (power(2, half - 2) * (half - 3) + 1);
    return counts;
}

bool is_unique_one_hole(const PartialWord& w) {
    if (w.hole_count() != 1) return false;
    int hole_pos = -1;
    int first_letter = -1;
    for (int i = 0; i < w.size(); ++i) {
        if (w.is_hole(i))
            hole_pos = i;
        else if (first_letter == -1)
            first_letter = w[i];
    }
    return hole_pos < w.size() / 2 && first_letter == 0;
}

namespace detail {

BigInt path_pairs_intersecting(int p, int q) {
    if (p < 1) throw std::domain_error("path_pairs_intersecting: p must be >= 1");
    if (q < 0 || q > p) throw std::domain_error("path_pairs_intersecting: q must be in 0..p");
    const BigInt ending_anywhere = power(2, q) * binomial(2 * p - q, p);
    if (q == 0) return ending_anywhere;
    const BigInt ending_together = exact_div(
        BigInt(q) * power(2, q) * factorial(2 * p - q - 1), factorial(p) * factorial(p - q));
    return ending_anywhere - ending_together;
}

}  // namespace detail

std::string ParamKey::str() const {
    std::string out;
    for (const auto& [name, value] : values) {
        if (!out.empty()) out.push_back(';');
        out += name;
        out.push_back('=');
        out += std::to_string(value);
    }
    return out;
}

void CountTable::record_formula(const ParamKey& key, BigInt value) {
    entries_[key].formula = std::move(value);
}

void CountTable::record_oracle(const ParamKey& key, BigInt value) {
    entries_[key].oracle = std::move(value);
}

bool CountTable::consistent() const {
    for (const auto& [key, entry] : entries_)
        if (entry.formula && entry.oracle && *entry.formula != *entry.oracle) return false;
    return true;
}

}  // namespace aborders
