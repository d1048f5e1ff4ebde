#include "aborders/checks.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "aborders/dyck.hpp"
#include "aborders/lattice.hpp"

namespace aborders {

namespace {

std::string param(const char* name, long value) {
    return std::string(name) + "=" + std::to_string(value);
}

struct ScanResult {
    std::uint64_t violations = 0;
    std::string first_counterexample;
};

// Per-word predicate over a full enumeration, split into contiguous index
// slices per worker; the merged result is independent of the worker count.
ScanResult parallel_scan(const Enumeration& enumeration, int workers,
                         const std::function<bool(const PartialWord&)>& ok) {
    workers = std::max(1, workers);
    const std::uint64_t total = enumeration.size();
    if (static_cast<std::uint64_t>(workers) > total)
        workers = static_cast<int>(std::max<std::uint64_t>(1, total));

    std::vector<ScanResult> locals(static_cast<std::size_t>(workers));
    const auto run_slice = [&](int t, std::uint64_t first, std::uint64_t last) {
        ScanResult& local = locals[static_cast<std::size_t>(t)];
        enumeration.for_each(first, last, [&](const PartialWord& w) {
            if (!ok(w)) {
                if (local.violations == 0) local.first_counterexample = w.str();
                ++local.violations;
            }
        });
    };

    if (workers == 1) {
        run_slice(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            threads.emplace_back(run_slice, t,
                                 total * static_cast<std::uint64_t>(t) /
                                     static_cast<std::uint64_t>(workers),
                                 total * static_cast<std::uint64_t>(t + 1) /
                                     static_cast<std::uint64_t>(workers));
        for (std::thread& th : threads) th.join();
    }

    ScanResult merged;
    for (const ScanResult& local : locals) {
        if (merged.violations == 0 && local.violations > 0)
            merged.first_counterexample = local.first_counterexample;
        merged.violations += local.violations;
    }
    return merged;
}

ReportRow scan_row(const char* check, std::string params, const ScanResult& result) {
    if (result.violations > 0) params += ";counterexample=" + result.first_counterexample;
    return {check, std::move(params), "0", std::to_string(result.violations),
            result.violations == 0};
}

}  // namespace

Report check_three_way_agreement(int n_max_total, int n_max_partial, int h_max,
                                 const CheckOptions& options) {
    const auto agree = [](const PartialWord& w) {
        const auto naive_min = naive_minimal_border(w);
        if (naive_min != minimal_abelian_border(w)) return false;
        if (naive_min != minimal_border_via_dyck(w)) return false;
        const auto naive_spec = naive_border_spectrum(w);
        if (naive_spec.lengths != border_spectrum(w).lengths) return false;
        return naive_spec.lengths == border_spectrum_via_dyck(w).lengths;
    };

    Report report;
    for (int n = 2; n <= n_max_total; ++n) {
        Enumeration enumeration({n, 2, 0}, options.cap);
        report.rows.push_back(scan_row("three_way_agreement",
                                       param("n", n) + ";" + param("h", 0),
                                       parallel_scan(enumeration, options.workers, agree)));
    }
    for (int n = 2; n <= n_max_partial; ++n)
        for (int h = 1; h <= std::min(h_max, n); ++h) {
            Enumeration enumeration({n, 2, h}, options.cap);
            report.rows.push_back(
                scan_row("three_way_agreement", param("n", n) + ";" + param("h", h),
                         parallel_scan(enumeration, options.workers, agree)));
        }
    return report;
}

Report check_minimal_total_counts(int n_max, const CheckOptions& options) {
    Report report;
    for (int n = 2; n <= n_max; ++n) {
        const auto tally = tally_minimal_border(n, 0, 2, options.workers, options.cap);
        BigInt formula_sum = 0;
        BigInt tallied_sum(static_cast<unsigned long>(tally[0]));
        for (int k = 1; k <= n / 2; ++k) {
            const BigInt expected = count_minimal_border_total(n, k);
            const BigInt actual(static_cast<unsigned long>(tally[static_cast<std::size_t>(k)]));
            formula_sum += expected;
            tallied_sum += actual;
            report.rows.push_back({"minimal_border_total",
                                   param("n", n) + ";" + param("k", k), expected.get_str(),
                                   actual.get_str(), expected == actual});
        }
        // Completeness: minimal borders beyond n/2 are impossible, so the
        // per-k counts plus the unbordered count must exhaust all 2^n words.
        const BigInt expected_total = power(2, n);
        const BigInt formula_total = formula_sum + count_unbordered(n);
        report.rows.push_back({"minimal_border_total_completeness", param("n", n),
                               expected_total.get_str(), tallied_sum.get_str(),
                               formula_total == expected_total &&
                                   tallied_sum == expected_total});
    }
    return report;
}

Report check_unbordered_counts(int n_max, const CheckOptions& options) {
    Report report;
    for (int n = 1; n <= n_max; ++n) {
        const auto tally = tally_minimal_border(n, 0, 2, options.workers, options.cap);
        const BigInt expected = count_unbordered(n);
        const BigInt actual(static_cast<unsigned long>(tally[0]));
        report.rows.push_back({"unbordered_total", param("n", n), expected.get_str(),
                               actual.get_str(), expected == actual});
    }
    return report;
}

Report check_no_unbordered_partial(int n_max, int h_max, const CheckOptions& options) {
    Report report;
    for (int n = 2; n <= n_max; ++n)
        for (int h = 1; h <= std::min(h_max, n); ++h) {
            const auto tally = tally_minimal_border(n, h, 2, options.workers, options.cap);
            report.rows.push_back({"no_unbordered_partial",
                                   param("n", n) + ";" + param("h", h), "0",
                                   std::to_string(tally[0]), tally[0] == 0});
        }
    return report;
}

Report check_m_border_counts(int n_max, const CheckOptions& options) {
    Report report;
    for (int n = 1; n <= n_max; ++n) {
        const auto tally = tally_distinct_borders(n, 0, 2, options.workers, options.cap);
        for (int m = 0; m <= n - 1; ++m) {
            const BigInt expected = count_with_m_borders(n, m);
            const BigInt actual(static_cast<unsigned long>(tally[static_cast<std::size_t>(m)]));
            report.rows.push_back({"m_distinct_borders",
                                   param("n", n) + ";" + param("m", m), expected.get_str(),
                                   actual.get_str(), expected == actual});
        }
    }
    return report;
}

Report check_g2_counts(int k_max, int j_cap, const CheckOptions& options) {
    Report report;
    for (int k = 2; k <= k_max; ++k)
        for (int j = 0; j <= std::min(k, j_cap); ++j) {
            const BigInt expected = g2(k, j);
            const BigInt actual =
                oracle_count_minimal(2 * k, k, j, 2, options.workers, options.cap);
            report.rows.push_back({"g2", param("k", k) + ";" + param("j", j),
                                   expected.get_str(), actual.get_str(),
                                   expected == actual});
        }
    return report;
}

Report check_f_forms_identity(int n_max, int h_max) {
    const GFunction g = [](int k, int j) { return g2(k, j); };
    Report report;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 2; k <= n / 2; ++k)
            for (int h = 0; h <= h_max; ++h) {
                const BigInt sum_form = count_minimal_border_partial(n, k, h, 2, g);
                const BigInt product_form = count_minimal_border_partial_binary(n, k, h);
                report.rows.push_back(
                    {"f_sum_equals_product",
                     param("n", n) + ";" + param("k", k) + ";" + param("h", h),
                     product_form.get_str(), sum_form.get_str(), sum_form == product_form});
            }
    return report;
}

Report check_one_hole_max_borders(int n_max, const CheckOptions& options) {
    Report report;
    for (int n = 2; n <= n_max; n += 2) {
        const auto tally = tally_distinct_borders(n, 1, 2, options.workers, options.cap);
        const BigInt expected = count_one_hole_max_borders_even(n);
        const BigInt actual(static_cast<unsigned long>(tally[static_cast<std::size_t>(n - 1)]));
        report.rows.push_back({"one_hole_max_borders", param("n", n), expected.get_str(),
                               actual.get_str(), expected == actual});

        // Table buckets: unique words with the full spectrum, by hole position.
        std::vector<std::uint64_t> buckets(static_cast<std::size_t>(n / 2), 0);
        Enumeration enumeration({n, 2, 1, WordFilter::unique}, options.cap);
        enumeration.for_each([&](const PartialWord& w) {
            if (naive_border_spectrum(w).count() != n - 1) return;
            for (int i = 0; i < n / 2; ++i)
                if (w.is_hole(i)) ++buckets[static_cast<std::size_t>(i)];
        });
        const std::vector<BigInt> expected_buckets = unique_max_borders_by_position(n);
        for (int i = 0; i < n / 2; ++i) {
            const BigInt actual_bucket(
                static_cast<unsigned long>(buckets[static_cast<std::size_t>(i)]));
            report.rows.push_back({"one_hole_max_borders_unique_by_position",
                                   param("n", n) + ";" + param("i", i),
                                   expected_buckets[static_cast<std::size_t>(i)].get_str(),
                                   actual_bucket.get_str(),
                                   expected_buckets[static_cast<std::size_t>(i)] ==
                                       actual_bucket});
        }
    }
    return report;
}

Report check_unique_minimal_counts(int n_max, const CheckOptions& options) {
    Report report;
    for (int n = 6; n <= n_max; n += 2) {
        std::uint64_t no_ones = 0, one_zero = 0, two_zeros = 0, one_one = 0;
        ScanResult structure;

        Enumeration enumeration({n, 2, 1, WordFilter::unique}, options.cap);
        enumeration.for_each([&](const PartialWord& w) {
            if (naive_minimal_border(w) != n - 1) return;

            int zeros = 0, ones = 0;
            for (int i = 0; i < n / 2; ++i) {
                if (w.is_hole(i)) continue;
                ++(w[i] == 0 ? zeros : ones);
            }
            if (ones == 0) ++no_ones;
            if (zeros == 1) ++one_zero;
            if (zeros == 2) ++two_zeros;
            if (ones == 1) ++one_one;

            // Starts with 0, so it must end with 11 and the halves must obey
            // |u|_0 > |v|_0 and |u|_1 < |v|_1 - 1.
            const ParikhVector u = parikh(w.prefix(n / 2)), v = parikh(w.suffix(n / 2));
            const bool ok = w[n - 2] == 1 && w[n - 1] == 1 && u[0] > v[0] &&
                            u[1] < v[1] - 1;
            if (!ok) {
                if (structure.violations == 0) structure.first_counterexample = w.str();
                ++structure.violations;
            }
        });

        const UniqueMinimalCounts expected = unique_minimal_nminus1_counts(n);
        const auto add = [&](const char* check, const BigInt& want, std::uint64_t got) {
            const BigInt actual(static_cast<unsigned long>(got));
            report.rows.push_back(
                {check, param("n", n), want.get_str(), actual.get_str(), want == actual});
        };
        add("unique_minimal_no_ones_first_half", expected.no_ones_first_half, no_ones);
        add("unique_minimal_one_zero_first_half", expected.one_zero_first_half, one_zero);
        add("unique_minimal_two_zeros_first_half", expected.two_zeros_first_half, two_zeros);
        add("unique_minimal_one_one_first_half", expected.one_one_first_half, one_one);
        report.rows.push_back(scan_row("unique_minimal_ends_with_11", param("n", n), structure));
    }
    return report;
}

Report check_at_least_h_borders(int n_max, int h_max, const CheckOptions& options) {
    Report report;
    for (int n = 2; n <= n_max; ++n)
        for (int h = 1; h <= std::min(h_max, n - 1); ++h) {
            Enumeration enumeration({n, 2, h}, options.cap);
            const auto has_guaranteed_lengths = [n, h](const PartialWord& w) {
                const BorderSpectrum spectrum = naive_border_spectrum(w);
                for (int k = n - h; k <= n - 1; ++k)
                    if (!spectrum.contains(k)) return false;
                return true;
            };
            report.rows.push_back(scan_row(
                "at_least_h_borders", param("n", n) + ";" + param("h", h),
                parallel_scan(enumeration, options.workers, has_guaranteed_lengths)));
        }
    return report;
}

namespace {

// Peak counts over all Dyck words of length 2n, tallied with an independent
// bit-level balance test (no dyck-module code).
std::vector<std::uint64_t> dyck_peak_histogram(int n) {
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n) + 1, 0);
    const int length = 2 * n;
    for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
        int balance = 0, peaks = 0;
        bool valid = true;
        int prev = -1;
        for (int i = 0; i < length && valid; ++i) {
            const int b = (bits >> i) & 1;  // 0 = open step, 1 = close step
            balance += b == 0 ? 1 : -1;
            if (balance < 0) valid = false;
            if (prev == 0 && b == 1) ++peaks;
            prev = b;
        }
        if (valid && balance == 0) ++histogram[static_cast<std::size_t>(peaks)];
    }
    return histogram;
}

}  // namespace

Report check_narayana(int n_max_identity, int n_max_enum) {
    Report report;
    for (int n = 1; n <= n_max_identity; ++n) {
        BigInt sum = 0;
        for (int r = 1; r <= n; ++r) sum += narayana(n, r);
        const BigInt expected = catalan(n);
        report.rows.push_back({"narayana_catalan_identity", param("n", n),
                               expected.get_str(), sum.get_str(), sum == expected});
    }
    for (int n = 1; n <= n_max_enum; ++n) {
        const auto histogram = dyck_peak_histogram(n);
        for (int r = 1; r <= n; ++r) {
            const BigInt expected = narayana(n, r);
            const BigInt actual(
                static_cast<unsigned long>(histogram[static_cast<std::size_t>(r)]));
            report.rows.push_back({"narayana_peak_counts",
                                   param("n", n) + ";" + param("r", r), expected.get_str(),
                                   actual.get_str(), expected == actual});
        }
    }
    return report;
}

Report check_conjecture(int n_max, const CheckOptions& options) {
    return check_conjecture_a191386(n_max, options.workers, options.cap);
}

Report check_structural(const std::vector<int>& lengths, const CheckOptions& options) {
    Report report;
    for (int n : lengths) report.append(check_structural_lemmas(n, options.cap));
    return report;
}

}  // namespace aborders
