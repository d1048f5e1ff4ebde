#include "aborders/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

namespace aborders {

Enumeration::Enumeration(EnumerationSpec spec, std::uint64_t cap) : spec_(spec) {
    if (spec_.n < 1 || spec_.n > 64)
        throw std::invalid_argument("enumeration: n must be in 1..64");
    if (spec_.sigma < 1) throw std::invalid_argument("enumeration: sigma must be >= 1");
    if (spec_.holes < 0 || spec_.holes > spec_.n)
        throw std::invalid_argument("enumeration: hole count must be in 0..n");
    if (spec_.filter == WordFilter::hole_position &&
        (spec_.hole_position < 0 || spec_.hole_position >= spec_.n))
        throw std::invalid_argument("enumeration: hole position out of range");

    const BigInt total = binomial(spec_.n, spec_.holes) * power(spec_.sigma, spec_.n - spec_.holes);
    if (total > BigInt(static_cast<unsigned long>(cap)))
        throw std::length_error("enumeration size " + total.get_str() +
                                " exceeds the cap of " + std::to_string(cap));
    size_ = total.get_ui();

    choose_.assign(static_cast<std::size_t>(spec_.n) + 1, {});
    for (int i = 0; i <= spec_.n; ++i) {
        choose_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            choose_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                choose_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                choose_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    sigma_pow_.assign(static_cast<std::size_t>(spec_.n) + 1, 1);
    for (int i = 1; i <= spec_.n; ++i)
        sigma_pow_[static_cast<std::size_t>(i)] =
            sigma_pow_[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(spec_.sigma);
}

PartialWord Enumeration::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("enumeration index out of range");
    std::vector<std::int8_t> symbols(static_cast<std::size_t>(spec_.n), 0);
    int holes_left = spec_.holes;
    for (int pos = 0; pos < spec_.n; ++pos) {
        const std::size_t rest = static_cast<std::size_t>(spec_.n - pos - 1);
        if (holes_left > 0) {
            // Words placing a hole here come first in lexicographic order.
            const std::uint64_t with_hole =
                choose_[rest][static_cast<std::size_t>(holes_left - 1)] *
                sigma_pow_[rest - static_cast<std::size_t>(holes_left - 1)];
            if (index < with_hole) {
                symbols[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(kHole);
                --holes_left;
                continue;
            }
            index -= with_hole;
        }
        assert(static_cast<std::size_t>(holes_left) <= rest);
        const std::uint64_t per_letter = choose_[rest][static_cast<std::size_t>(holes_left)] *
                                         sigma_pow_[rest - static_cast<std::size_t>(holes_left)];
        symbols[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(index / per_letter);
        index %= per_letter;
    }
    return PartialWord(std::move(symbols), Alphabet(spec_.sigma));
}

bool Enumeration::passes_filter(const PartialWord& w) const {
    switch (spec_.filter) {
        case WordFilter::none:
            return true;
        case WordFilter::unique:
            return is_unique_one_hole(w);
        case WordFilter::starts_with_zero:
            return w.size() > 0 && w[0] == 0;
        case WordFilter::hole_position:
            return w.is_hole(spec_.hole_position);
    }
    return false;
}

void Enumeration::for_each(std::uint64_t first, std::uint64_t last,
                           const std::function<void(const PartialWord&)>& fn) const {
    last = std::min(last, size_);
    for (std::uint64_t i = first; i < last; ++i) {
        PartialWord w = at(i);
        if (passes_filter(w)) fn(w);
    }
}

void Enumeration::for_each(const std::function<void(const PartialWord&)>& fn) const {
    for_each(0, size_, fn);
}

BorderSpectrum naive_border_spectrum(const PartialWord& w) {
    const int n = w.size();
    if (n < 1) throw std::invalid_argument("naive_border_spectrum: empty word");
    BorderSpectrum spectrum;
    spectrum.word_length = n;
    for (int k = 1; k <= n - 1; ++k)
        if (abelian_compatible(w.prefix(k), w.suffix(k))) spectrum.lengths.push_back(k);
    return spectrum;
}

std::optional<int> naive_minimal_border(const PartialWord& w) {
    const int n = w.size();
    if (n < 1) throw std::invalid_argument("naive_minimal_border: empty word");
    for (int k = 1; k <= n - 1; ++k)
        if (abelian_compatible(w.prefix(k), w.suffix(k))) return k;
    return std::nullopt;
}

namespace {

// Static index slices per worker, local tallies merged in worker order: the
// result does not depend on the worker count.
std::vector<std::uint64_t> parallel_tally(
    const Enumeration& enumeration, int workers, std::size_t slots,
    const std::function<void(const PartialWord&, std::vector<std::uint64_t>&)>& tally) {
    workers = std::max(1, workers);
    const std::uint64_t total = enumeration.size();
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(std::max<std::uint64_t>(1, total));

    std::vector<std::vector<std::uint64_t>> locals(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(slots, 0));
    if (workers == 1) {
        enumeration.for_each([&](const PartialWord& w) { tally(w, locals[0]); });
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t first = total * static_cast<std::uint64_t>(t) /
                                        static_cast<std::uint64_t>(workers);
            const std::uint64_t last = total * static_cast<std::uint64_t>(t + 1) /
                                       static_cast<std::uint64_t>(workers);
            threads.emplace_back([&, t, first, last] {
                enumeration.for_each(first, last, [&](const PartialWord& w) {
                    tally(w, locals[static_cast<std::size_t>(t)]);
                });
            });
        }
        for (std::thread& th : threads) th.join();
    }

    std::vector<std::uint64_t> merged(slots, 0);
    for (const auto& local : locals)
        for (std::size_t s = 0; s < slots; ++s) merged[s] += local[s];
    return merged;
}

}  // namespace

std::vector<std::uint64_t> tally_minimal_border(int n, int h, int sigma, int workers,
                                                std::uint64_t cap) {
    Enumeration enumeration({n, sigma, h}, cap);
    return parallel_tally(enumeration, workers, static_cast<std::size_t>(n),
                          [](const PartialWord& w, std::vector<std::uint64_t>& local) {
                              const std::optional<int> k = naive_minimal_border(w);
                              ++local[static_cast<std::size_t>(k.value_or(0))];
                          });
}

std::vector<std::uint64_t> tally_distinct_borders(int n, int h, int sigma, int workers,
                                                  std::uint64_t cap) {
    Enumeration enumeration({n, sigma, h}, cap);
    return parallel_tally(enumeration, workers, static_cast<std::size_t>(n),
                          [](const PartialWord& w, std::vector<std::uint64_t>& local) {
                              ++local[static_cast<std::size_t>(
                                  naive_border_spectrum(w).count())];
                          });
}

BigInt oracle_count_minimal(int n, int k, int h, int sigma, int workers, std::uint64_t cap) {
    if (k < 1 || k > n - 1) throw std::domain_error("oracle_count_minimal: k must be in 1..n-1");
    const auto tally = tally_minimal_border(n, h, sigma, workers, cap);
    return BigInt(static_cast<unsigned long>(tally[static_cast<std::size_t>(k)]));
}

BigInt oracle_count_m_borders(int n, int m, int h, int sigma, int workers, std::uint64_t cap) {
    if (m < 0 || m > n - 1)
        throw std::domain_error("oracle_count_m_borders: m must be in 0..n-1");
    const auto tally = tally_distinct_borders(n, h, sigma, workers, cap);
    return BigInt(static_cast<unsigned long>(tally[static_cast<std::size_t>(m)]));
}

GFunction oracle_g(int sigma, std::uint64_t cap) {
    auto memo = std::make_shared<std::map<std::pair<int, int>, BigInt>>();
    return [sigma, cap, memo](int k, int j) -> BigInt {
        if (const auto it = memo->find({k, j}); it != memo->end()) return it->second;
        BigInt value = 0;
        if (j <= 2 * k) value = oracle_count_minimal(2 * k, k, j, sigma, 1, cap);
        (*memo)[{k, j}] = value;
        return value;
    };
}

namespace {

// Sums the number of length-1 ascents over every completion; count carries
// the ascents already closed on the path so far.
long long dispersed_walk(int remaining, int height, int up_run, int count) {
    if (height > remaining) return 0;  // cannot come back down to zero
    if (remaining == 0) return count + (up_run == 1 ? 1 : 0);
    long long total = dispersed_walk(remaining - 1, height + 1, up_run + 1, count);
    if (height > 0)
        total += dispersed_walk(remaining - 1, height - 1, 0, count + (up_run == 1 ? 1 : 0));
    else
        total += dispersed_walk(remaining - 1, 0, 0, count);  // flat step, ground level only
    return total;
}

}  // namespace

BigInt a191386(int n) {
    if (n < 0) throw std::domain_error("a191386: n must be >= 0");
    if (n > kA191386Cap)
        throw std::length_error("a191386: n exceeds the enumeration cap of " +
                                std::to_string(kA191386Cap));
    return BigInt(static_cast<long>(dispersed_walk(n, 0, 0, 0)));
}

const std::vector<long>& a191386_embedded() {
    // Published values for n = 0..14.
    static const std::vector<long> table = {0,   0,   1,    2,    5,    10,   23,  46,
                                            102, 204, 443,  886,  1898, 3796, 8054};
    return table;
}

A191386Table A191386Table::generate(int n_max) {
    A191386Table table;
    for (int n = 0; n <= n_max; ++n) table.values.push_back(a191386(n));
    return table;
}

bool A191386Table::matches_embedded_prefix() const {
    const auto& embedded = a191386_embedded();
    const std::size_t limit = std::min(values.size(), embedded.size());
    for (std::size_t i = 0; i < limit; ++i)
        if (values[i] != embedded[i]) return false;
    return true;
}

Report check_conjecture_a191386(int n_max, int workers, std::uint64_t cap) {
    Report report;
    const auto& embedded = a191386_embedded();
    for (std::size_t i = 0; i < embedded.size(); ++i) {
        const BigInt generated = a191386(static_cast<int>(i));
        report.rows.push_back({"a191386_embedded", "n=" + std::to_string(i),
                               std::to_string(embedded[i]), generated.get_str(),
                               generated == embedded[i]});
    }

    for (int n = 3; n <= n_max; ++n) {
        const auto tally = tally_minimal_border(n, 1, 2, workers, cap);
        const auto add_case = [&](int k, int multiple, int table_index) {
            const BigInt expected = multiple * a191386(table_index);
            const BigInt actual(static_cast<unsigned long>(tally[static_cast<std::size_t>(k)]));
            report.rows.push_back({"conjecture_one_hole_minimal",
                                   "n=" + std::to_string(n) + ";k=" + std::to_string(k),
                                   expected.get_str(), actual.get_str(), expected == actual});
        };
        if (n % 2 == 1) {
            add_case(n - 1, 1, n);
            if (n >= 5) add_case(n - 2, 2, n - 2);
        } else {
            if (n >= 4) add_case(n - 1, 2, n - 1);
            if (n >= 6) add_case(n - 2, 4, n - 3);
        }
    }
    return report;
}

namespace {

PartialWord insert_middle_pair(const PartialWord& w, int a, int b) {
    const int n = w.size();
    std::vector<std::int8_t> symbols;
    symbols.reserve(static_cast<std::size_t>(n) + 2);
    symbols.insert(symbols.end(), w.symbols().begin(), w.symbols().begin() + n / 2);
    symbols.push_back(static_cast<std::int8_t>(a));
    symbols.push_back(static_cast<std::int8_t>(b));
    symbols.insert(symbols.end(), w.symbols().begin() + n / 2, w.symbols().end());
    return PartialWord(std::move(symbols), w.alphabet());
}

PartialWord insert_symmetric_pair(const PartialWord& w, int j, int a, int b) {
    const int n = w.size();
    std::vector<std::int8_t> symbols;
    symbols.reserve(static_cast<std::size_t>(n) + 2);
    symbols.insert(symbols.end(), w.symbols().begin(), w.symbols().begin() + j);
    symbols.push_back(static_cast<std::int8_t>(a));
    symbols.insert(symbols.end(), w.symbols().begin() + j, w.symbols().begin() + (n - j));
    symbols.push_back(static_cast<std::int8_t>(b));
    symbols.insert(symbols.end(), w.symbols().begin() + (n - j), w.symbols().end());
    return PartialWord(std::move(symbols), w.alphabet());
}

struct LemmaTally {
    long violations = 0;
    std::string counterexample;

    void fail(const PartialWord& w) {
        if (violations == 0) counterexample = w.str();
        ++violations;
    }
    void note(bool ok, const PartialWord& w) {
        if (!ok) fail(w);
    }
};

}  // namespace

Report check_structural_lemmas(int n, std::uint64_t cap) {
    if (n < 6 || n % 2 != 0)
        throw std::domain_error("check_structural_lemmas: n must be even and >= 6");

    LemmaTally hole0_lengths, hole0_insert, hole1_borders, hole1_m3, hole1_insert;
    LemmaTally holei_lengths, holei_insert;

    Enumeration enumeration({n, 2, 1}, cap);
    enumeration.for_each([&](const PartialWord& w) {
        const BorderSpectrum spectrum = naive_border_spectrum(w);
        const int m = spectrum.count();
        if (m % 2 == 0) return;
        int hole_pos = 0;
        while (!w.is_hole(hole_pos)) ++hole_pos;

        const auto preserved_middle_pairs = [&] {
            int preserved = 0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (naive_border_spectrum(insert_middle_pair(w, a, b)).count() == m)
                        ++preserved;
            return preserved;
        };

        if (hole_pos == 0 && m > 1) {
            bool ok = spectrum.contains(1) && spectrum.contains(n / 2) &&
                      spectrum.contains(n - 1);
            for (int k = 1; k <= n / 2 - 1; ++k)
                ok = ok && spectrum.contains(k) == spectrum.contains(n - k);
            hole0_lengths.note(ok, w);

            bool insert_ok = true;
            for (int j = 2; j <= n / 2 - 1; ++j)
                for (int letter = 0; letter < 2; ++letter)
                    insert_ok =
                        insert_ok && naive_border_spectrum(
                                         insert_symmetric_pair(w, j, letter, letter))
                                             .count() == m;
            hole0_insert.note(insert_ok, w);
        }

        if (hole_pos == 1) {
            bool ok = spectrum.contains(n - 1);
            for (int k = 2; k <= n / 2 - 1; ++k)
                ok = ok && spectrum.contains(k) == spectrum.contains(n - k);
            ok = ok && spectrum.contains(1) == spectrum.contains(n / 2);
            hole1_borders.note(ok, w);
            if (m == 3)
                hole1_m3.note(!spectrum.contains(1) && !spectrum.contains(n / 2), w);
            hole1_insert.note(preserved_middle_pairs() >= 3, w);
        }

        if (n >= 8 && hole_pos >= 2 && hole_pos <= n / 2 - 1 && m > 1 &&
            spectrum.contains(1)) {
            bool ok = spectrum.contains(n - 2) && spectrum.contains(n - 1);
            for (int k = hole_pos + 1; k <= n / 2 - 1; ++k)
                ok = ok && spectrum.contains(k) == spectrum.contains(n - k);
            holei_lengths.note(ok, w);
            holei_insert.note(preserved_middle_pairs() >= 3, w);
        }
    });

    Report report;
    const auto add = [&](const char* check, const LemmaTally& tally) {
        std::string params = "n=" + std::to_string(n);
        if (tally.violations > 0) params += ";counterexample=" + tally.counterexample;
        report.rows.push_back(
            {check, params, "0", std::to_string(tally.violations), tally.violations == 0});
    };
    add("lemma_hole0_border_lengths", hole0_lengths);
    add("lemma_hole0_symmetric_insertion", hole0_insert);
    add("lemma_hole1_border_lengths", hole1_borders);
    add("lemma_hole1_m3_exclusion", hole1_m3);
    add("lemma_hole1_middle_insertion", hole1_insert);
    if (n >= 8) {
        add("lemma_holei_border_lengths", holei_lengths);
        add("lemma_holei_middle_insertion", holei_insert);
    }
    return report;
}

}  // namespace aborders
