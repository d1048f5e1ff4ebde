#include "aborders/borders.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace aborders {

bool BorderSpectrum::contains(int k) const {
    return std::binary_search(lengths.begin(), lengths.end(), k);
}

std::optional<int> BorderSpectrum::minimal() const {
    if (lengths.empty()) return std::nullopt;
    return lengths.front();
}

std::optional<int> BorderSpectrum::maximal() const {
    if (lengths.empty()) return std::nullopt;
    return lengths.back();
}

DiffState::DiffState(int sigma) : diff_(static_cast<std::size_t>(sigma), 0) {
    if (sigma < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

void DiffState::read_prefix(int symbol) {
    if (symbol == kHole) {
        ++holes_;
        return;
    }
    int& v = diff_[static_cast<std::size_t>(symbol)];
    ++v;
    magnitude_ += v > 0 ? 1 : -1;
}

void DiffState::read_suffix(int symbol) {
    if (symbol == kHole) {
        ++holes_;
        return;
    }
    int& v = diff_[static_cast<std::size_t>(symbol)];
    --v;
    magnitude_ += v >= 0 ? -1 : 1;
}

int DiffState::recompute_magnitude() const {
    int m = 0;
    for (int v : diff_) m += std::abs(v);
    return m;
}

namespace {

// Feeds prefix/suffix symbol pairs step by step and reports each length k
// whose prefix and suffix are abelian compatible. Returns early when
// on_border returns true.
template <typename F>
void scan_borders(const PartialWord& w, int max_k, F&& on_border) {
    const int n = w.size();
    DiffState state(w.sigma());
    for (int k = 1; k <= max_k; ++k) {
        state.read_prefix(w[k - 1]);
        state.read_suffix(w[n - k]);
        assert(state.magnitude() == state.recompute_magnitude());
        if (state.compatible() && on_border(k)) return;
    }
}

}  // namespace

std::optional<int> minimal_abelian_border(const PartialWord& w) {
    const int n = w.size();
    if (n == 0) throw std::invalid_argument("minimal_abelian_border: empty word");
    if (n < 2) return std::nullopt;
    // A hole at either end is compatible with anything of length one.
    if (w.is_hole(0) || w.is_hole(n - 1)) return 1;

    // A total word without a border in 1..n/2 has none at all: a border of
    // length k > n/2 would force the complementary border n-k <= n/2.
    const int max_k = w.total() ? n / 2 : n - 1;
    std::optional<int> found;
    scan_borders(w, max_k, [&](int k) {
        found = k;
        return true;
    });
    return found;
}

BorderSpectrum border_spectrum(const PartialWord& w) {
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("border_spectrum requires length >= 2");

    BorderSpectrum spectrum;
    spectrum.word_length = n;
    if (w.total()) {
        scan_borders(w, n / 2, [&](int k) {
            spectrum.lengths.push_back(k);
            return false;
        });
        // Complementary pairs: k is a border length iff n-k is.
        for (int i = static_cast<int>(spectrum.lengths.size()) - 1; i >= 0; --i) {
            const int mirrored = n - spectrum.lengths[static_cast<std::size_t>(i)];
            if (mirrored > spectrum.lengths.back()) spectrum.lengths.push_back(mirrored);
        }
    } else {
        scan_borders(w, n - 1, [&](int k) {
            spectrum.lengths.push_back(k);
            return false;
        });
    }
    return spectrum;
}

int count_distinct_borders(const PartialWord& w) {
    return border_spectrum(w).count();
}

}  // namespace aborders
