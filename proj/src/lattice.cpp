#include "aborders/lattice.hpp"

#include <vector>

#include "aborders/borders.hpp"

namespace aborders {

namespace {

void require_total_binary(const PartialWord& w, const char* what) {
    if (!w.total()) throw std::invalid_argument(std::string(what) + ": word must be total");
    if (!w.binary()) throw std::invalid_argument(std::string(what) + ": word must be binary");
}

LatticePath path_from(const PartialWord& w, bool from_end) {
    const int n = w.size();
    LatticePath path;
    path.points.reserve(static_cast<std::size_t>(n) + 1);
    LatticePoint p;
    path.points.push_back(p);
    for (int t = 0; t < n; ++t) {
        const int symbol = from_end ? w[n - 1 - t] : w[t];
        if (symbol == 0)
            ++p.x;
        else
            ++p.y;
        path.points.push_back(p);
    }
    return path;
}

}  // namespace

LatticeView lattice_view(const PartialWord& w) {
    require_total_binary(w, "lattice_view");
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("lattice_view: word length must be >= 2");

    LatticeView view;
    view.prefix_path = path_from(w, false);
    view.suffix_path = path_from(w, true);
    for (int k = 1; k <= n - 1; ++k)
        if (view.prefix_path.points[static_cast<std::size_t>(k)] ==
            view.suffix_path.points[static_cast<std::size_t>(k)])
            view.meeting_lengths.push_back(k);
    return view;
}

std::vector<int> magnitude_profile(const PartialWord& w) {
    const int n = w.size();
    if (n < 1) throw std::invalid_argument("magnitude_profile: empty word");
    std::vector<int> heights;
    heights.reserve(static_cast<std::size_t>(n) + 1);
    DiffState state(w.sigma());
    heights.push_back(state.magnitude());
    for (int t = 1; t <= n; ++t) {
        state.read_prefix(w[t - 1]);
        state.read_suffix(w[n - t]);
        heights.push_back(state.magnitude());
    }
    return heights;
}

MotzkinView motzkin_view(const PartialWord& w) {
    require_total_binary(w, "motzkin_view");
    if (w.size() < 2) throw std::invalid_argument("motzkin_view: word length must be >= 2");
    return MotzkinView{magnitude_profile(w)};
}

BigInt catalan(int n) {
    if (n < 0) throw std::domain_error("catalan: n must be >= 0");
    // Thread-local memo: counting formulas hit small indices repeatedly.
    thread_local std::vector<BigInt> memo;
    if (static_cast<std::size_t>(n) < memo.size()) return memo[static_cast<std::size_t>(n)];
    for (long i = static_cast<long>(memo.size()); i <= n; ++i)
        memo.push_back(exact_div(binomial(2 * i, i), BigInt(i + 1)));
    return memo[static_cast<std::size_t>(n)];
}

BigInt narayana(int n, int r) {
    if (n < 1) throw std::domain_error("narayana: n must be >= 1");
    if (r < 1 || r > n) throw std::domain_error("narayana: r must be in 1..n");
    return exact_div(binomial(n, r) * binomial(n, r - 1), BigInt(n));
}

}  // namespace aborders
