#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aborders/checks.hpp"
#include "aborders/dyck.hpp"
#include "aborders/lattice.hpp"
#include "aborders/svg.hpp"

namespace {

using namespace aborders;

std::uint64_t default_cap() {
    if (const char* env = std::getenv("ABORDERS_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
        throw std::invalid_argument("ABORDERS_CAP must be a positive integer");
    }
    return kDefaultEnumerationCap;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

std::string braces(const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

std::string spaced(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

int run_analyze(const std::string& text, int sigma, const std::string& format,
                const std::string& out_path) {
    const PartialWord w = parse_word(text, sigma);
    const bool csv = format == "csv";
    std::ostringstream out;

    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("word", w.str());
    fields.emplace_back("sigma", std::to_string(w.sigma()));
    fields.emplace_back("length", std::to_string(w.size()));
    fields.emplace_back("holes", std::to_string(w.hole_count()));

    if (w.size() < 2) {
        fields.emplace_back("note", "length " + std::to_string(w.size()) +
                                        ": no borders possible");
    } else {
        const auto minimal = minimal_abelian_border(w);
        const BorderSpectrum spectrum = border_spectrum(w);
        fields.emplace_back("minimal_border", minimal ? std::to_string(*minimal) : "none");
        fields.emplace_back("spectrum", csv ? spaced(spectrum.lengths)
                                            : braces(spectrum.lengths));
        fields.emplace_back("distinct_borders", std::to_string(spectrum.count()));
        if (w.total() && w.binary()) {
            fields.emplace_back("y_form", y_form(w, w.size()));
            fields.emplace_back("z_form", z_form(w, w.size()));
            const LatticeView view = lattice_view(w);
            fields.emplace_back("meeting_lengths", csv ? spaced(view.meeting_lengths)
                                                       : braces(view.meeting_lengths));
        }
    }

    if (csv) {
        out << "field,value\n";
        for (const auto& [name, value] : fields) out << name << ',' << value << '\n';
    } else {
        for (const auto& [name, value] : fields) {
            std::string label = name;
            for (char& c : label)
                if (c == '_') c = ' ';
            out << label << ": " << value << '\n';
        }
    }
    emit(out.str(), out_path);
    return 0;
}

int emit_report(const Report& report, const std::string& out_path) {
    std::ostringstream out;
    write_csv(out, report);
    emit(out.str(), out_path);
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian borders of total and partial words: analysis, exact counts, "
                 "exhaustive verification, and path figures"};
    app.require_subcommand(1);

    std::uint64_t cap = 0;
    int workers = 1;
    std::string out_path;
    std::string format = "plain";

    // analyze
    auto* analyze = app.add_subcommand("analyze", "borders and path forms of one word");
    std::string analyze_word;
    int analyze_sigma = 2;
    analyze->add_option("word", analyze_word, "word text, '.' for holes")->required();
    analyze->add_option("--sigma", analyze_sigma, "alphabet size");
    analyze->add_option("--format", format, "plain or csv");
    analyze->add_option("--out", out_path, "write to file instead of stdout");

    // figure
    auto* figure = app.add_subcommand("figure", "SVG panel of the word's lattice paths");
    std::string figure_word, figure_view;
    figure->add_option("word", figure_word, "total binary word")->required();
    figure->add_option("--view", figure_view, "lattice, diagonal, y, or z")->required();
    figure->add_option("--out", out_path, "output SVG path")->required();

    // count
    auto* count = app.add_subcommand("count", "closed-form counts");
    std::string count_formula;
    int c_n = 0, c_k = 0, c_h = 0, c_m = 0, c_j = 0, c_r = 0, c_sigma = 2;
    count->add_option("formula", count_formula,
                      "minimal-total | unbordered | m-borders | g2 | g-k1 | "
                      "minimal-partial | one-hole-max | unique-minimal | catalan | narayana")
        ->required();
    count->add_option("--n", c_n, "word length (or index for catalan)");
    count->add_option("--k", c_k, "border length");
    count->add_option("--h", c_h, "hole count");
    count->add_option("--m", c_m, "distinct border count");
    count->add_option("--j", c_j, "holes inside the border pair");
    count->add_option("--r", c_r, "peak count");
    count->add_option("--sigma", c_sigma, "alphabet size");
    count->add_option("--cap", cap, "enumeration cap for oracle-backed g");
    count->add_option("--format", format, "plain or csv");
    count->add_option("--out", out_path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "formula-vs-enumeration checks (CSV)");
    std::string theorem;
    int v_n_max = -1, v_h_max = -1, v_n_max_partial = -1, v_k_max = -1;
    verify->add_option("--theorem", theorem,
                       "minimal-total | unbordered | unbordered-partial | m-borders | g2 | "
                       "f-forms | one-hole-max | unique-minimal | at-least-h | agreement | "
                       "narayana | conjecture | lemmas | all")
        ->required();
    verify->add_option("--n-max", v_n_max, "largest length to check");
    verify->add_option("--n-max-partial", v_n_max_partial, "largest partial-word length");
    verify->add_option("--h-max", v_h_max, "largest hole count");
    verify->add_option("--k-max", v_k_max, "largest border length");
    verify->add_option("--workers", workers, "enumeration worker threads");
    verify->add_option("--cap", cap, "enumeration cap (words)");
    verify->add_option("--out", out_path, "write to file instead of stdout");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "A191386 one-hole conjecture (CSV)");
    int conj_n_max = 14;
    conjecture->add_option("--n-max", conj_n_max, "largest length to check");
    conjecture->add_option("--workers", workers, "enumeration worker threads");
    conjecture->add_option("--cap", cap, "enumeration cap (words)");
    conjecture->add_option("--out", out_path, "write to file instead of stdout");

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "one-hole structural lemma checks (CSV)");
    int lem_n = 0, lem_n_max = 0;
    lemmas->add_option("--n", lem_n, "single even length");
    lemmas->add_option("--n-max", lem_n_max, "all even lengths 6..n-max");
    lemmas->add_option("--cap", cap, "enumeration cap (words)");
    lemmas->add_option("--out", out_path, "write to file instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream words or border tallies");
    int e_n = 0, e_h = 0, e_sigma = 2, e_hole_position = -1;
    std::string e_filter = "none", e_tally;
    enumerate->add_option("--n", e_n, "word length")->required();
    enumerate->add_option("--h", e_h, "hole count");
    enumerate->add_option("--sigma", e_sigma, "alphabet size");
    enumerate->add_option("--filter", e_filter, "none | unique | starts-with-0 | hole-position");
    enumerate->add_option("--hole-position", e_hole_position, "position for the filter");
    enumerate->add_option("--tally", e_tally, "minimal | borders: print a histogram instead");
    enumerate->add_option("--workers", workers, "worker threads for tallies");
    enumerate->add_option("--cap", cap, "enumeration cap (words)");
    enumerate->add_option("--format", format, "plain or csv");
    enumerate->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cap == 0) cap = default_cap();
        const CheckOptions options{workers, cap};

        if (app.got_subcommand(analyze))
            return run_analyze(analyze_word, analyze_sigma, format, out_path);

        if (app.got_subcommand(figure)) {
            const PartialWord w = parse_word(figure_word, 2);
            emit(render_figure(w, parse_figure_view(figure_view)), out_path);
            return 0;
        }

        if (app.got_subcommand(count)) {
            std::vector<std::pair<std::string, BigInt>> values;
            std::string params;
            if (count_formula == "minimal-total") {
                params = "n=" + std::to_string(c_n) + ";k=" + std::to_string(c_k);
                values.emplace_back("minimal_border_total", count_minimal_border_total(c_n, c_k));
            } else if (count_formula == "unbordered") {
                params = "n=" + std::to_string(c_n);
                values.emplace_back("unbordered_total", count_unbordered(c_n));
            } else if (count_formula == "m-borders") {
                params = "n=" + std::to_string(c_n) + ";m=" + std::to_string(c_m);
                values.emplace_back("m_distinct_borders", count_with_m_borders(c_n, c_m));
            } else if (count_formula == "g2") {
                params = "k=" + std::to_string(c_k) + ";j=" + std::to_string(c_j);
                values.emplace_back("g2", g2(c_k, c_j));
            } else if (count_formula == "g-k1") {
                params = "sigma=" + std::to_string(c_sigma) + ";j=" + std::to_string(c_j) +
                         ";h=" + std::to_string(c_h);
                values.emplace_back("g_sigma_k1", g_sigma_k1(c_sigma, c_j, c_h));
            } else if (count_formula == "minimal-partial") {
                params = "n=" + std::to_string(c_n) + ";k=" + std::to_string(c_k) +
                         ";h=" + std::to_string(c_h) + ";sigma=" + std::to_string(c_sigma);
                GFunction g;
                if (c_k == 1)
                    g = [c_h, c_sigma](int, int j) {
                        return g_sigma_k1(c_sigma, j, std::max(c_h, 1));
                    };
                else if (c_sigma == 2)
                    g = [](int k, int j) { return g2(k, j); };
                else
                    g = oracle_g(c_sigma, cap);
                values.emplace_back("minimal_border_partial",
                                    count_minimal_border_partial(c_n, c_k, c_h, c_sigma, g));
            } else if (count_formula == "one-hole-max") {
                params = "n=" + std::to_string(c_n);
                values.emplace_back("one_hole_max_borders",
                                    count_one_hole_max_borders_even(c_n));
                const auto buckets = unique_max_borders_by_position(c_n);
                for (std::size_t i = 0; i < buckets.size(); ++i)
                    values.emplace_back("unique_with_hole_at_" + std::to_string(i),
                                        buckets[i]);
            } else if (count_formula == "unique-minimal") {
                params = "n=" + std::to_string(c_n);
                const UniqueMinimalCounts counts = unique_minimal_nminus1_counts(c_n);
                values.emplace_back("no_ones_first_half", counts.no_ones_first_half);
                values.emplace_back("one_zero_first_half", counts.one_zero_first_half);
                values.emplace_back("two_zeros_first_half", counts.two_zeros_first_half);
                values.emplace_back("one_one_first_half", counts.one_one_first_half);
            } else if (count_formula == "catalan") {
                params = "n=" + std::to_string(c_n);
                values.emplace_back("catalan", catalan(c_n));
            } else if (count_formula == "narayana") {
                params = "n=" + std::to_string(c_n) + ";r=" + std::to_string(c_r);
                values.emplace_back("narayana", narayana(c_n, c_r));
            } else {
                throw std::invalid_argument("unknown count formula '" + count_formula + "'");
            }

            std::ostringstream out;
            if (format == "csv") {
                out << "formula,params,value\n";
                for (const auto& [name, value] : values)
                    out << name << ',' << params << ',' << value.get_str() << '\n';
            } else if (values.size() == 1) {
                out << values.front().second.get_str() << '\n';
            } else {
                for (const auto& [name, value] : values)
                    out << name << ' ' << value.get_str() << '\n';
            }
            emit(out.str(), out_path);
            return 0;
        }

        if (app.got_subcommand(verify)) {
            const auto n = [&](int fallback) { return v_n_max > 0 ? v_n_max : fallback; };
            const auto h = [&](int fallback) { return v_h_max >= 0 ? v_h_max : fallback; };
            Report report;
            if (theorem == "minimal-total")
                report = check_minimal_total_counts(n(16), options);
            else if (theorem == "unbordered")
                report = check_unbordered_counts(n(16), options);
            else if (theorem == "unbordered-partial")
                report = check_no_unbordered_partial(n(12), h(3), options);
            else if (theorem == "m-borders")
                report = check_m_border_counts(n(14), options);
            else if (theorem == "g2")
                report = check_g2_counts(v_k_max > 0 ? v_k_max : 5, 3, options);
            else if (theorem == "f-forms")
                report = check_f_forms_identity(n(16), h(4));
            else if (theorem == "one-hole-max")
                report = check_one_hole_max_borders(n(12), options);
            else if (theorem == "unique-minimal")
                report = check_unique_minimal_counts(n(14), options);
            else if (theorem == "at-least-h")
                report = check_at_least_h_borders(n(12), h(3), options);
            else if (theorem == "agreement")
                report = check_three_way_agreement(
                    n(14), v_n_max_partial > 0 ? v_n_max_partial : 10, h(2), options);
            else if (theorem == "narayana")
                report = check_narayana(n(20), 8);
            else if (theorem == "conjecture")
                report = check_conjecture(n(14), options);
            else if (theorem == "lemmas")
                report = check_structural({6, 8, 10}, options);
            else if (theorem == "all") {
                report = check_three_way_agreement(n(14), 10, 2, options);
                report.append(check_minimal_total_counts(16, options));
                report.append(check_unbordered_counts(16, options));
                report.append(check_no_unbordered_partial(12, 3, options));
                report.append(check_m_border_counts(14, options));
                report.append(check_g2_counts(5, 3, options));
                report.append(check_f_forms_identity(16, 4));
                report.append(check_one_hole_max_borders(12, options));
                report.append(check_unique_minimal_counts(14, options));
                report.append(check_at_least_h_borders(12, 3, options));
                report.append(check_conjecture(14, options));
                report.append(check_structural({6, 8, 10}, options));
                report.append(check_narayana(20, 8));
            } else {
                throw std::invalid_argument("unknown theorem '" + theorem + "'");
            }
            return emit_report(report, out_path);
        }

        if (app.got_subcommand(conjecture))
            return emit_report(check_conjecture(conj_n_max, options), out_path);

        if (app.got_subcommand(lemmas)) {
            std::vector<int> lengths;
            if (lem_n > 0) lengths.push_back(lem_n);
            for (int n = 6; n <= lem_n_max; n += 2) lengths.push_back(n);
            if (lengths.empty()) lengths = {6, 8, 10};
            return emit_report(check_structural(lengths, options), out_path);
        }

        if (app.got_subcommand(enumerate)) {
            WordFilter filter = WordFilter::none;
            if (e_filter == "unique")
                filter = WordFilter::unique;
            else if (e_filter == "starts-with-0")
                filter = WordFilter::starts_with_zero;
            else if (e_filter == "hole-position")
                filter = WordFilter::hole_position;
            else if (e_filter != "none")
                throw std::invalid_argument("unknown filter '" + e_filter + "'");

            std::ostringstream out;
            if (e_tally == "minimal") {
                const auto tally = tally_minimal_border(e_n, e_h, e_sigma, workers, cap);
                out << "minimal_border,count\n";
                out << "none," << tally[0] << '\n';
                for (int k = 1; k < e_n; ++k)
                    out << k << ',' << tally[static_cast<std::size_t>(k)] << '\n';
            } else if (e_tally == "borders") {
                const auto tally = tally_distinct_borders(e_n, e_h, e_sigma, workers, cap);
                out << "distinct_borders,count\n";
                for (int m = 0; m < e_n; ++m)
                    out << m << ',' << tally[static_cast<std::size_t>(m)] << '\n';
            } else if (!e_tally.empty()) {
                throw std::invalid_argument("unknown tally '" + e_tally + "'");
            } else {
                Enumeration enumeration({e_n, e_sigma, e_h, filter, e_hole_position}, cap);
                if (format == "csv") out << "index,word\n";
                std::uint64_t emitted = 0;
                for (std::uint64_t i = 0; i < enumeration.size(); ++i) {
                    const PartialWord w = enumeration.at(i);
                    if (!enumeration.passes_filter(w)) continue;
                    if (format == "csv")
                        out << emitted << ',' << w.str() << '\n';
                    else
                        out << w.str() << '\n';
                    ++emitted;
                }
            }
            emit(out.str(), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
