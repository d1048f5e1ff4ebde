#include "aborders/report.hpp"

#include <algorithm>
#include <ostream>

namespace aborders {

bool Report::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.ok; });
}

int Report::mismatch_count() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.ok; }));
}

void Report::append(Report other) {
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
}

void write_csv(std::ostream& out, const Report& report) {
    out << "check,params,expected,actual,status\n";
    for (const ReportRow& row : report.rows)
        out << row.check << ',' << row.params << ',' << row.expected << ',' << row.actual
            << ',' << (row.ok ? "OK" : "MISMATCH") << '\n';
}

}  // namespace aborders
