#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aborders {

struct ReportRow {
    std::string check;
    std::string params;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct Report {
    std::vector<ReportRow> rows;

    bool all_ok() const;
    int mismatch_count() const;
    void append(Report other);
};

// Stable layout: check,params,expected,actual,status with status OK/MISMATCH.
void write_csv(std::ostream& out, const Report& report);

}  // namespace aborders
