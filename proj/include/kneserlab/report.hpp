#pragma once

// Machine-readable experiment reports. Counts are serialized as decimal
// strings, never floats. Default serialization is a deterministic function
// of (parameters, seed); wall-clock duration is attached only on request.

#include <map>
#include <string>
#include <vector>

#include "kneserlab/bigint.hpp"

namespace kneserlab {

struct ReportRow {
    std::string signature;
    BigCount count;
    int rank = 0;
    std::map<std::string, std::string> extra;
};

struct Verdict {
    std::string claim;  // content-descriptive claim identifier
    bool pass = false;
    std::string detail;
};

struct Observation {
    std::string name;
    std::string detail;
};

struct ExperimentReport {
    std::string experiment;
    std::map<std::string, std::string> params;
    std::vector<ReportRow> rows;
    std::vector<Verdict> verdicts;
    std::vector<Observation> observations;
    double duration_seconds = 0.0;

    bool all_passed() const;
    // Rows ordered by count descending, ties by signature ascending.
    void sort_rows();
    void add_verdict(const std::string& claim, bool pass, const std::string& detail = "");
    void observe(const std::string& name, const std::string& detail);
};

std::string to_json(const ExperimentReport& report, bool with_timing = false);
std::string to_csv(const ExperimentReport& report, bool with_timing = false);
std::string to_text(const ExperimentReport& report, bool with_timing = false);

}  // namespace kneserlab
