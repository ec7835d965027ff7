#include "kneserlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kneserlab {

bool ExperimentReport::all_passed() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void ExperimentReport::sort_rows() {
    std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.signature < b.signature;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = static_cast<int>(i + 1);
}

void ExperimentReport::add_verdict(const std::string& claim, bool pass, const std::string& detail) {
    verdicts.push_back({claim, pass, detail});
}

void ExperimentReport::observe(const std::string& name, const std::string& detail) {
    observations.push_back({name, detail});
}

std::string to_json(const ExperimentReport& report, bool with_timing) {
    nlohmann::ordered_json j;
    j["experiment"] = report.experiment;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) j["params"][key] = value;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["signature"] = row.signature;
        r["count"] = row.count.str();
        r["rank"] = row.rank;
        for (const auto& [key, value] : row.extra) r[key] = value;
        j["rows"].push_back(r);
    }
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : report.verdicts)
        j["verdicts"].push_back({{"claim", v.claim}, {"pass", v.pass}, {"detail", v.detail}});
    j["observations"] = nlohmann::ordered_json::array();
    for (const auto& o : report.observations)
        j["observations"].push_back({{"name", o.name}, {"detail", o.detail}});
    j["all_passed"] = report.all_passed();
    if (with_timing) j["duration_seconds"] = report.duration_seconds;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_csv(const ExperimentReport& report, bool with_timing) {
    std::ostringstream os;
    os << "experiment,kind,name,signature,count,rank,pass,detail\n";
    for (const auto& [key, value] : report.params)
        os << csv_escape(report.experiment) << ",param," << csv_escape(key) << ",,,,,"
           << csv_escape(value) << "\n";
    for (const auto& row : report.rows)
        os << csv_escape(report.experiment) << ",row,," << csv_escape(row.signature) << ","
           << row.count.str() << "," << row.rank << ",,\n";
    for (const auto& v : report.verdicts)
        os << csv_escape(report.experiment) << ",verdict," << csv_escape(v.claim) << ",,,,"
           << (v.pass ? "true" : "false") << "," << csv_escape(v.detail) << "\n";
    for (const auto& o : report.observations)
        os << csv_escape(report.experiment) << ",observation," << csv_escape(o.name) << ",,,,,"
           << csv_escape(o.detail) << "\n";
    if (with_timing)
        os << csv_escape(report.experiment) << ",timing,duration_seconds,,,,,"
           << report.duration_seconds << "\n";
    return os.str();
}

std::string to_text(const ExperimentReport& report, bool with_timing) {
    std::ostringstream os;
    os << "experiment: " << report.experiment << "\n";
    for (const auto& [key, value] : report.params) os << "  " << key << " = " << value << "\n";
    if (!report.rows.empty()) {
        os << "rows:\n";
        for (const auto& row : report.rows)
            os << "  #" << row.rank << " " << row.signature << "  count=" << row.count.str()
               << "\n";
    }
    for (const auto& v : report.verdicts)
        os << (v.pass ? "PASS " : "FAIL ") << v.claim << (v.detail.empty() ? "" : "  [" + v.detail + "]")
           << "\n";
    for (const auto& o : report.observations) os << "note " << o.name << ": " << o.detail << "\n";
    if (with_timing) os << "duration_seconds: " << report.duration_seconds << "\n";
    return os.str();
}

}  // namespace kneserlab
