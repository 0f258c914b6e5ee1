#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "markovrank/experiments.hpp"

namespace mrank {
namespace {

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["alphas"] = report.alphas;
    j["epsilons"] = report.epsilons;
    j["alpha_baseline"] = report.alpha_baseline;
    j["epsilon_baseline"] = report.epsilon_baseline;
    j["tie_tolerance"] = report.tie_tolerance;
    auto& records = j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["kind"] = to_string(r.kind);
        rec["parameter"] = r.parameter;
        rec["baseline"] = r.baseline;
        rec["failed"] = r.failed;
        rec["multiplicity_failure"] = r.multiplicity_failure;
        rec["baseline_failed"] = r.baseline_failed;
        rec["error"] = r.error;
        rec["warning"] = r.warning;
        rec["near_zero_count"] = r.near_zero_count;
        rec["agreement"] = r.agreement;
        rec["identical"] = r.identical;
        rec["point_finer_baseline"] = r.point_finer_baseline;
        rec["baseline_finer_point"] = r.baseline_finer_point;
        records.push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "kind,parameter,baseline,n,agreement,identical,point_finer_baseline,baseline_finer_point,"
           "multiplicity_failure,failed,baseline_failed,warning,near_zero_count,error\n";
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const auto& r : report.records) {
        out << to_string(r.kind) << ',' << number(r.parameter) << ',' << number(r.baseline) << ',' << report.n << ','
            << r.agreement << ',' << flag(r.identical) << ',' << flag(r.point_finer_baseline) << ','
            << flag(r.baseline_finer_point) << ',' << flag(r.multiplicity_failure) << ',' << flag(r.failed) << ','
            << flag(r.baseline_failed) << ',' << flag(r.warning) << ',' << r.near_zero_count << ','
            << csv_field(r.error) << '\n';
    }
    return out.str();
}

}  // namespace mrank
