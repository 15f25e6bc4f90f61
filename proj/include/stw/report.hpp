#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace stw {

constexpr const char* kReportSchemaVersion = "1";

struct CheckRecord {
    std::string name;
    nlohmann::json inputs;
    nlohmann::json expected;
    nlohmann::json actual;
    bool pass = false;
    long long runtime_ms = 0;
};

struct Report {
    std::string suite;
    nlohmann::json params;
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema_version"] = kReportSchemaVersion;
        j["suite"] = suite;
        j["params"] = params;
        j["checks"] = nlohmann::json::array();
        for (auto& c : checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["inputs"] = c.inputs;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["pass"] = c.pass;
            jc["runtime_ms"] = c.runtime_ms;
            j["checks"].push_back(jc);
        }
        j["status"] = all_pass() ? "pass" : "fail";
        return j;
    }
};

// Runs a check body and records timing; the body fills expected/actual and
// returns pass/fail. Exceptions become failed checks with the message in
// 'actual'.
template <typename F>
void run_check(Report& rep, const std::string& name, nlohmann::json inputs, F&& body) {
    CheckRecord rec;
    rec.name = name;
    rec.inputs = std::move(inputs);
    auto t0 = std::chrono::steady_clock::now();
    try {
        rec.pass = body(rec);
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.actual = std::string("exception: ") + e.what();
    }
    rec.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(rec));
}

} // namespace stw
