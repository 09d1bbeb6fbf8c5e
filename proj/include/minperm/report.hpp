#pragma once

// Machine-readable record of one CLI run. Big integers travel as decimal
// strings; durations are integer microseconds so that parsing an emitted
// report and dumping it again reproduces the same bytes.

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace minperm {

using ordered_json = nlohmann::ordered_json;

struct Timing {
    std::string label;
    std::int64_t micros = 0;

    friend bool operator==(Timing const&, Timing const&) = default;
};

struct RunReport {
    std::string command;
    ordered_json parameters = ordered_json::object();
    // Per-method values (count) or per-row values (table) or per-check results (verify).
    ordered_json results = ordered_json::array();
    bool agreement = true;
    std::vector<Timing> durations;

    ordered_json to_json() const
    {
        ordered_json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["results"] = results;
        j["agreement"] = agreement;
        ordered_json d = ordered_json::array();
        for (auto const& t : durations)
            d.push_back({{"label", t.label}, {"us", t.micros}});
        j["durations"] = d;
        return j;
    }

    static RunReport from_json(ordered_json const& j)
    {
        RunReport r;
        r.command = j.at("command").get<std::string>();
        r.parameters = j.at("parameters");
        r.results = j.at("results");
        r.agreement = j.at("agreement").get<bool>();
        for (auto const& t : j.at("durations"))
            r.durations.push_back({t.at("label").get<std::string>(), t.at("us").get<std::int64_t>()});
        return r;
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t micros() const
    {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }
    double seconds() const { return static_cast<double>(micros()) / 1e6; }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace minperm
