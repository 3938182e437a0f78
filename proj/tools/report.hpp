#pragma once

#include "rauzy/geometry.hpp"
#include "rauzy/ring.hpp"
#include "rauzy/roots.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace rauzy::cli {

using nlohmann::json;

// Thrown for bad user input; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    json params = nullptr;  // {a, b} or null for parameter-free commands
    json inputs = json::object();
    json outputs = json::object();
    std::vector<Check> checks;

    void check(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    bool ok() const;
    json to_json() const;
};

// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
json big(const Integer& x);
json ring_json(const RingElem& x);
json field_json(const FieldElem& x, const RootData& rd);
json complex_json(Complex z);
json point_json(Point2 p, RootCase kind);
json params_json(const Params& p);

void write_file(const std::filesystem::path& path, const std::string& data);

}  // namespace rauzy::cli
