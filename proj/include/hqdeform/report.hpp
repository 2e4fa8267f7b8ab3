#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hqdeform {

struct CheckResult {
    std::string id;
    bool pass = true;
    std::string detail;  // witness on failure
};

struct Report {
    std::vector<CheckResult> items;

    void add(std::string id, bool pass, std::string detail = {});
    bool ok() const;
    bool has_failure(const std::string& id) const;
    std::vector<std::string> failed_ids() const;
    void append(const Report& other);
    nlohmann::json to_json() const;
};

}  // namespace hqdeform
