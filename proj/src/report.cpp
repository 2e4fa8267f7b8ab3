#include "hqdeform/report.hpp"

#include <algorithm>

namespace hqdeform {

void Report::add(std::string id, bool pass, std::string detail) {
    items.push_back(CheckResult{std::move(id), pass, std::move(detail)});
}

bool Report::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckResult& c) { return c.pass; });
}

bool Report::has_failure(const std::string& id) const {
    return std::any_of(items.begin(), items.end(), [&](const CheckResult& c) { return !c.pass && c.id == id; });
}

std::vector<std::string> Report::failed_ids() const {
    std::vector<std::string> out;
    for (const auto& c : items)
        if (!c.pass && std::find(out.begin(), out.end(), c.id) == out.end()) out.push_back(c.id);
    return out;
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

nlohmann::json Report::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : items) {
        nlohmann::json j{{"id", c.id}, {"pass", c.pass}};
        if (!c.detail.empty()) j["witness"] = c.detail;
        checks.push_back(j);
    }
    return nlohmann::json{{"pass", ok()}, {"checks", checks}, {"failed", failed_ids()}};
}

}  // namespace hqdeform
