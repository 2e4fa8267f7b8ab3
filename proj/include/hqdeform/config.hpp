#pragma once

#include <string>
#include <vector>

#include "hqdeform/hq_structure.hpp"
#include "json.hpp"

namespace hqdeform {

// Config problem tied to the JSON key that caused it.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct Config {
    std::string name;
    std::string description;
    nlohmann::json raw;
    StructurePtr structure;
    ValidationMode mode = ValidationMode::SecondCase;
    nlohmann::json expected;  // recorded verdicts, may be empty
};

Config load_config(const nlohmann::json& j);
Config load_config_file(const std::string& path);
ContextPtr load_context(const nlohmann::json& j);

// Built-in copies of fixtures/*.json.
std::vector<std::string> fixture_names();
nlohmann::json fixture_json(const std::string& name);
Config load_fixture(const std::string& name);

std::string mode_name(ValidationMode m);

}  // namespace hqdeform
