#include "hqdeform/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "hqdeform/text.hpp"

namespace hqdeform {

namespace {

#include "fixtures.inc"

const nlohmann::json& need(const nlohmann::json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(key, "missing");
    return j.at(key);
}

std::string as_text(const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw ConfigError(field, "expected a string or an integer");
}

template <typename F>
auto guarded(const std::string& field, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
    }
}

Group load_group(const nlohmann::json& j) {
    const std::string kind = as_text(need(j, "kind"), "group.kind");
    if (kind == "cyclic") return make_cyclic(need(j, "r").get<std::size_t>());
    if (kind == "dihedral") return make_dihedral(need(j, "u").get<std::size_t>());
    if (kind == "table") {
        return Group(need(j, "labels").get<std::vector<std::string>>(),
                     need(j, "table").get<std::vector<std::vector<GroupIndex>>>(),
                     need(j, "generators").get<std::vector<std::string>>());
    }
    throw ConfigError("group.kind", "unknown group kind '" + kind + "'");
}

Cocycle load_cocycle(const nlohmann::json& j, const Group& grp, FieldSpec f) {
    if (j.is_null()) return Cocycle(grp.order(), f);
    const std::string kind = as_text(need(j, "kind"), "cocycle.kind");
    if (kind == "trivial") return Cocycle(grp.order(), f);
    if (kind == "xi") return cocycle_xi(grp.order(), Scalar::parse(as_text(need(j, "xi"), "cocycle.xi"), f));
    if (kind == "table") {
        const auto& rows = need(j, "values");
        std::vector<std::vector<Scalar>> v;
        for (const auto& row : rows) {
            v.emplace_back();
            for (const auto& x : row) v.back().push_back(Scalar::parse(as_text(x, "cocycle.values"), f));
        }
        return Cocycle(std::move(v));
    }
    throw ConfigError("cocycle.kind", "unknown cocycle kind '" + kind + "'");
}

LinearEndo load_images(const nlohmann::json& list, std::size_t n, FieldSpec f, const std::string& field) {
    if (!list.is_array() || list.size() != n) throw ConfigError(field, "expected " + std::to_string(n) + " images");
    std::vector<Poly> images;
    for (const auto& e : list) {
        Poly p = parse_poly(f, n, as_text(e, field));
        for (const auto& [m, c] : p.terms())
            if (total_degree(m) != 1) throw ConfigError(field, "image '" + as_text(e, field) + "' is not linear");
        images.push_back(std::move(p));
    }
    return LinearEndo::from_images(images);
}

Character load_character(const nlohmann::json& j, const Group& grp, FieldSpec f, const std::string& field) {
    if (j.is_null()) return trivial_character(grp, f);
    std::map<std::string, Scalar> values;
    for (const auto& [k, v] : j.items()) values.emplace(k, Scalar::parse(as_text(v, field + "." + k), f));
    return character_from_generators(grp, values, f);
}

std::vector<DeltaDatum> load_data(const nlohmann::json& list, const ContextPtr& ctx, const std::string& field) {
    if (!list.is_array()) throw ConfigError(field, "expected a list of {\"g\", \"P\"} entries");
    std::vector<DeltaDatum> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string at = field + "[" + std::to_string(k) + "]";
        const auto& e = list[k];
        GroupIndex g = guarded(at + ".g", [&] { return ctx->group().parse_word(as_text(need(e, "g"), at + ".g")); });
        Poly p = guarded(at + ".P", [&] { return parse_poly(ctx->field(), ctx->nvars(), as_text(need(e, "P"), at + ".P")); });
        out.push_back(DeltaDatum{g, std::move(p)});
    }
    return out;
}

std::map<GroupIndex, CrossedElement> load_deltabar(const nlohmann::json& j, const ContextPtr& ctx, const std::string& field) {
    std::map<GroupIndex, CrossedElement> out;
    if (j.is_null()) return out;
    for (const auto& [k, v] : j.items()) {
        GroupIndex g = guarded(field + "." + k, [&] { return ctx->group().parse_word(k); });
        out.emplace(g, guarded(field + "." + k, [&] { return parse_element(ctx, as_text(v, field + "." + k)); }));
    }
    return out;
}

ValidationMode parse_mode(const std::string& s) {
    if (s == "general") return ValidationMode::General;
    if (s == "first-case") return ValidationMode::FirstCase;
    if (s == "second-case") return ValidationMode::SecondCase;
    throw ConfigError("mode", "unknown mode '" + s + "'");
}

nlohmann::json opt(const nlohmann::json& j, const std::string& key) {
    return j.contains(key) ? j.at(key) : nlohmann::json();
}

}  // namespace

std::string mode_name(ValidationMode m) {
    switch (m) {
        case ValidationMode::General: return "general";
        case ValidationMode::FirstCase: return "first-case";
        case ValidationMode::SecondCase: return "second-case";
    }
    return "?";
}

ContextPtr load_context(const nlohmann::json& j) {
    const FieldSpec f = guarded("field", [&] { return FieldSpec::parse(as_text(need(j, "field"), "field")); });
    const std::size_t n = guarded("variables", [&] { return need(j, "variables").get<std::size_t>(); });
    if (n == 0) throw ConfigError("variables", "must be positive");
    Group grp = guarded("group", [&] { return load_group(need(j, "group")); });
    Cocycle coc = guarded("cocycle", [&] { return load_cocycle(opt(j, "cocycle"), grp, f); });
    Representation rho = guarded("representation", [&] {
        std::map<std::string, LinearEndo> gens;
        for (const auto& [k, v] : need(j, "representation").items())
            gens.emplace(k, load_images(v, n, f, "representation." + k));
        return Representation::from_generators(grp, gens, n, f);
    });
    return std::make_shared<const AlgebraContext>(f, n, std::move(grp), std::move(coc), std::move(rho));
}

Config load_config(const nlohmann::json& j) {
    Config cfg;
    cfg.raw = j;
    cfg.name = j.value("name", std::string());
    cfg.description = j.value("description", std::string());
    cfg.expected = opt(j, "expected");
    if (j.contains("mode")) cfg.mode = parse_mode(as_text(j.at("mode"), "mode"));

    StructureInput in;
    in.ctx = load_context(j);
    const auto& ctx = in.ctx;
    const FieldSpec f = ctx->field();
    const std::size_t n = ctx->nvars();
    const nlohmann::json alpha = opt(j, "alpha");
    in.alpha_hat = alpha.contains("images") ? guarded("alpha.images", [&] { return load_images(alpha.at("images"), n, f, "alpha.images"); })
                                            : LinearEndo::identity(n, f);
    in.chi_alpha = guarded("alpha.character", [&] { return load_character(opt(alpha, "character"), ctx->group(), f, "alpha.character"); });
    in.chi_sigma = guarded("chi_sigma", [&] { return load_character(opt(j, "chi_sigma"), ctx->group(), f, "chi_sigma"); });
    for (const char* key : {"x1", "x2"}) {
        const auto v = guarded(key, [&] { return need(j, key).get<std::int64_t>(); });
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ConfigError(key, "variable index out of range 1.." + std::to_string(n));
        (std::string(key) == "x1" ? in.x1 : in.x2) = static_cast<std::size_t>(v - 1);
    }
    in.delta1 = load_data(need(j, "delta1"), ctx, "delta1");
    in.delta2 = load_data(need(j, "delta2"), ctx, "delta2");
    in.deltabar1 = load_deltabar(opt(j, "deltabar1"), ctx, "deltabar1");
    in.deltabar2 = load_deltabar(opt(j, "deltabar2"), ctx, "deltabar2");
    if (j.contains("q")) in.q_override = guarded("q", [&] { return Scalar::parse(as_text(j.at("q"), "q"), f); });
    cfg.structure = guarded("structure", [&] { return HqStructure::build(std::move(in)); });
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("file", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("file", std::string("invalid JSON: ") + e.what());
    }
    return load_config(j);
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : kFixtures) out.emplace_back(name);
    return out;
}

nlohmann::json fixture_json(const std::string& name) {
    for (const auto& [n, text] : kFixtures)
        if (name == n) return nlohmann::json::parse(text);
    throw ConfigError("fixture", "unknown fixture '" + name + "'");
}

Config load_fixture(const std::string& name) { return load_config(fixture_json(name)); }

}  // namespace hqdeform
