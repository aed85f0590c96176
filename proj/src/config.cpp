#include "dunkl/config.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <set>

namespace dunkl {

using json = nlohmann::json;

namespace {

const std::set<std::string> kKnownChecks = {"eigen",        "mehler",     "heat",     "lemma_bounds",
                                            "kernel_decay", "hormander",  "riesz_l2", "integral_representation",
                                            "lp_empirical", "orthonormality"};

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
}

std::vector<double> number_list(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>()};
    if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected a number or a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError(where + ": expected numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

double positive(const json& j, const std::string& where) {
    if (!j.is_number() || !(j.get<double>() > 0)) throw ConfigError(where + ": expected a positive number");
    return j.get<double>();
}

}  // namespace

RootSystem root_system_from_json(const json& j) {
    only_keys(j, {"type", "name", "roots", "multiplicity"}, "root_system");
    if (!j.contains("type") || !j["type"].is_string()) throw ConfigError("root_system: 'type' is required");
    if (!j.contains("multiplicity")) throw ConfigError("root_system: 'multiplicity' is required");
    auto kappa = number_list(j["multiplicity"], "root_system.multiplicity");
    for (double k : kappa)
        if (!(k >= 0)) throw ConfigError("root_system.multiplicity: values must be >= 0");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "catalogue") {
            if (!j.contains("name") || !j["name"].is_string()) throw ConfigError("root_system: 'name' is required");
            return RootSystem::catalogue(j["name"].get<std::string>(), kappa);
        }
        if (type == "explicit") {
            if (!j.contains("roots") || !j["roots"].is_array() || j["roots"].empty())
                throw ConfigError("root_system: 'roots' must be a non-empty array");
            std::vector<std::vector<double>> roots;
            for (const auto& r : j["roots"]) roots.push_back(number_list(r, "root_system.roots"));
            return RootSystem::from_roots(roots, kappa);
        }
    } catch (const InvalidRootSystem& e) {
        throw ConfigError(std::string("root_system: ") + e.what());
    } catch (const NonClosedSystem& e) {
        throw ConfigError(std::string("root_system: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("root_system: ") + e.what());
    }
    throw ConfigError("root_system: type must be 'catalogue' or 'explicit'");
}

json root_system_to_json(const RootSystem& rs) {
    json j;
    j["multiplicity"] = rs.multiplicities();
    if (rs.is_catalogue()) {
        j["type"] = "catalogue";
        j["name"] = rs.name();
    } else {
        j["type"] = "explicit";
        json roots = json::array();
        for (const auto& dir : rs.float_directions()) {
            json r = json::array();
            for (const auto& c : dir) r.push_back(c.convert_to<double>());
            roots.push_back(r);
        }
        j["roots"] = roots;
    }
    return j;
}

RunConfig parse_run_config(const json& j) {
    only_keys(j, {"root_system", "degree", "kernel", "checks", "seed", "output", "timing"}, "config");
    RunConfig cfg;
    if (!j.contains("root_system")) throw ConfigError("config: 'root_system' is required");
    cfg.root_system = j["root_system"];
    root_system_from_json(cfg.root_system);  // validate early

    if (j.contains("degree")) {
        if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 0)
            throw ConfigError("config.degree: expected an integer >= 0");
        cfg.degree = j["degree"].get<int>();
    }
    if (j.contains("kernel")) {
        const json& k = j["kernel"];
        only_keys(k, {"series_truncation", "mehler_r", "mehler_tol", "quad_rel_tol", "separation_floor"}, "kernel");
        if (k.contains("series_truncation")) {
            if (!k["series_truncation"].is_number_integer() || k["series_truncation"].get<int>() < 1)
                throw ConfigError("kernel.series_truncation: expected an integer >= 1");
            cfg.kernel.series_truncation = k["series_truncation"].get<int>();
        }
        if (k.contains("mehler_r")) {
            double r = positive(k["mehler_r"], "kernel.mehler_r");
            if (r >= 1) throw ConfigError("kernel.mehler_r: must lie in (0, 1)");
            cfg.kernel.mehler_r = r;
        }
        if (k.contains("mehler_tol")) cfg.kernel.mehler_tol = positive(k["mehler_tol"], "kernel.mehler_tol");
        if (k.contains("quad_rel_tol")) cfg.kernel.quad_rel_tol = positive(k["quad_rel_tol"], "kernel.quad_rel_tol");
        if (k.contains("separation_floor"))
            cfg.kernel.separation_floor = positive(k["separation_floor"], "kernel.separation_floor");
    }
    if (j.contains("checks")) {
        if (!j["checks"].is_array()) throw ConfigError("config.checks: expected an array of names");
        for (const auto& c : j["checks"]) {
            if (!c.is_string() || !kKnownChecks.count(c.get<std::string>()))
                throw ConfigError("config.checks: unknown check " + c.dump());
            cfg.checks.push_back(c.get<std::string>());
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ConfigError("config.seed: expected an integer >= 0");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
        const json& o = j["output"];
        only_keys(o, {"dir", "cache_dir"}, "output");
        if (o.contains("dir")) {
            if (!o["dir"].is_string()) throw ConfigError("output.dir: expected a string");
            cfg.out_dir = o["dir"].get<std::string>();
        }
        if (o.contains("cache_dir")) {
            if (!o["cache_dir"].is_string()) throw ConfigError("output.cache_dir: expected a string");
            cfg.cache_dir = o["cache_dir"].get<std::string>();
        }
    }
    if (j.contains("timing")) {
        if (!j["timing"].is_boolean()) throw ConfigError("config.timing: expected a boolean");
        cfg.timing = j["timing"].get<bool>();
    }
    return cfg;
}

json run_config_to_json(const RunConfig& cfg) {
    json j;
    j["root_system"] = cfg.root_system;
    j["degree"] = cfg.degree;
    json k;
    k["series_truncation"] = cfg.kernel.series_truncation;
    if (cfg.kernel.mehler_r) k["mehler_r"] = *cfg.kernel.mehler_r;
    k["mehler_tol"] = cfg.kernel.mehler_tol;
    k["quad_rel_tol"] = cfg.kernel.quad_rel_tol;
    k["separation_floor"] = cfg.kernel.separation_floor;
    j["kernel"] = k;
    j["checks"] = cfg.checks;
    j["seed"] = cfg.seed;
    json o;
    o["dir"] = cfg.out_dir;
    if (!cfg.cache_dir.empty()) o["cache_dir"] = cfg.cache_dir;
    j["output"] = o;
    j["timing"] = cfg.timing;
    return j;
}

}  // namespace dunkl
