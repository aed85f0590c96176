#include "dunkl/config.hpp"
#include "dunkl/errors.hpp"

#include "doctest.h"

using namespace dunkl;
using nlohmann::json;

TEST_CASE("root system blocks") {
    const auto rs = root_system_from_json(json::parse(R"({"type":"catalogue","name":"B2","multiplicity":[0.5,1]})"));
    CHECK(rs.group().order() == 8);
    const auto back = root_system_from_json(root_system_to_json(rs));
    CHECK(back.fingerprint() == rs.fingerprint());

    const auto ex = root_system_from_json(json::parse(R"({"type":"explicit","roots":[[2,0],[0,3]],"multiplicity":[1,0.5]})"));
    CHECK(ex.is_coordinate_system());
    CHECK(root_system_from_json(root_system_to_json(ex)).fingerprint() == ex.fingerprint());
}

TEST_CASE("run configuration defaults and round trip") {
    const auto cfg = parse_run_config(json::parse(
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"degree":8,
            "kernel":{"mehler_r":0.3},"checks":["eigen","heat"],"seed":7})"));
    CHECK(cfg.degree == 8);
    CHECK(cfg.seed == 7u);
    CHECK(cfg.kernel.mehler_r.value() == 0.3);
    CHECK(cfg.checks.size() == 2);
    const auto again = parse_run_config(run_config_to_json(cfg));
    CHECK(run_config_to_json(again) == run_config_to_json(cfg));
}

TEST_CASE("malformed configurations are rejected with ConfigError") {
    const char* bad[] = {
        R"({})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"degree":-1})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"degree":2.5})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"checks":["nope"]})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"colour":1})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"kernel":{"mehler_r":1.5}})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"seed":-3})",
        R"({"root_system":{"type":"catalogue","name":"Z2","multiplicity":[0.5]},"timing":"yes"})",
    };
    for (const char* s : bad) CHECK_THROWS_AS(parse_run_config(json::parse(s)), ConfigError);
    CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"type":"catalogue","name":"E9","multiplicity":[1]})")),
                    ConfigError);
    CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"type":"explicit","multiplicity":[1]})")), ConfigError);
    CHECK_THROWS_AS(root_system_from_json(json::parse(R"({"type":"catalogue","name":"Z2","multiplicity":"x"})")),
                    ConfigError);
}
