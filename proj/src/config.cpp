#include "triwalk/config.hpp"

#include <json.hpp>

#include <fstream>

namespace triwalk {

WalkConfig WalkConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);

    auto prob = [&](const char* key) { return parse_rational(j.at(key).get<std::string>()); };
    WalkConfig cfg{StepDistribution::validate(prob("alpha"), prob("alpha_prime"), prob("beta"),
                                              prob("beta_prime"), prob("gamma"),
                                              prob("gamma_prime"))};
    if (j.contains("realization")) {
        auto r = j["realization"];
        cfg.realization = Realization({r.at(0).at(0), r.at(0).at(1)},
                                      {r.at(1).at(0), r.at(1).at(1)});
    }
    if (j.contains("mode")) cfg.exact_mode = j["mode"].get<std::string>() != "float";
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    return cfg;
}

}  // namespace triwalk
