#include "schur/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace schur {

namespace {

long long integer_field(const nlohmann::json& v, const std::string& key, long long lo,
                        long long hi) {
    if (!v.is_number_integer())
        throw std::invalid_argument("config: \"" + key + "\" must be an integer");
    long long value = v.get<long long>();
    if (value < lo || value > hi)
        throw std::invalid_argument("config: \"" + key + "\" must be in " +
                                    std::to_string(lo) + ".." + std::to_string(hi));
    return value;
}

}  // namespace

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config: " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");

    Config cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "brute_cap")
            cfg.brute_cap = static_cast<int>(integer_field(value, key, 1, 30));
        else if (key == "max_witnesses")
            cfg.max_witnesses = static_cast<int>(integer_field(value, key, 0, 100000));
        else if (key == "grid")
            cfg.grid = static_cast<int>(integer_field(value, key, 2, 20000));
        else if (key == "window")
            cfg.window = static_cast<int>(integer_field(value, key, 1, 10000));
        else if (key == "threads")
            cfg.threads = static_cast<int>(integer_field(value, key, 0, 1024));
        else if (key == "sweep_flag_tol") {
            if (!value.is_number())
                throw std::invalid_argument("config: \"sweep_flag_tol\" must be a number");
            cfg.sweep_flag_tol = value.get<double>();
            if (!(cfg.sweep_flag_tol > 0))
                throw std::invalid_argument("config: \"sweep_flag_tol\" must be positive");
        } else {
            throw std::invalid_argument("config: unknown key \"" + key + "\"");
        }
    }
    return cfg;
}

}  // namespace schur
