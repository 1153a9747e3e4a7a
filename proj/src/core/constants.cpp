#include "core/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace maxpi {

ConstantSchedule ConstantSchedule::defaults() {
    ConstantSchedule c;
    c.gamma = 0.01;
    c.big_l = 3.0;
    c.beta = 0.06;
    c.delta = 0.001;
    c.epsilon = 0.005;
    double cap = c.gamma / (104.0 * std::pow(c.component_cap(), 3.0));
    c.alpha = std::min(1.0 / 50.0, cap) / 2.0;
    return c;
}

ConstantSchedule ConstantSchedule::parse(std::string_view text) {
    ConstantSchedule c = defaults();
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        std::string key = line.substr(0, eq == std::string::npos ? line.size() : eq);
        key.erase(std::remove_if(key.begin(), key.end(), [](char ch) { return std::isspace(ch); }), key.end());
        if (key.empty()) continue;
        if (eq == std::string::npos)
            throw Error(ErrorCode::parse, "constants line " + std::to_string(lineno) + ": expected key=value", lineno);
        double value;
        try {
            value = std::stod(line.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse, "constants line " + std::to_string(lineno) + ": bad number", lineno);
        }
        if (key == "alpha") c.alpha = value;
        else if (key == "beta") c.beta = value;
        else if (key == "gamma") c.gamma = value;
        else if (key == "delta") c.delta = value;
        else if (key == "epsilon") c.epsilon = value;
        else if (key == "L") c.big_l = value;
        else
            throw Error(ErrorCode::parse, "constants line " + std::to_string(lineno) + ": unknown key '" + key + "'",
                        lineno);
    }
    return c;
}

std::vector<std::string> validate_constants(const ConstantSchedule& c, int n) {
    (void)n;  // constraints are size-independent
    std::vector<std::string> out;
    auto require = [&](bool ok, const std::string& name) {
        if (!ok) out.push_back(name);
    };
    require(c.alpha > 0, "alpha > 0");
    require(c.alpha < 1.0 / 48.0, "alpha < 1/48");
    require(c.beta > 0, "beta > 0");
    require(c.beta < 1.0 / 16.0, "beta < 1/16");
    require(c.gamma > 0 && c.gamma < 1, "0 < gamma < 1");
    require(c.delta > 0 && c.delta < 1, "0 < delta < 1");
    require(c.epsilon > 0 && c.epsilon < 1, "0 < epsilon < 1");
    require(c.big_l > 2, "L > 2");
    if (c.gamma > 0) {
        double cap = c.component_cap();
        require(c.alpha < c.gamma / (104.0 * cap * cap * cap), "alpha < gamma/(104 C^3)");
        require(std::abs(c.ell() - (3.0 * cap * cap + 1.0)) < 1e-12, "ell = 3 C^2 + 1");
    }
    return out;
}

}  // namespace maxpi
