#include "treepart/config.hpp"

#include <cstdlib>
#include <sstream>

#include "treepart/errors.hpp"

namespace treepart {

void Config::apply_budget_string(const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw FormatError("budget item without '=': " + item);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw FormatError("bad budget value in: " + item);
        }
        if (value <= 0) throw FormatError("budget must be positive: " + item);
        if (key == "tw")
            tw_exact_budget = static_cast<int>(value);
        else if (key == "pat")
            pattern_budget = static_cast<int>(value);
        else if (key == "ep")
            ep_node_budget = value;
        else if (key == "brute")
            brute_n_budget = static_cast<int>(value);
        else if (key == "cd")
            cd_work_budget = value;
        else
            throw FormatError("unknown budget key: " + key);
    }
}

Config Config::defaults() {
    Config cfg;
    if (const char* env = std::getenv("TREEPART_BUDGETS")) {
        cfg.apply_budget_string(env);
    }
    return cfg;
}

}  // namespace treepart
