// config.hpp — flat key=value configuration files that mirror CLI flags

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambshift/errors.hpp"

namespace lambshift {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// One `key = value` per line; '#' starts a comment. Keys may carry a leading
// "--". Later duplicates replace earlier ones.
inline ConfigEntries parse_config_text(std::string_view text) {
    ConfigEntries out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = detail::trim(std::string_view(t).substr(0, eq));
        std::string value = detail::trim(std::string_view(t).substr(eq + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        const bool valid_key =
            !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
                return std::isalnum(c) || c == '-' || c == '_';
            });
        if (!valid_key) {
            throw ConfigError("config line " + std::to_string(line_no) + ": bad key '" + key + "'");
        }
        std::replace(key.begin(), key.end(), '_', '-');
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& kv) { return kv.first == key; });
        if (it != out.end()) {
            it->second = std::move(value);
        } else {
            out.emplace_back(std::move(key), std::move(value));
        }
    }
    return out;
}

inline ConfigEntries load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

// Tokens "--key=value" for every entry whose flag does not already appear in
// the command-line tokens, so explicit flags win over the file.
inline std::vector<std::string> config_args(const ConfigEntries& entries,
                                            const std::vector<std::string>& cli_tokens) {
    std::vector<std::string> out;
    for (const auto& [key, value] : entries) {
        const std::string flag = "--" + key;
        const bool given = std::any_of(cli_tokens.begin(), cli_tokens.end(), [&](const auto& tok) {
            return tok == flag || tok.rfind(flag + "=", 0) == 0;
        });
        if (!given) out.push_back(flag + "=" + value);
    }
    return out;
}

}  // namespace lambshift
