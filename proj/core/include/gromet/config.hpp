#pragma once

#include <string>
#include <vector>

namespace gromet {

/// One `[type name]` block of key = value lines.
struct ConfigBlock {
    std::string type;
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries; // repeats allowed

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const; // throws when absent
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long fallback) const;
    bool flag_or(const std::string& key, bool fallback) const;
    std::vector<std::string> all(const std::string& key) const; // repeated keys
    /// Whitespace-separated tokens of a single value.
    std::vector<std::string> tokens(const std::string& key) const;
};

struct Config {
    std::vector<ConfigBlock> blocks;

    const ConfigBlock* find(const std::string& type, const std::string& name) const;
    const ConfigBlock& require(const std::string& type, const std::string& name) const;
    std::vector<const ConfigBlock*> of_type(const std::string& type) const;
};

Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

} // namespace gromet
