#include "gromet/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gromet {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

bool ConfigBlock::has(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        (void)v;
        if (k == key) {
            return true;
        }
    }
    return false;
}

const std::string& ConfigBlock::get(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) {
            return v;
        }
    }
    throw std::invalid_argument("block [" + type + " " + name + "] is missing key '" +
                                key + "'");
}

std::string ConfigBlock::get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
}

double ConfigBlock::number(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (trim(v.substr(used)).size()) {
        throw std::invalid_argument("key '" + key + "' is not a number: " + v);
    }
    return x;
}

double ConfigBlock::number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

long ConfigBlock::integer(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (trim(v.substr(used)).size()) {
        throw std::invalid_argument("key '" + key + "' is not an integer: " + v);
    }
    return x;
}

long ConfigBlock::integer_or(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
}

bool ConfigBlock::flag_or(const std::string& key, bool fallback) const {
    if (!has(key)) {
        return fallback;
    }
    const std::string& v = get(key);
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw std::invalid_argument("key '" + key + "' is not a boolean: " + v);
}

std::vector<std::string> ConfigBlock::all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries) {
        if (k == key) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::string> ConfigBlock::tokens(const std::string& key) const {
    std::istringstream in(get(key));
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

const ConfigBlock* Config::find(const std::string& type, const std::string& name) const {
    for (const auto& b : blocks) {
        if (b.type == type && b.name == name) {
            return &b;
        }
    }
    return nullptr;
}

const ConfigBlock& Config::require(const std::string& type, const std::string& name) const {
    const ConfigBlock* b = find(type, name);
    if (b == nullptr) {
        throw std::invalid_argument("missing config block [" + type + " " + name + "]");
    }
    return *b;
}

std::vector<const ConfigBlock*> Config::of_type(const std::string& type) const {
    std::vector<const ConfigBlock*> out;
    for (const auto& b : blocks) {
        if (b.type == type) {
            out.push_back(&b);
        }
    }
    return out;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    ConfigBlock* current = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated block header");
            }
            std::istringstream hdr(line.substr(1, line.size() - 2));
            ConfigBlock block;
            hdr >> block.type >> block.name;
            if (block.type.empty()) {
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": empty block header");
            }
            cfg.blocks.push_back(std::move(block));
            current = &cfg.blocks.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || current == nullptr) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value' inside a block");
        }
        current->entries.emplace_back(trim(line.substr(0, eq)),
                                      trim(line.substr(eq + 1)));
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace gromet
