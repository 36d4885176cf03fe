#include "uavbs/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "uavbs/errors.hpp"

namespace uavbs {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& label) {
    ConfigFile cfg;
    cfg.label_ = label;

    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw DataError(label + ":" + std::to_string(line_no) +
                                ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw DataError(label + ":" + std::to_string(line_no) +
                                ": empty section name");
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw DataError(label + ":" + std::to_string(line_no) +
                            ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw DataError(label + ":" + std::to_string(line_no) + ": empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (cfg.values_.count(full))
            throw DataError(label + ":" + std::to_string(line_no) + ": duplicate key '" +
                            full + "' (first defined at line " +
                            std::to_string(cfg.lines_[full]) + ")");
        cfg.values_[full] = value;
        cfg.lines_[full] = line_no;
    }
    return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string ConfigFile::get_string(const std::string& key,
                                   const std::string& fallback) const {
    const auto v = get(key);
    return v ? *v : fallback;
}

double ConfigFile::parse_double(const std::string& key, const std::string& raw) const {
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw DataError(location(key) + ": value '" + raw + "' for '" + key +
                        "' is not a number");
    }
}

double ConfigFile::get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    return v ? parse_double(key, *v) : fallback;
}

int ConfigFile::get_int(const std::string& key, int fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    const double d = parse_double(key, *v);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw DataError(location(key) + ": value '" + *v + "' for '" + key +
                        "' is not an integer");
    return i;
}

std::uint64_t ConfigFile::get_u64(const std::string& key, std::uint64_t fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long u = std::stoull(*v, &used);
        if (used != v->size())
            throw std::invalid_argument("trailing characters");
        return static_cast<std::uint64_t>(u);
    } catch (const std::exception&) {
        throw DataError(location(key) + ": value '" + *v + "' for '" + key +
                        "' is not an unsigned integer");
    }
}

bool ConfigFile::get_bool(const std::string& key, bool fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw DataError(location(key) + ": value '" + *v + "' for '" + key +
                    "' is not a boolean");
}

std::vector<double> ConfigFile::get_double_list(const std::string& key,
                                                const std::vector<double>& fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::string normalized = *v;
    for (char& c : normalized) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(normalized);
    std::vector<double> out;
    std::string token;
    while (in >> token) out.push_back(parse_double(key, token));
    if (out.empty())
        throw DataError(location(key) + ": '" + key + "' is an empty list");
    return out;
}

std::vector<std::string> ConfigFile::get_string_list(
    const std::string& key, const std::vector<std::string>& fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::string normalized = *v;
    for (char& c : normalized) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(normalized);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) out.push_back(token);
    if (out.empty())
        throw DataError(location(key) + ": '" + key + "' is an empty list");
    return out;
}

std::vector<std::string> ConfigFile::keys() const {
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
}

std::string ConfigFile::location(const std::string& key) const {
    const auto it = lines_.find(key);
    if (it == lines_.end()) return label_;
    return label_ + ":" + std::to_string(it->second);
}

}  // namespace uavbs
