#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uavbs {

/* Minimal INI-style configuration: [section] headers, key = value pairs,
 * '#' or ';' comments.  Keys are addressed as "section.key"; keys before
 * any section header live in the empty section "".  Parse errors carry
 * file and line; typed accessors throw DataError naming the key. */
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text,
                                   const std::string& label = "<config>");

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

    /* Whitespace- or comma-separated list of doubles. */
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;
    std::vector<std::string> get_string_list(const std::string& key,
                                             const std::vector<std::string>& fallback) const;

    /* All keys present in the file, for unknown-key validation. */
    std::vector<std::string> keys() const;

    /* "file:line" of the key definition, for error messages. */
    std::string location(const std::string& key) const;

private:
    double parse_double(const std::string& key, const std::string& raw) const;

    std::string label_;
    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_;
};

}  // namespace uavbs
