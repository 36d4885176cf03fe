#include "uavbs/users_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "uavbs/errors.hpp"

namespace uavbs {

std::vector<Point2D> read_users(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open user file '" + path + "'");

    std::vector<Point2D> users;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream fields(line);
        double x = 0.0, y = 0.0;
        if (!(fields >> x)) {
            if (line.find_first_not_of(" \t\r\n\f\v") == std::string::npos)
                continue;  // blank or comment-only line
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": expected two coordinates");
        }
        if (!(fields >> y))
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": expected two coordinates, got one");
        std::string extra;
        if (fields >> extra)
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": unexpected trailing token '" + extra + "'");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": coordinates must be finite");
        users.push_back({x, y});
    }
    return users;
}

void write_users(const std::string& path, std::span<const Point2D> users,
                 std::span<const std::string> header_lines) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write user file '" + path + "'");
    for (const std::string& h : header_lines) out << "# " << h << "\n";
    char buf[80];
    for (const Point2D& p : users) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g\n", p.x, p.y);
        out << buf;
    }
    if (!out)
        throw DataError("failed while writing user file '" + path + "'");
}

}  // namespace uavbs
