#pragma once

#include <stdexcept>
#include <string>

namespace uavbs {

/* Malformed or out-of-contract input: bad config keys, unreadable user
 * files, domain violations on data the caller supplied. CLI exit code 2. */
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/* Numerical failure inside an otherwise valid computation: a bracketing
 * scan that finds no sign change, a bisection that cannot converge, an
 * unreachable calibration target. CLI exit code 3. */
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uavbs
