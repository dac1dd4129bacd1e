// errors.cpp — ConfigError message assembly and the process-wide warning hook

#include "vcmps/errors.hpp"

#include <iostream>
#include <mutex>
#include <sstream>

namespace vcmps {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::ostringstream os;
    os << "invalid configuration (" << violations.size() << " violation"
       << (violations.size() == 1 ? "" : "s") << "):";
    for (const auto& v : violations) os << "\n  - " << v;
    return os.str();
}

std::mutex warn_mutex;
WarningHandler warn_handler;  // empty → stderr

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations_)
    : std::runtime_error(join_violations(violations_)), violations(std::move(violations_)) {}

void set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(warn_mutex);
    warn_handler = std::move(handler);
}

void warn(const std::string& message) {
    std::lock_guard lock(warn_mutex);
    if (warn_handler) {
        warn_handler(message);
    } else {
        std::cerr << "[vcmps] warning: " << message << "\n";
    }
}

}  // namespace vcmps
