#pragma once

#include <stdexcept>
#include <string>

namespace ringshaper {

// Invalid or inconsistent scenario configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A quadrature or solver cannot meet its accuracy contract at the requested
// resolution (CLI exit code 3).
class ResolutionError : public std::runtime_error {
public:
    ResolutionError(const std::string& msg, long required_samples)
        : std::runtime_error(msg), required_samples(required_samples) {}
    long required_samples;
};

// File system failures, annotated with the offending path (CLI exit code 4).
class IoError : public std::runtime_error {
public:
    IoError(const std::string& msg, const std::string& path)
        : std::runtime_error(msg + ": " + path), path(path) {}
    std::string path;
};

}  // namespace ringshaper
