#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lie {

// Parse / invalid-input errors. CLI maps these to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Missing data / unsupported combination (e.g. exceptional induction).
// CLI exit code 3.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Configured resource budget exceeded (never a silently wrong answer).
// CLI exit code 4.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct IntVecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) hash_combine(h, static_cast<std::size_t>(x) * 0x9e3779b1U + 0x85ebca6bU);
        return h;
    }
};

} // namespace lie
