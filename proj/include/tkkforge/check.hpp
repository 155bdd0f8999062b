#pragma once

#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tkkforge/linalg.hpp"

namespace tkkforge {

// Sticky certification flag; copyable so certified values stay values.
class CertFlag {
  public:
    CertFlag() = default;
    CertFlag(const CertFlag& o) : v_(o.v_.load()) {}
    CertFlag& operator=(const CertFlag& o) {
        v_.store(o.v_.load());
        return *this;
    }
    bool get() const { return v_.load(); }
    void set() { v_.store(true); }

  private:
    std::atomic<bool> v_{false};
};

// Witness of a violated law: which law, the (lexicographically first)
// basis/sample tuple that breaks it, and a short human-readable detail.
struct Witness {
    std::string law;
    std::vector<Index> indices;
    std::string detail;

    std::string str() const;
};

struct CheckResult {
    std::optional<Witness> violation;

    bool ok() const { return !violation.has_value(); }
    static CheckResult pass() { return {}; }
    static CheckResult fail(Witness w) { return {std::move(w)}; }
};

// Thrown by constructors/operations that require certified inputs.
class CheckFailed : public std::runtime_error {
  public:
    explicit CheckFailed(Witness w) : std::runtime_error(w.str()), witness(std::move(w)) {}
    Witness witness;
};

// Deterministic small-coefficient sample vectors (seeded, reproducible).
std::vector<Vec> sample_vectors(const Field& f, Index dim, Index count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240811;

}  // namespace tkkforge
