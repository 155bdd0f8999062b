#include "tkkforge/check.hpp"

#include <random>
#include <sstream>

namespace tkkforge {

std::string Witness::str() const {
    std::ostringstream os;
    os << "violation of " << law << " at (";
    for (Index i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

std::vector<Vec> sample_vectors(const Field& f, Index dim, Index count, std::uint64_t seed) {
    // raw mt19937_64 draws reduced by hand: uniform_int_distribution is not
    // reproducible across standard libraries
    std::mt19937_64 rng(seed);
    std::vector<Vec> out;
    out.reserve(count);
    for (Index s = 0; s < count; ++s) {
        Vec v(f, dim);
        for (Index i = 0; i < dim; ++i) {
            auto raw = static_cast<std::int64_t>(rng() % 7) - 3;  // in [-3, 3]
            v[i] = Scalar::of_int(f, raw);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace tkkforge
