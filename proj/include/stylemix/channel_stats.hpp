#pragma once

#include <vector>

namespace stylemix {

// Numerical floor for channel standard deviations. Added inside the
// variance (sigma = sqrt(var + eps^2)) so normalization never divides
// by zero.
inline constexpr double kSigmaFloor = 1e-5;

// Per-channel mean/stddev vectors of a feature map. sigma[c] >= kSigmaFloor.
struct ChannelStats {
    std::vector<double> mu;
    std::vector<double> sigma;

    int channels() const { return static_cast<int>(mu.size()); }

    // Throws std::invalid_argument if lengths differ, values are not
    // finite, or any sigma is below the floor.
    void validate() const;
};

}  // namespace stylemix
