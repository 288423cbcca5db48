#pragma once

#include <cstddef>
#include <vector>

namespace stylemix {

// Channel-major (C,H,W) image with unit-normalized values in [0,1].
// C is 1 (grayscale) or 3 (RGB, channel order R,G,B).
struct ImageTensor {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;  // size C*H*W, index (c*H + y)*W + x

    static ImageTensor zeros(int channels, int height, int width);

    std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
    double* plane(int c) { return data.data() + c * plane_size(); }
    const double* plane(int c) const { return data.data() + c * plane_size(); }

    double& at(int c, int y, int x) { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }
    double at(int c, int y, int x) const { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }

    bool same_shape(const ImageTensor& other) const {
        return channels == other.channels && height == other.height && width == other.width;
    }

    // Throws std::invalid_argument on violated invariants
    // (C in {1,3}, H,W >= 1, data length C*H*W, all values finite).
    void validate() const;
};

// Channel-major (C,H,W) activation tensor. H*W >= 2 so per-channel
// statistics are defined.
struct FeatureMap {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;

    static FeatureMap zeros(int channels, int height, int width);

    std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
    double* plane(int c) { return data.data() + c * plane_size(); }
    const double* plane(int c) const { return data.data() + c * plane_size(); }

    double& at(int c, int y, int x) { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }
    double at(int c, int y, int x) const { return data[(static_cast<std::size_t>(c) * height + y) * width + x]; }

    void validate() const;
};

}  // namespace stylemix
