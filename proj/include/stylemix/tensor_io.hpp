#pragma once

#include <string>
#include <vector>

#include "stylemix/tensor.hpp"

namespace stylemix::io {

// Decodes an 8-bit grayscale or RGB image (PNG, JPEG) into [0,1] values,
// p -> p/255 exactly, channel order R,G,B. Throws std::runtime_error with
// the path on unreadable files or unsupported bit depth / color model.
ImageTensor load_image(const std::string& path);

// Writes a PNG (lossless; reload reproduces the quantized values exactly).
// Values are clamped to [0,1] and quantized round-half-up to v*255.
void save_image(const ImageTensor& img, const std::string& path);

// Reads an NPY v1.0/v2.0 file: little-endian f32 or f64, C-order, shape
// (C,H,W) or (1,C,H,W) (squeezed). f32 input is widened to f64. Distinct
// diagnostics for Fortran order, non-float dtype, bad rank, and a rank-4
// leading dimension != 1.
FeatureMap load_tensor(const std::string& path);

// Writes NPY v1.0, '<f4', C-order, shape (C,H,W); byte-stable for
// identical input. f64 values narrow by round-to-nearest-even.
void save_tensor(const FeatureMap& fmap, const std::string& path);

struct ManifestEntry {
    enum class Mode { image, feature };
    Mode mode = Mode::image;
    std::string source_path;
    std::string styled_path;
    std::string output_path;
    int entry_index = 0;  // zero-based physical line number
};

const char* to_string(ManifestEntry::Mode mode);

// Parses a JSON-lines manifest. Each non-blank, non-'#' line holds an
// object with keys mode ("image"|"feature"), source, styled, output.
// entry_index is the zero-based physical line number, so skipped lines
// leave gaps.
std::vector<ManifestEntry> parse_manifest(const std::string& path);

}  // namespace stylemix::io
