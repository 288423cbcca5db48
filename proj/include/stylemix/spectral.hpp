#pragma once

#include <complex>
#include <span>
#include <vector>

#include "stylemix/tensor.hpp"

namespace stylemix::spectral {

// Complex 2-D spectrum of one channel, unshifted (DC at index (0,0)).
// coeff[v*width + u] = F(u,v), u in [0,W), v in [0,H).
struct SpectrumChannel {
    int height = 0;
    int width = 0;
    std::vector<std::complex<double>> coeff;
};

// Amplitude/phase decomposition of a spectrum. amplitude >= 0 everywhere;
// phase in (-pi, pi], with the zero coefficient assigned phase 0.
struct PolarSpectrum {
    int height = 0;
    int width = 0;
    std::vector<double> amplitude;
    std::vector<double> phase;
};

// Unnormalized forward DFT of a real H x W channel:
// F(u,v) = sum_x sum_y f(x,y) exp(-2 pi i (u x / W + v y / H)).
// Throws on non-finite input.
SpectrumChannel forward_dft(std::span<const double> channel, int height, int width);

PolarSpectrum polar_decompose(const SpectrumChannel& spec);

// A * exp(i P) back to a complex spectrum.
SpectrumChannel recompose(const PolarSpectrum& polar);

// Elementwise convex blend (1-omega)*a_src + omega*a_sty, 0 <= omega <= 1.
std::vector<double> mix_amplitude(const std::vector<double>& a_src,
                                  const std::vector<double>& a_sty, double omega);

// Real part of the inverse DFT of a_mixed * exp(i p_src), with 1/(H*W)
// normalization. The discarded imaginary residue (its RMS relative to the
// RMS of the real output) is written to *imag_residue if given; a residue
// above 1e-3 indicates broken conjugate symmetry and is reported on stderr.
std::vector<double> reconstruct_channel(const std::vector<double>& a_mixed,
                                        const std::vector<double>& p_src,
                                        int height, int width,
                                        double* imag_residue = nullptr);

// Full image-level style mix: per channel, forward DFT of both images,
// amplitude blend with weight omega, reconstruction with the source phase,
// clamp to [0,1]. Shapes must match exactly (no resampling). The largest
// per-channel imaginary residue is written to *imag_residue if given.
ImageTensor image_style_mix(const ImageTensor& src, const ImageTensor& sty,
                            double omega, double* imag_residue = nullptr);

}  // namespace stylemix::spectral
