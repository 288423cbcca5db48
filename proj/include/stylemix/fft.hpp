#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace stylemix::fft {

// 1-D complex DFT plan for a fixed length. Mixed-radix Cooley-Tukey with
// specialized radix-2/3/4 butterflies and a generic kernel for primes up
// to 61; lengths containing a larger prime factor run through Bluestein's
// algorithm on a power-of-two convolution. Both directions are
// unnormalized; summation order is fixed, so repeated transforms of the
// same input are bit-identical.
class Plan {
public:
    explicit Plan(int n);

    int size() const { return n_; }

    // out must not alias in.
    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

private:
    void recurse(const std::complex<double>* in, std::size_t stride,
                 std::complex<double>* out, int n, std::size_t depth) const;
    void init_bluestein();
    void run_bluestein(const std::complex<double>* in, std::complex<double>* out) const;

    int n_ = 1;
    bool bluestein_ = false;
    std::vector<int> factors_;  // radix per recursion depth
    // Per depth: stage twiddles w_n^{j*k} laid out as [j*m + k], size n_depth.
    std::vector<std::vector<std::complex<double>>> stage_tw_;
    // Per depth: r-th roots of unity for the generic kernel (empty for r <= 4).
    std::vector<std::vector<std::complex<double>>> radix_roots_;
    // Bluestein state.
    std::unique_ptr<Plan> conv_;
    std::vector<std::complex<double>> chirp_;      // exp(-i pi j^2 / n)
    std::vector<std::complex<double>> chirp_fft_;  // FFT of the wrapped conjugate chirp
};

}  // namespace stylemix::fft
