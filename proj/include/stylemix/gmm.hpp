#pragma once

#include <array>
#include <span>
#include <vector>

#include "stylemix/channel_stats.hpp"
#include "stylemix/rng.hpp"

namespace stylemix::gmm {

// One (mean, stddev) channel statistic treated as a 2-D sample.
struct StylePoint {
    double mu = 0.0;
    double sigma = 0.0;
};

struct GmmComponent {
    double weight = 0.0;
    std::array<double, 2> mean{};
    std::array<std::array<double, 2>, 2> cov{};
};

struct GmmModel {
    std::vector<GmmComponent> components;
    double log_likelihood = 0.0;
    int iterations = 0;
    std::vector<double> ll_trace;  // per-iteration log-likelihood
    double lambda = 0.0;           // covariance regularization used

    // Log density of the full mixture at (mu, sigma).
    double log_pdf(double mu, double sigma) const;
};

// Fits a full-covariance 2-D GMM by EM with k-means++ initialization.
// The effective component count is min(m, number of distinct points).
// Initialization and all EM reductions iterate points in ascending
// (mu, sigma) order, so the fit is invariant to input permutation and
// bit-reproducible for a fixed rng seed. Covariances carry a +lambda*I
// ridge with lambda = 1e-6 * mean squared deviation of the data.
// Converges when the relative log-likelihood improvement drops below
// 1e-6, or after 100 iterations.
GmmModel fit_gmm(std::span<const StylePoint> points, int m, rng::Stream& stream);

struct TopComponent {
    int index = 0;
    std::array<double, 2> mean{};
    std::array<std::array<double, 2>, 2> cov{};
};

// Highest-weight component; ties break to the lowest index.
TopComponent top_component(const GmmModel& model);

struct SmoothInfo {
    int replaced_channels = 0;
    int top_index = 0;
    int effective_components = 0;
};

// Fits a GMM over the C (mu_c, sigma_c) points and keeps each channel
// whose argmax-responsibility component is the top component unchanged
// (bit-exact); every other channel's statistics are replaced by the top
// component's mean, with sigma clamped to >= kSigmaFloor.
ChannelStats smooth_stats(const ChannelStats& stats, int m, rng::Stream& stream,
                          SmoothInfo* info = nullptr);

}  // namespace stylemix::gmm
