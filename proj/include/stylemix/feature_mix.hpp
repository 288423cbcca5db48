#pragma once

#include <span>

#include "stylemix/channel_stats.hpp"
#include "stylemix/rng.hpp"
#include "stylemix/tensor.hpp"

namespace stylemix::feature {

struct MixParams {
    double beta_a = 0.1;
    double beta_b = 2.0;
    int gmm_components = 5;
    bool shuffle = true;

    void validate() const;  // throws std::invalid_argument
};

// Per-channel mean and stddev over the H*W positions; sigma uses the
// population variance plus kSigmaFloor^2 inside the square root.
ChannelStats channel_stats(const FeatureMap& fmap);

// Elementwise (1-beta)*a + beta*b on both vectors, 0 <= beta <= 1.
ChannelStats mix_stats(const ChannelStats& stats_m, const ChannelStats& stats_star,
                       double beta);

// Applies the SAME permutation to mu and sigma: out[c] = in[perm[c]].
ChannelStats shuffle_stats(const ChannelStats& stats, std::span<const int> perm);

// Renormalizes each channel to the target statistics:
// out = (f - mu_own)/sigma_own * sigma_target + mu_target.
FeatureMap apply_stats(const FeatureMap& fmap, const ChannelStats& target);

struct FeatureMixInfo {
    double beta = 0.0;
    int replaced_channels = 0;
    bool shuffled = false;
};

// Full feature-level style mix: stats of both maps, GMM smoothing of the
// styled stats, Beta-weighted stat blend, joint channel shuffle, and
// renormalization of f_m to the resulting statistics. Channel counts must
// match; spatial sizes may differ (only statistics of f_st are used).
// Stream draw order: GMM seeding draws, then beta (skipped when
// beta_override is given), then the shuffle permutation.
FeatureMap smooth_feature_style_mix(const FeatureMap& f_m, const FeatureMap& f_st,
                                    const MixParams& params, rng::Stream& stream,
                                    FeatureMixInfo* info = nullptr,
                                    const double* beta_override = nullptr);

}  // namespace stylemix::feature
