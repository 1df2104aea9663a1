#pragma once

#include "ssg/image.hpp"

namespace ssg {

/// Tuning knobs for the local-stimuli operator.
///
/// `epsilon_floor` removes the log singularity: intensities are floored at
/// this value before the log10 transform. The default of 1.0 suits rasters on
/// the [0, 255] scale; lower it for pre-normalized data.
struct LstConfig {
    double k = 1.0;
    bool alternate_form = false;
    double epsilon_floor = 1.0;
};

/// Per-pixel perceived brightness, k * log10(max(I, epsilon_floor)).
struct BrightnessMap {
    Image values;
};

/// Similarity-weighted brightness variation along x and y. Sign-carrying;
/// kept for inspection, the operator output is the magnitude map.
struct StimulusField {
    Image vx;
    Image vy;
};

/// g * exp(-|g|): odd, peaks at |g| = 1 with value exp(-1), decays for
/// larger gradients so outliers are suppressed.
double shepard_weight(double g) noexcept;

/// |g| * (1 - exp(-|g|)): even, non-negative, monotone in |g|. Amplifies
/// strong edges but responds weakly to slow or low-contrast transitions.
double shepard_weight_alt(double g) noexcept;

BrightnessMap perceived_brightness(const Image& img, const LstConfig& cfg = {});

/// Weighted gradients of the brightness map (not of the raw image).
StimulusField stimulus_field(const Image& img, const LstConfig& cfg = {});

/// Pointwise sqrt(vx^2 + vy^2).
ResponseMap stimulus_magnitude(const StimulusField& stim,
                               const std::string& method = "lst");

/// Full operator: brightness -> gradient -> weighting -> magnitude.
/// Method tag is "lst", or "lst-alt" under the alternate weighting.
ResponseMap local_stimuli(const Image& img, const LstConfig& cfg = {});

}  // namespace ssg
