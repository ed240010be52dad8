// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sgedit/graph.hpp"
#include "sgedit/image.hpp"

namespace sgedit::metrics {

using Roi = std::optional<std::vector<PixelRect>>;

/// Mean absolute error on the 0-255 scale over every channel of every pixel
/// (or the pixels of the RoI union). An empty RoI yields 0 and a warning.
double mae(const Image& a, const Image& b, const Roi& roi = std::nullopt);

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double data_range = 1.0;
};

/// Mean SSIM over valid (fully inside) Gaussian windows, averaged over
/// channels, reported x100. The RoI variant keeps windows whose center lies in
/// the RoI union; an RoI that misses the valid center range is snapped to the
/// nearest valid centers. Throws if the image is smaller than the window.
double ssim(const Image& a, const Image& b, const Roi& roi = std::nullopt, const SsimParams& params = {});

/// Normalized 1-D Gaussian taps used by ssim().
std::vector<double> gaussian_taps(int window, double sigma);

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sgedit::metrics
