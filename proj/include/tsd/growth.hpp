#pragma once

#include <utility>
#include <vector>

namespace tsd {

enum class GrowthModel { linear, exponential };

struct GrowthFit {
    GrowthModel model;
    double rate;       // slope of the linear fit, or b in a*e^{bN}
    double r_squared;  // of the winning model, clamped to [0, 1]
};

// Distinguishes linear from exponential growth of sigma over N. Fits an
// affine line and (in log space) an exponential, compares coefficients of
// determination in the original sigma space, and reports the better model.
// Needs >= 4 points with strictly increasing N. Constant data is linear with
// rate 0; nonpositive sigmas rule out the exponential model.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points);

}  // namespace tsd
