#include "tsd/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsd {
namespace {

struct LineFit {
    double slope;
    double intercept;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

double r_squared(const std::vector<double>& y, const std::vector<double>& pred) {
    double my = 0.0;
    for (double v : y) my += v;
    my /= double(y.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_tot += (y[i] - my) * (y[i] - my);
        ss_res += (y[i] - pred[i]) * (y[i] - pred[i]);
    }
    if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
    return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

}  // namespace

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 4) throw std::invalid_argument("fit_growth needs >= 4 points");
    std::vector<double> x, y;
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto& [n, sigma] : points) {
        if (!std::isfinite(n) || !std::isfinite(sigma))
            throw std::invalid_argument("fit_growth needs finite points");
        if (!x.empty() && n <= x.back())
            throw std::invalid_argument("fit_growth needs strictly increasing N");
        x.push_back(n);
        y.push_back(sigma);
    }

    const auto [y_min, y_max] = std::minmax_element(y.begin(), y.end());
    if (*y_max - *y_min <= 1e-14 * std::max(std::abs(*y_max), 1e-300))
        return {GrowthModel::linear, 0.0, 1.0};

    const LineFit lin = least_squares(x, y);
    std::vector<double> lin_pred(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        lin_pred[i] = lin.slope * x[i] + lin.intercept;
    const double lin_r2 = r_squared(y, lin_pred);

    const bool exp_possible = *y_min > 0.0;
    double exp_r2 = -1.0, exp_rate = 0.0;
    if (exp_possible) {
        std::vector<double> log_y(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) log_y[i] = std::log(y[i]);
        const LineFit expfit = least_squares(x, log_y);
        std::vector<double> exp_pred(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            exp_pred[i] = std::exp(expfit.slope * x[i] + expfit.intercept);
        exp_r2 = r_squared(y, exp_pred);
        exp_rate = expfit.slope;
    }

    if (exp_possible && exp_r2 > lin_r2)
        return {GrowthModel::exponential, exp_rate, exp_r2};
    return {GrowthModel::linear, lin.slope, lin_r2};
}

}  // namespace tsd
