#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "revol/log.hpp"
#include "revol/series.hpp"

namespace revol {

// Intraday computations run in natural log units and are converted to
// percent^2 at the series boundary.
inline constexpr double kPct2 = 1e4;

// Floor for zero-valued measures so log x is always defined (percent^2).
inline constexpr double kMeasureFloor = 1e-12;

// Range normalization: lambda2m = E[S^2] of a standard Brownian motion's
// range observed at m points per interval. m == kContinuousMonitoring marks
// the continuous limit, where lambda2m must not exceed 4 ln 2.
inline constexpr int kContinuousMonitoring = 0;

struct RangeScaling {
    double lambda2m = 2.0;
    int m = kContinuousMonitoring;

    RangeScaling(double lambda2m_, int m_) : lambda2m(lambda2m_), m(m_) {
        if (!(lambda2m > 0.0)) throw data_error("RangeScaling: lambda2m must be positive");
        if (m < 0) throw data_error("RangeScaling: m must be positive or kContinuousMonitoring");
        if (m == kContinuousMonitoring && lambda2m > 4.0 * std::log(2.0) + 1e-6)
            throw data_error("RangeScaling: lambda2m exceeds the continuous-monitoring limit");
    }
};

struct ProxyAdjustment {
    double c_hat = 1.0;

    explicit ProxyAdjustment(double c) : c_hat(c) {
        if (!(c_hat > 0.0) || !std::isfinite(c_hat))
            throw data_error("ProxyAdjustment: c_hat must be positive");
    }
};

namespace detail {

inline double floor_measure(double value_pct2, const std::string& what) {
    if (value_pct2 > kMeasureFloor) return value_pct2;
    log_debug(what + ": value " + std::to_string(value_pct2) + " floored to 1e-12");
    return kMeasureFloor;
}

}  // namespace detail

// Close-to-close intraday log returns; the first bar contributes its
// open-to-close move, so there is no overnight term.
inline std::vector<double> intraday_log_returns(const IntradayGrid& grid) {
    const auto& bars = grid.bars();
    std::vector<double> r;
    r.reserve(bars.size());
    r.push_back(bars[0].close - bars[0].open);
    for (std::size_t i = 1; i < bars.size(); ++i)
        r.push_back(bars[i].close - bars[i - 1].close);
    return r;
}

inline RealizedMeasureSeries squared_return(const DailyReturnSeries& returns) {
    if (returns.size() == 0) throw data_error("squared_return: empty series");
    std::vector<double> v;
    v.reserve(returns.size());
    for (double r : returns.values())
        v.push_back(detail::floor_measure(r * r, "squared_return"));
    return RealizedMeasureSeries(returns.dates(), std::move(v), MeasureKind::squared_return);
}

// RV = sum of squared intraday log returns, in percent^2.
inline double realized_variance(const IntradayGrid& grid) {
    double sum = 0.0;
    for (double r : intraday_log_returns(grid)) sum += r * r;
    return detail::floor_measure(sum * kPct2, "realized_variance");
}

// RRV = (1/lambda2m) * sum of squared within-bar high-low log ranges,
// in percent^2.
inline double realized_range_volatility(const IntradayGrid& grid, const RangeScaling& scaling) {
    double sum = 0.0;
    for (const Bar& b : grid.bars()) {
        const double s = b.high - b.low;
        sum += s * s;
    }
    return detail::floor_measure(sum / scaling.lambda2m * kPct2, "realized_range_volatility");
}

namespace detail {

// Parzen kernel weight.
inline double parzen(double u) {
    const double a = std::abs(u);
    if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
    if (a <= 1.0) {
        const double b = 1.0 - a;
        return 2.0 * b * b * b;
    }
    return 0.0;
}

inline double rv_of(const std::vector<double>& r) {
    double s = 0.0;
    for (double x : r) s += x * x;
    return s;
}

// Bandwidth recipe: H = ceil(c* xi^{4/5} n^{3/5}) with c* = 3.5134,
// xi^2 = omega^2 / sqrt(IQ), omega^2 estimated as RV_dense/(2n) and IQ
// proxied by the squared sparse RV (~13 aggregated returns).
inline int parzen_bandwidth(const std::vector<double>& r) {
    const std::size_t n = r.size();
    const double rv_dense = rv_of(r);
    if (!(rv_dense > 0.0)) return 0;
    const double omega2 = rv_dense / (2.0 * static_cast<double>(n));

    const std::size_t stride = std::max<std::size_t>(1, n / 13);
    double rv_sparse = 0.0;
    double acc = 0.0;
    std::size_t in_block = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += r[i];
        if (++in_block == stride || i + 1 == n) {
            rv_sparse += acc * acc;
            acc = 0.0;
            in_block = 0;
        }
    }
    if (!(rv_sparse > 0.0)) rv_sparse = rv_dense;

    const double xi2 = omega2 / rv_sparse;
    const double h = 3.5134 * std::pow(xi2, 0.4) *
                     std::pow(static_cast<double>(n), 0.6);
    return static_cast<int>(std::ceil(h));
}

}  // namespace detail

// Parzen realized kernel RK = sum_{|h|<=H} k(h/(H+1)) gamma_h with gamma_h
// the h-lag realized autocovariance; nonnegative by Parzen positivity.
// bandwidth < 0 selects the automatic rule.
inline double realized_kernel(const IntradayGrid& grid, int bandwidth = -1) {
    if (grid.n_bars() < 3)
        throw data_error("realized_kernel: need at least 3 bars, got " +
                         std::to_string(grid.n_bars()));
    const std::vector<double> r = intraday_log_returns(grid);
    const std::size_t n = r.size();

    const int H = bandwidth >= 0 ? bandwidth : detail::parzen_bandwidth(r);
    if (static_cast<std::size_t>(H) + 1 >= n)
        throw data_error("realized_kernel: bandwidth " + std::to_string(H) +
                         " too large for " + std::to_string(n) + " bars");

    double rk = detail::rv_of(r);  // gamma_0, weight k(0) = 1
    for (int h = 1; h <= H; ++h) {
        double g = 0.0;
        for (std::size_t i = static_cast<std::size_t>(h); i < n; ++i)
            g += r[i] * r[i - static_cast<std::size_t>(h)];
        rk += 2.0 * detail::parzen(static_cast<double>(h) / (H + 1.0)) * g;
    }
    return detail::floor_measure(rk * kPct2, "realized_kernel");
}

// c_hat = sum (r_t - rbar)^2 / sum RK_t^o over a common date set.
inline ProxyAdjustment proxy_adjustment(const DailyReturnSeries& returns,
                                        const RealizedMeasureSeries& rk_open_hours) {
    if (returns.dates() != rk_open_hours.dates())
        throw alignment_error("proxy_adjustment: returns and RK dates differ");
    const auto& r = returns.values();
    double mean = 0.0;
    for (double x : r) mean += x;
    mean /= static_cast<double>(r.size());
    double num = 0.0;
    for (double x : r) num += (x - mean) * (x - mean);
    double den = 0.0;
    for (double x : rk_open_hours.values()) den += x;
    if (!(den > 0.0)) throw data_error("proxy_adjustment: RK series sums to zero");
    return ProxyAdjustment(num / den);
}

inline RealizedMeasureSeries apply_proxy(const RealizedMeasureSeries& rk_open_hours,
                                         const ProxyAdjustment& adj) {
    std::vector<double> v = rk_open_hours.values();
    for (double& x : v) x *= adj.c_hat;
    return RealizedMeasureSeries(rk_open_hours.dates(), std::move(v), MeasureKind::proxy);
}

}  // namespace revol
