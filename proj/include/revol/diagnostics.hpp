#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "revol/series.hpp"

namespace revol {

// Table-style descriptive statistics. Central moments use 1/T normalization
// throughout; kurtosis is non-excess (Gaussian = 3).
struct DescriptiveReport {
    double mean = 0.0;
    double sd = 0.0;
    double max = 0.0;
    double min = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double se_mean = 0.0;
    double se_skew = 0.0;
    double se_kurt = 0.0;
    double jb_stat = 0.0;
    double lb_stat = 0.0;
    int lb_lags = 0;
};

// JB = (T/6) (Sk^2 + (Ku - 3)^2 / 4).
inline double jb_statistic(double skewness, double kurtosis, std::size_t T) {
    const double k = kurtosis - 3.0;
    return static_cast<double>(T) / 6.0 * (skewness * skewness + 0.25 * k * k);
}

namespace detail {

struct CentralMoments {
    double mean, m2, m3, m4;
};

inline CentralMoments central_moments(const std::vector<double>& x, const char* what) {
    const std::size_t T = x.size();
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(T);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(T);
    m3 /= static_cast<double>(T);
    m4 /= static_cast<double>(T);
    if (!(m2 > 0.0)) throw data_error(std::string(what) + ": degenerate (zero-variance) series");
    return {mean, m2, m3, m4};
}

}  // namespace detail

inline std::vector<double> autocorrelation(const std::vector<double>& x, int max_lag) {
    if (max_lag <= 0) throw data_error("autocorrelation: max_lag must be positive");
    const std::size_t T = x.size();
    if (T <= static_cast<std::size_t>(max_lag))
        throw data_error("autocorrelation: series too short for max_lag");
    const auto m = detail::central_moments(x, "autocorrelation");
    std::vector<double> rho;
    rho.reserve(static_cast<std::size_t>(max_lag));
    for (int j = 1; j <= max_lag; ++j) {
        double g = 0.0;
        for (std::size_t t = static_cast<std::size_t>(j); t < T; ++t)
            g += (x[t] - m.mean) * (x[t - static_cast<std::size_t>(j)] - m.mean);
        rho.push_back(g / static_cast<double>(T) / m.m2);
    }
    return rho;
}

enum class LbAdjust { none, heteroskedasticity };

// Ljung-Box Q over the first `lags` autocorrelations. The heteroskedasticity
// adjustment standardizes each rho_j by its robust variance
// v_j = sum (x_t - xbar)^2 (x_{t-j} - xbar)^2 / (sum (x_t - xbar)^2)^2,
// scaled so the null variance is 1/T; it reduces to the plain statistic
// under homoskedasticity.
inline double ljung_box(const std::vector<double>& x, int lags, LbAdjust adjust) {
    if (lags <= 0) throw data_error("ljung_box: lags must be positive");
    const std::size_t T = x.size();
    if (T <= static_cast<std::size_t>(lags) + 1)
        throw data_error("ljung_box: need T > lags + 1");
    const auto m = detail::central_moments(x, "ljung_box");
    const double Td = static_cast<double>(T);
    const double denom = m.m2 * Td;  // sum of squared deviations

    double q = 0.0;
    for (int j = 1; j <= lags; ++j) {
        double g = 0.0, w = 0.0;
        for (std::size_t t = static_cast<std::size_t>(j); t < T; ++t) {
            const double a = x[t] - m.mean;
            const double b = x[t - static_cast<std::size_t>(j)] - m.mean;
            g += a * b;
            w += a * a * b * b;
        }
        const double rho = g / denom;
        double rho2 = rho * rho;
        if (adjust == LbAdjust::heteroskedasticity) {
            const double v = w / (denom * denom);
            if (!(v > 0.0)) throw data_error("ljung_box: degenerate robust variance at lag " +
                                             std::to_string(j));
            rho2 /= Td * v;
        }
        q += rho2 / (Td - static_cast<double>(j));
    }
    return Td * (Td + 2.0) * q;
}

inline DescriptiveReport describe(const std::vector<double>& x, int lb_lags = 0,
                                  LbAdjust lb_adjust = LbAdjust::heteroskedasticity) {
    const std::size_t T = x.size();
    if (T < 4) throw data_error("describe: need at least 4 observations");
    const auto m = detail::central_moments(x, "describe");

    DescriptiveReport rep;
    rep.mean = m.mean;
    rep.sd = std::sqrt(m.m2);
    rep.max = *std::max_element(x.begin(), x.end());
    rep.min = *std::min_element(x.begin(), x.end());
    rep.skewness = m.m3 / std::pow(m.m2, 1.5);
    rep.kurtosis = m.m4 / (m.m2 * m.m2);
    rep.se_mean = rep.sd / std::sqrt(static_cast<double>(T));
    rep.se_skew = std::sqrt(6.0 / static_cast<double>(T));
    rep.se_kurt = std::sqrt(24.0 / static_cast<double>(T));
    rep.jb_stat = jb_statistic(rep.skewness, rep.kurtosis, T);
    if (lb_lags > 0) {
        rep.lb_stat = ljung_box(x, lb_lags, lb_adjust);
        rep.lb_lags = lb_lags;
    }
    return rep;
}

}  // namespace revol
