#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revol {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct data_error : error {
    using error::error;
};
struct alignment_error : error {
    using error::error;
};
struct numeric_error : error {
    using error::error;
};
struct convergence_failure : error {
    using error::error;
};

// Dates are opaque sortable identifiers (ISO strings sort correctly); no
// calendar arithmetic anywhere — alignment is purely by membership.
using Date = std::string;

namespace detail {

inline void require_strictly_increasing(const std::vector<Date>& dates, const char* what) {
    for (std::size_t i = 1; i < dates.size(); ++i) {
        if (!(dates[i - 1] < dates[i]))
            throw data_error(std::string(what) + ": dates not strictly increasing at '" +
                             dates[i] + "'");
    }
}

}  // namespace detail

// Dated close-to-close returns in percent (log return x 100).
class DailyReturnSeries {
  public:
    DailyReturnSeries(std::vector<Date> dates, std::vector<double> returns)
        : dates_(std::move(dates)), returns_(std::move(returns)) {
        if (dates_.size() != returns_.size())
            throw data_error("DailyReturnSeries: dates/returns length mismatch");
        detail::require_strictly_increasing(dates_, "DailyReturnSeries");
        for (std::size_t i = 0; i < returns_.size(); ++i) {
            if (!std::isfinite(returns_[i]))
                throw data_error("DailyReturnSeries: non-finite return at '" + dates_[i] + "'");
        }
    }

    const std::vector<Date>& dates() const { return dates_; }
    const std::vector<double>& values() const { return returns_; }
    std::size_t size() const { return returns_.size(); }

  private:
    std::vector<Date> dates_;
    std::vector<double> returns_;
};

// One intraday bar of log prices.
struct Bar {
    double open;
    double high;
    double low;
    double close;
};

// Per-day equidistant OHLC log-price bars.
class IntradayGrid {
  public:
    IntradayGrid(Date date, std::vector<Bar> bars, int interval_seconds)
        : date_(std::move(date)), bars_(std::move(bars)), interval_seconds_(interval_seconds) {
        if (bars_.empty()) throw data_error("IntradayGrid: needs at least one bar");
        if (interval_seconds_ <= 0) throw data_error("IntradayGrid: interval must be positive");
        for (std::size_t i = 0; i < bars_.size(); ++i) {
            const Bar& b = bars_[i];
            if (!std::isfinite(b.open) || !std::isfinite(b.high) || !std::isfinite(b.low) ||
                !std::isfinite(b.close))
                throw data_error("IntradayGrid: non-finite log price in bar " + std::to_string(i) +
                                 " of " + date_);
            if (b.low > std::min(b.open, b.close) || std::max(b.open, b.close) > b.high)
                throw data_error("IntradayGrid: bar " + std::to_string(i) + " of " + date_ +
                                 " violates low <= open,close <= high");
        }
    }

    const Date& date() const { return date_; }
    const std::vector<Bar>& bars() const { return bars_; }
    std::size_t n_bars() const { return bars_.size(); }
    int interval_seconds() const { return interval_seconds_; }

  private:
    Date date_;
    std::vector<Bar> bars_;
    int interval_seconds_;
};

enum class MeasureKind { squared_return, rv, rrv, rk, proxy };

inline std::string to_string(MeasureKind k) {
    switch (k) {
        case MeasureKind::squared_return: return "squared-return";
        case MeasureKind::rv: return "RV";
        case MeasureKind::rrv: return "RRV";
        case MeasureKind::rk: return "RK";
        case MeasureKind::proxy: return "proxy";
    }
    throw error("unknown measure kind");
}

inline MeasureKind measure_kind_from_string(const std::string& s) {
    if (s == "squared-return") return MeasureKind::squared_return;
    if (s == "RV") return MeasureKind::rv;
    if (s == "RRV") return MeasureKind::rrv;
    if (s == "RK") return MeasureKind::rk;
    if (s == "proxy") return MeasureKind::proxy;
    throw data_error("unknown measure kind '" + s + "'");
}

// Dated strictly positive volatility measures, percent^2 per day.
class RealizedMeasureSeries {
  public:
    RealizedMeasureSeries(std::vector<Date> dates, std::vector<double> values, MeasureKind kind)
        : dates_(std::move(dates)), values_(std::move(values)), kind_(kind) {
        if (dates_.size() != values_.size())
            throw data_error("RealizedMeasureSeries: dates/values length mismatch");
        detail::require_strictly_increasing(dates_, "RealizedMeasureSeries");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!(values_[i] > 0.0) || !std::isfinite(values_[i]))
                throw data_error("RealizedMeasureSeries: value must be positive and finite at '" +
                                 dates_[i] + "'");
        }
    }

    const std::vector<Date>& dates() const { return dates_; }
    const std::vector<double>& values() const { return values_; }
    MeasureKind kind() const { return kind_; }
    std::size_t size() const { return values_.size(); }

  private:
    std::vector<Date> dates_;
    std::vector<double> values_;
    MeasureKind kind_;
};

// Returns plus K >= 0 realized-measure series on identical date sets.
class AlignedDataset {
  public:
    AlignedDataset(DailyReturnSeries returns, std::vector<RealizedMeasureSeries> measures)
        : returns_(std::move(returns)), measures_(std::move(measures)) {
        for (const auto& m : measures_) {
            if (m.dates() != returns_.dates())
                throw alignment_error("AlignedDataset: measure dates differ from return dates");
        }
    }

    const DailyReturnSeries& returns() const { return returns_; }
    const std::vector<RealizedMeasureSeries>& measures() const { return measures_; }
    std::size_t n_measures() const { return measures_.size(); }
    std::size_t size() const { return returns_.size(); }

    // Contiguous date-range subset [lo, hi), used by the forecasting windows.
    AlignedDataset slice(std::size_t lo, std::size_t hi) const {
        if (lo >= hi || hi > size()) throw error("AlignedDataset::slice: bad range");
        auto cut_dates = std::vector<Date>(returns_.dates().begin() + lo,
                                           returns_.dates().begin() + hi);
        auto cut = [&](const std::vector<double>& v) {
            return std::vector<double>(v.begin() + lo, v.begin() + hi);
        };
        DailyReturnSeries r(cut_dates, cut(returns_.values()));
        std::vector<RealizedMeasureSeries> ms;
        ms.reserve(measures_.size());
        for (const auto& m : measures_)
            ms.emplace_back(cut_dates, cut(m.values()), m.kind());
        return AlignedDataset(std::move(r), std::move(ms));
    }

  private:
    DailyReturnSeries returns_;
    std::vector<RealizedMeasureSeries> measures_;
};

enum class AlignPolicy { intersect, strict };

inline AlignedDataset align(const DailyReturnSeries& returns,
                            const std::vector<RealizedMeasureSeries>& measures,
                            AlignPolicy policy) {
    if (policy == AlignPolicy::strict) {
        for (const auto& m : measures) {
            const auto& a = returns.dates();
            const auto& b = m.dates();
            const std::size_t n = std::min(a.size(), b.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] != b[i])
                    throw alignment_error("align(strict): date mismatch at '" +
                                          std::min(a[i], b[i]) + "'");
            }
            if (a.size() != b.size())
                throw alignment_error("align(strict): date mismatch at '" +
                                      (a.size() > b.size() ? a[n] : b[n]) + "'");
        }
        return AlignedDataset(returns, measures);
    }

    // Intersection of all date sets; inputs are sorted, so membership tests
    // can walk each series once.
    std::vector<Date> common = returns.dates();
    for (const auto& m : measures) {
        std::vector<Date> next;
        std::set_intersection(common.begin(), common.end(), m.dates().begin(), m.dates().end(),
                              std::back_inserter(next));
        common.swap(next);
    }
    if (common.empty()) throw alignment_error("align(intersect): empty date intersection");

    auto subset = [&common](const std::vector<Date>& dates, const std::vector<double>& values) {
        std::vector<double> out;
        out.reserve(common.size());
        std::size_t j = 0;
        for (const auto& d : common) {
            while (dates[j] != d) ++j;
            out.push_back(values[j]);
        }
        return out;
    };

    DailyReturnSeries r(common, subset(returns.dates(), returns.values()));
    std::vector<RealizedMeasureSeries> ms;
    ms.reserve(measures.size());
    for (const auto& m : measures)
        ms.emplace_back(common, subset(m.dates(), m.values()), m.kind());
    return AlignedDataset(std::move(r), std::move(ms));
}

enum class DemeanMode { none, sample_mean };

// The default everywhere is DemeanMode::none (zero conditional mean).
inline DailyReturnSeries demean(const DailyReturnSeries& returns, DemeanMode mode) {
    if (returns.size() == 0) throw data_error("demean: empty series");
    if (mode == DemeanMode::none) return returns;
    double mean = 0.0;
    for (double r : returns.values()) mean += r;
    mean /= static_cast<double>(returns.size());
    std::vector<double> out = returns.values();
    for (double& r : out) r -= mean;
    return DailyReturnSeries(returns.dates(), std::move(out));
}

}  // namespace revol
