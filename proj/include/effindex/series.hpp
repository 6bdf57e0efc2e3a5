#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace effindex {

// Calendar day; ordering matches ISO-8601 string order.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  std::string to_string() const;  // YYYY-MM-DD
  Date next_day() const;

  static Date parse(const std::string& iso);  // strict YYYY-MM-DD
};

struct Observation {
  Date date;
  double close = 0.0;
};

/// Closing prices for one ticker. Construction sorts by date and enforces
/// strictly increasing dates, positive finite closes, and length >= 2.
class PriceSeries {
public:
  PriceSeries(std::string ticker, std::vector<Observation> observations);

  const std::string& ticker() const { return ticker_; }
  const std::vector<Observation>& observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }

private:
  std::string ticker_;
  std::vector<Observation> observations_;
};

/// Logarithmic close/close returns; values[t] = ln(close[t+1]) - ln(close[t]).
struct ReturnSeries {
  std::string ticker;
  std::vector<double> values;

  std::size_t t() const { return values.size(); }
};

/// Integrated path handed to the scaling estimators. Produced by profile()
/// as the cumulative sum of demeaned returns (final element ~0), but the
/// struct itself accepts any path so estimators can be run on raw curves.
struct Profile {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

struct DescriptiveStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double sd = 0.0;                        // sample SD, denominator T-1
  std::optional<double> skewness;         // empty when variance is zero
  std::optional<double> excess_kurtosis;  // empty when variance is zero
};

ReturnSeries log_returns(const PriceSeries& prices);

// Cumulative sum of demeaned returns; the last element vanishes up to
// accumulation error (checked against 1e-9 * T).
Profile profile(const ReturnSeries& returns);

// Mean/min/max, sample SD (T-1), moment skewness m3/m2^1.5 and excess
// kurtosis m4/m2^2 - 3 with central moments over T. Requires T >= 4.
DescriptiveStats descriptive_stats(const ReturnSeries& returns);

// Length guards used by the analysis pipeline: below kMinSamplesHard a
// series is rejected outright; below kMinSamplesWarn it is analyzed but
// flagged, since several estimators require T >= 100 anyway.
inline constexpr std::size_t kMinSamplesHard = 25;
inline constexpr std::size_t kMinSamplesWarn = 100;

}  // namespace effindex
