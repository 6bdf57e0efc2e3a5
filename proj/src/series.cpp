#include "effindex/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "effindex/error.hpp"

namespace effindex {

namespace {

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return kDays[month - 1];
}

}  // namespace

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

Date Date::next_day() const {
  Date d = *this;
  ++d.day;
  if (d.day > days_in_month(d.year, d.month)) {
    d.day = 1;
    ++d.month;
    if (d.month > 12) {
      d.month = 1;
      ++d.year;
    }
  }
  return d;
}

Date Date::parse(const std::string& iso) {
  auto fail = [&] {
    throw InvalidInputError("invalid date '" + iso + "' (expected YYYY-MM-DD)");
  };
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') fail();
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (iso[i] < '0' || iso[i] > '9') fail();
  Date d;
  d.year = std::stoi(iso.substr(0, 4));
  d.month = std::stoi(iso.substr(5, 2));
  d.day = std::stoi(iso.substr(8, 2));
  if (d.month < 1 || d.month > 12 || d.day < 1 ||
      d.day > days_in_month(d.year, d.month))
    fail();
  return d;
}

PriceSeries::PriceSeries(std::string ticker, std::vector<Observation> observations)
    : ticker_(std::move(ticker)), observations_(std::move(observations)) {
  if (observations_.size() < 2)
    throw InsufficientDataError(ticker_ + ": need at least 2 observations, got " +
                                std::to_string(observations_.size()));
  std::sort(observations_.begin(), observations_.end(),
            [](const Observation& a, const Observation& b) { return a.date < b.date; });
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const Observation& o = observations_[i];
    if (!std::isfinite(o.close) || o.close <= 0.0)
      throw InvalidInputError(ticker_ + ": non-positive close " +
                              std::to_string(o.close) + " at " + o.date.to_string());
    if (i > 0 && !(observations_[i - 1].date < o.date))
      throw InvalidInputError(ticker_ + ": duplicate date " + o.date.to_string());
  }
}

ReturnSeries log_returns(const PriceSeries& prices) {
  const auto& obs = prices.observations();
  ReturnSeries out;
  out.ticker = prices.ticker();
  out.values.reserve(obs.size() - 1);
  for (std::size_t i = 1; i < obs.size(); ++i)
    out.values.push_back(std::log(obs[i].close) - std::log(obs[i - 1].close));
  return out;
}

Profile profile(const ReturnSeries& returns) {
  const std::size_t t = returns.t();
  if (t < 2)
    throw InsufficientDataError("profile: need T >= 2, got " + std::to_string(t));
  double sum = 0.0;
  for (double v : returns.values) sum += v;
  const double mean = sum / static_cast<double>(t);

  Profile p;
  p.values.resize(t);
  double acc = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    acc += returns.values[i] - mean;
    p.values[i] = acc;
  }
  // Demeaning guarantees the path returns to zero; anything beyond
  // accumulation roundoff means the input was not finite.
  if (!(std::abs(p.values.back()) <= 1e-9 * static_cast<double>(t)))
    throw InvalidInputError("profile: non-finite values in return series");
  return p;
}

DescriptiveStats descriptive_stats(const ReturnSeries& returns) {
  const std::size_t t = returns.t();
  if (t < 4)
    throw InsufficientDataError("descriptive_stats: need T >= 4, got " +
                                std::to_string(t));
  DescriptiveStats s;
  double sum = 0.0;
  s.min = returns.values[0];
  s.max = returns.values[0];
  for (double v : returns.values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  const double n = static_cast<double>(t);
  s.mean = sum / n;

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : returns.values) {
    const double d = v - s.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  s.sd = std::sqrt(m2 / (n - 1.0));
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return s;
}

}  // namespace effindex
