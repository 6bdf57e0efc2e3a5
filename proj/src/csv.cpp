#include "effindex/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "effindex/error.hpp"

namespace effindex {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

PriceSeries read_price_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw InvalidInputError(file.string() + ": cannot open");
  const std::string ticker = file.stem().string();

  std::string line;
  if (!std::getline(in, line))
    throw InvalidInputError(file.string() + ": empty file");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
    line.erase(0, 3);  // UTF-8 BOM

  const std::vector<std::string> header = split_csv_line(line);
  int date_col = -1, close_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = lower(header[i]);
    if (name == "date") date_col = static_cast<int>(i);
    if (name == "close") close_col = static_cast<int>(i);
  }
  if (date_col < 0 || close_col < 0)
    throw InvalidInputError(file.string() +
                            ": header must contain 'date' and 'close' columns");

  std::vector<Observation> obs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    const auto where = [&] {
      return file.string() + ":" + std::to_string(line_no);
    };
    if (static_cast<int>(fields.size()) <= std::max(date_col, close_col))
      throw InvalidInputError(where() + ": expected >= " +
                              std::to_string(std::max(date_col, close_col) + 1) +
                              " fields, got " + std::to_string(fields.size()));
    Observation o;
    try {
      o.date = Date::parse(fields[date_col]);
    } catch (const InvalidInputError& e) {
      throw InvalidInputError(where() + ": " + e.what());
    }
    const std::string& cs = fields[close_col];
    const char* begin = cs.data();
    const char* end = begin + cs.size();
    const auto res = std::from_chars(begin, end, o.close);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(o.close))
      throw InvalidInputError(where() + ": malformed close '" + cs + "'");
    if (o.close <= 0.0)
      throw InvalidInputError(where() + ": non-positive close " + cs);
    obs.push_back(o);
  }

  try {
    return PriceSeries(ticker, std::move(obs));
  } catch (const InsufficientDataError& e) {
    throw InsufficientDataError(file.string() + ": " + e.what());
  } catch (const Error& e) {
    throw InvalidInputError(file.string() + ": " + e.what());
  }
}

void write_price_csv(const std::filesystem::path& file,
                     const PriceSeries& prices) {
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw InvalidInputError(file.string() + ": cannot open for writing");
  out << "date,close\n";
  for (const Observation& o : prices.observations())
    out << o.date.to_string() << ',' << format_double(o.close) << '\n';
  if (!out)
    throw InvalidInputError(file.string() + ": write failed");
}

}  // namespace effindex
