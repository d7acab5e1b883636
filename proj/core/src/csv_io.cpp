#include "h2rd/csv_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "h2rd/error.hpp"
#include "h2rd/text_format.hpp"

namespace h2rd {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

// Reads data rows of a headered CSV, skipping blank lines and '#' comments.
// Comment lines are handed to `on_comment`.
template <typename OnComment, typename OnRow>
void for_each_row(std::istream& in, const std::string& source,
                  const std::vector<std::string_view>& header, OnComment on_comment,
                  OnRow on_row) {
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      on_comment(text, lineno);
      continue;
    }
    auto fields = split(text, ',');
    for (auto& f : fields) f = trim(f);
    if (!seen_header) {
      if (fields.size() < header.size())
        throw DataError(source, lineno, "header has too few columns");
      for (std::size_t i = 0; i < header.size(); ++i)
        if (fields[i] != header[i])
          throw DataError(source, lineno,
                          "expected column '" + std::string(header[i]) + "', found '" +
                              std::string(fields[i]) + "'");
      seen_header = true;
      continue;
    }
    on_row(fields, lineno);
  }
  if (!seen_header) throw DataError(source, lineno, "missing header line");
}

double field_double(std::string_view f, const std::string& source, std::size_t line,
                    const char* name) {
  double v = 0.0;
  if (!parse_double(f, v))
    throw DataError(source, line, std::string("invalid ") + name + " '" + std::string(f) + "'");
  return v;
}

long long field_int(std::string_view f, const std::string& source, std::size_t line,
                    const char* name) {
  long long v = 0;
  if (!parse_int64(f, v))
    throw DataError(source, line, std::string("invalid ") + name + " '" + std::string(f) + "'");
  return v;
}

void require_fields(const std::vector<std::string_view>& fields, std::size_t min,
                    std::size_t max, const std::string& source, std::size_t line) {
  if (fields.size() < min || fields.size() > max)
    throw DataError(source, line,
                    "expected " + std::to_string(min) +
                        (min == max ? "" : "-" + std::to_string(max)) + " fields, found " +
                        std::to_string(fields.size()));
}

template <typename Fn>
auto rethrow_as_data_error(const std::string& source, std::size_t line, Fn fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw DataError(source, line, e.what());
  }
}

}  // namespace

TimeSeries read_series_csv(std::istream& in, const std::string& source) {
  std::optional<Resolution> resolution;
  std::vector<double> values;
  long long start = 0;
  long long expected = 0;
  for_each_row(
      in, source, {"step", "value"},
      [&](std::string_view comment, std::size_t line) {
        comment.remove_prefix(1);
        for (auto token : split(trim(comment), ' ')) {
          token = trim(token);
          constexpr std::string_view key = "resolution_min=";
          if (token.substr(0, key.size()) != key) continue;
          long long minutes = 0;
          if (!parse_int64(token.substr(key.size()), minutes))
            throw DataError(source, line, "invalid resolution_min");
          resolution = rethrow_as_data_error(source, line, [&] {
            return resolution_from_minutes(static_cast<int>(minutes));
          });
        }
      },
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        require_fields(f, 2, 2, source, line);
        const auto step = field_int(f[0], source, line, "step");
        const double v = field_double(f[1], source, line, "value");
        if (values.empty()) {
          start = step;
          expected = step;
        }
        if (step != expected)
          throw DataError(source, line,
                          "steps must be contiguous; expected " + std::to_string(expected));
        if (!(v >= 0.0)) throw DataError(source, line, "negative value");
        values.push_back(v);
        ++expected;
      });
  if (!resolution) throw DataError(source, 0, "missing '# resolution_min=' comment");
  if (values.empty()) throw DataError(source, 0, "series has no rows");
  return TimeSeries(*resolution, std::move(values), start);
}

TimeSeries read_series_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_series_csv(in, path.string());
}

void write_series_csv(std::ostream& out, const TimeSeries& s) {
  out << "# resolution_min=" << step_minutes(s.resolution()) << '\n' << "step,value\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << s.start_index() + static_cast<std::int64_t>(i) << ',' << format_shortest(s[i])
        << '\n';
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& s) {
  auto out = open_output(path);
  write_series_csv(out, s);
}

std::vector<RedispatchMeasure> read_transmission_log(std::istream& in,
                                                     const std::string& source) {
  std::vector<RedispatchMeasure> out;
  for_each_row(
      in, source, {"station_id", "start_step", "end_step", "cap_power_kw"},
      [](auto, auto) {},
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        require_fields(f, 4, 5, source, line);
        if (f[0].empty()) throw DataError(source, line, "empty station_id");
        StepWindow w{field_int(f[1], source, line, "start_step"),
                     field_int(f[2], source, line, "end_step")};
        const double cap = field_double(f[3], source, line, "cap_power_kw");
        std::optional<double> target;
        if (f.size() == 5 && !f[4].empty())
          target = field_double(f[4], source, line, "target_energy_kwh");
        out.push_back(rethrow_as_data_error(source, line, [&] {
          return RedispatchMeasure::transmission(std::string(f[0]), w, cap, target);
        }));
      });
  return out;
}

std::vector<RedispatchMeasure> read_transmission_log(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_transmission_log(in, path.string());
}

std::vector<RedispatchMeasure> read_distribution_log(std::istream& in,
                                                     const std::string& source) {
  std::vector<RedispatchMeasure> out;
  for_each_row(
      in, source,
      {"station_id", "start_step", "end_step", "cap_fraction", "nominal_power_kw"},
      [](auto, auto) {},
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        require_fields(f, 5, 6, source, line);
        if (f[0].empty()) throw DataError(source, line, "empty station_id");
        StepWindow w{field_int(f[1], source, line, "start_step"),
                     field_int(f[2], source, line, "end_step")};
        const double frac = field_double(f[3], source, line, "cap_fraction");
        const double nominal = field_double(f[4], source, line, "nominal_power_kw");
        std::vector<double> coverage;
        if (f.size() == 6 && !f[5].empty())
          for (auto c : split(f[5], ';'))
            coverage.push_back(field_double(c, source, line, "coverage"));
        out.push_back(rethrow_as_data_error(source, line, [&] {
          return RedispatchMeasure::distribution(std::string(f[0]), w, frac, nominal,
                                                 std::move(coverage));
        }));
      });
  return out;
}

std::vector<RedispatchMeasure> read_distribution_log(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_distribution_log(in, path.string());
}

RegionMapping read_region_mapping(std::istream& in, const std::string& source) {
  RegionMapping mapping;
  for_each_row(
      in, source, {"station_id", "region_id"}, [](auto, auto) {},
      [&](const std::vector<std::string_view>& f, std::size_t line) {
        require_fields(f, 2, 2, source, line);
        if (f[0].empty() || f[1].empty())
          throw DataError(source, line, "empty station or region id");
        rethrow_as_data_error(source, line, [&] {
          mapping.add(std::string(f[0]), std::string(f[1]));
          return 0;
        });
      });
  return mapping;
}

RegionMapping read_region_mapping(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_region_mapping(in, path.string());
}

}  // namespace h2rd
