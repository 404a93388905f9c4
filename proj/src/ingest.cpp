// Apache License, Version 2.0, refer to LICENSE.txt
#include "remsamp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string_view>

#include "remsamp/errors.hpp"

namespace remsamp {

std::uint32_t NodeUniverse::intern(const std::string& id, std::int64_t time,
                                   std::uint64_t seq) {
  auto [it, inserted] = index_.try_emplace(id, size());
  if (inserted) {
    ids_.push_back(id);
    first_time_.push_back(time);
    first_seq_.push_back(seq);
  }
  return it->second;
}

std::uint32_t NodeUniverse::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? npos : it->second;
}

namespace {

struct RawEvent {
  std::string source;
  std::string target;
  std::int64_t time;
  std::size_t line;
};

bool parse_int64(std::string_view s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len,
                      unsigned& out) {
  if (pos + len > s.size()) return false;
  out = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<unsigned>(c - '0');
  }
  return true;
}

// YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]; fractional seconds are truncated.
bool parse_iso8601(std::string_view s, std::int64_t& out) {
  unsigned year, month, day, hour, minute, second;
  if (s.size() < 19) return false;
  if (!parse_fixed_uint(s, 0, 4, year) || s[4] != '-' ||
      !parse_fixed_uint(s, 5, 2, month) || s[7] != '-' ||
      !parse_fixed_uint(s, 8, 2, day) || (s[10] != 'T' && s[10] != ' ') ||
      !parse_fixed_uint(s, 11, 2, hour) || s[13] != ':' ||
      !parse_fixed_uint(s, 14, 2, minute) || s[16] != ':' ||
      !parse_fixed_uint(s, 17, 2, second)) {
    return false;
  }
  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return false;
  }
  if (pos < s.size() && s[pos] == 'Z') ++pos;
  if (pos != s.size()) return false;
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    return false;
  }
  out = days_from_civil(year, month, day) * 86400 +
        static_cast<std::int64_t>(hour) * 3600 + minute * 60 + second;
  return true;
}

bool parse_time_field(std::string_view s, std::int64_t& out) {
  if (parse_int64(s, out)) return true;
  if (parse_iso8601(s, out)) return true;
  // Numeric with fractional seconds, e.g. "100.75": truncate.
  if (s.find('.') != std::string_view::npos) {
    std::string buf(s);
    char* end = nullptr;
    const double value = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str() + buf.size() && buf.size() > 0) {
      out = static_cast<std::int64_t>(value);
      return true;
    }
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool split_fields(std::string_view line, char delim, std::string_view out[3]) {
  std::size_t field = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == delim) {
      if (field < 3) out[field] = trim(line.substr(start, i - start));
      ++field;
      start = i + 1;
    }
  }
  return field >= 3;  // extra trailing fields are ignored
}

bool looks_like_header(std::string_view line, char delim) {
  std::string_view fields[3];
  if (!split_fields(line, delim, fields)) return false;
  std::int64_t t;
  if (parse_time_field(fields[2], t)) return false;
  std::string lowered(fields[2]);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return lowered == "time" || lowered == "timestamp";
}

}  // namespace

EventLog parse_events(std::istream& in, const ParseOptions& options) {
  std::vector<RawEvent> raw;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  bool out_of_order = false;
  std::size_t out_of_order_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (first_content_line) {
      first_content_line = false;
      if (looks_like_header(view, options.delimiter)) continue;
    }
    std::string_view fields[3];
    if (!split_fields(view, options.delimiter, fields)) {
      throw ParseError(line_no, "expected at least 3 fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "empty source or target id");
    }
    std::int64_t t;
    if (!parse_time_field(fields[2], t)) {
      throw ParseError(line_no, "cannot parse time field '" + std::string(fields[2]) + "'");
    }
    if (!raw.empty() && t < raw.back().time && !out_of_order) {
      out_of_order = true;
      out_of_order_line = line_no;
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]), t, line_no});
  }

  if (out_of_order) {
    if (!options.sort) {
      throw TimeOrderError("decreasing timestamp at line " +
                           std::to_string(out_of_order_line) +
                           " (pass --sort to re-sort stably)");
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawEvent& a, const RawEvent& b) { return a.time < b.time; });
  }

  EventLog log;
  log.events.reserve(raw.size());
  for (std::uint64_t i = 0; i < raw.size(); ++i) {
    const RawEvent& r = raw[i];
    Event e;
    e.source = log.users.intern(r.source, r.time, i);
    e.target = log.articles.intern(r.target, r.time, i);
    e.time = r.time;
    e.seq = i;
    log.events.push_back(e);
  }

  // Risk-set extents: distinct counts at the end of each same-time group.
  const std::uint64_t n = log.events.size();
  log.users_at.resize(n);
  log.articles_at.resize(n);
  std::uint64_t group_start = 0;
  std::uint32_t seen_users = 0;
  std::uint32_t seen_articles = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Event& e = log.events[i];
    if (log.users.first_seq(e.source) == i) ++seen_users;
    if (log.articles.first_seq(e.target) == i) ++seen_articles;
    const bool group_ends = i + 1 == n || log.events[i + 1].time != e.time;
    if (group_ends) {
      for (std::uint64_t j = group_start; j <= i; ++j) {
        log.users_at[j] = seen_users;
        log.articles_at[j] = seen_articles;
      }
      group_start = i + 1;
    }
  }
  return log;
}

EventLog parse_events(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open event file: " + path);
  return parse_events(in, options);
}

void write_events(std::ostream& out, const EventLog& log, char delimiter) {
  for (const Event& e : log.events) {
    out << log.users.id(e.source) << delimiter << log.articles.id(e.target)
        << delimiter << e.time << '\n';
  }
}

}  // namespace remsamp
