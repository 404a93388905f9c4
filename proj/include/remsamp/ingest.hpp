// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace remsamp {

// One dyadic interaction. Node ids are interned to dense indices; `seq` is
// the 0-based position in the final strict order.
struct Event {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::int64_t time = 0;
  std::uint64_t seq = 0;
};

// Append-only indexed id set for one node side. Indices are assigned at
// first sight in stream order and never change.
class NodeUniverse {
 public:
  std::uint32_t intern(const std::string& id, std::int64_t time, std::uint64_t seq);
  // Returns the node index, or npos if the id has never been seen.
  std::uint32_t find(const std::string& id) const;
  const std::string& id(std::uint32_t index) const { return ids_[index]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(ids_.size()); }
  std::int64_t first_time(std::uint32_t index) const { return first_time_[index]; }
  std::uint64_t first_seq(std::uint32_t index) const { return first_seq_[index]; }

  static constexpr std::uint32_t npos = 0xFFFFFFFFu;

 private:
  std::vector<std::string> ids_;
  std::vector<std::int64_t> first_time_;
  std::vector<std::uint64_t> first_seq_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Parsed event stream with both node universes and per-event risk-set
// extents. users_at[i] / articles_at[i] count the nodes whose first event
// time is <= time of event i, so nodes entering within a same-second tie
// group are part of the risk set of every event in that group.
struct EventLog {
  std::vector<Event> events;
  NodeUniverse users;
  NodeUniverse articles;
  std::vector<std::uint32_t> users_at;
  std::vector<std::uint32_t> articles_at;

  std::uint64_t size() const { return events.size(); }
  std::uint64_t risk_size(std::uint64_t i) const {
    return static_cast<std::uint64_t>(users_at[i]) * articles_at[i];
  }
};

struct ParseOptions {
  char delimiter = ',';
  // Re-sort (stably) when timestamps decrease. Without this flag a
  // decreasing timestamp is an error: the published data is pre-ordered.
  bool sort = false;
};

// Parse `source<delim>target<delim>time` lines. Timestamps are integer epoch
// seconds or ISO-8601 (converted, fractional seconds truncated). A leading
// "source,target,time"-style header line is skipped.
EventLog parse_events(const std::string& path, const ParseOptions& options = {});
EventLog parse_events(std::istream& in, const ParseOptions& options = {});

void write_events(std::ostream& out, const EventLog& log, char delimiter = ',');

}  // namespace remsamp
