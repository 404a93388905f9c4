// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "remsamp/ingest.hpp"
#include "remsamp/past_network.hpp"
#include "remsamp/sampler.hpp"
#include "remsamp/statistics.hpp"

namespace remsamp {

// One design-matrix row: a case or control dyad of one stratum with its
// statistics evaluated on the network of events strictly before the
// stratum's event (earlier same-second events included, per the strict
// event order).
struct Observation {
  std::uint64_t stratum = 0;
  bool is_case = false;
  std::uint32_t user = 0;
  std::uint32_t article = 0;
  StatVector stats;
  std::int64_t time = 0;
};

struct ObservationTable {
  SampleConfig sample;
  DecayConfig decay;
  std::vector<Observation> rows;
  std::uint64_t n_events_stream = 0;  // events in the replayed stream
  std::uint64_t n_strata = 0;         // sampled events, incl. degenerate ones
  std::uint64_t n_clamped = 0;
  std::uint64_t n_degenerate = 0;
};

// One pass over the stream: every event updates the network; events sampled
// under any config additionally emit a stratum (case first, then controls)
// whose statistics are computed before the event itself is applied. Serving
// several configs from one pass amortizes the replay cost.
std::vector<ObservationTable> replay(const EventLog& log, const DecayConfig& decay,
                                     std::span<const SampleConfig> configs,
                                     const StatOptions& stat_options = {});

ObservationTable replay_one(const EventLog& log, const DecayConfig& decay,
                            const SampleConfig& config,
                            const StatOptions& stat_options = {});

// Delimited-text round trip. The header echoes the sample and decay
// configuration; `extra_header_lines` (e.g. the manifest hash) are emitted
// verbatim as comment lines.
void write_table(std::ostream& out, const ObservationTable& table,
                 const EventLog& log,
                 std::span<const std::string> extra_header_lines = {});

// Reads a table written by write_table. Node ids are not resolved back to
// universe indices; fitting and diagnostics only need flags and statistics.
ObservationTable read_table(std::istream& in);
ObservationTable read_table_file(const std::string& path);

}  // namespace remsamp
