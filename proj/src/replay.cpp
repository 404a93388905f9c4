// Apache License, Version 2.0, refer to LICENSE.txt
#include "remsamp/replay.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "remsamp/text.hpp"

namespace remsamp {

std::vector<ObservationTable> replay(const EventLog& log, const DecayConfig& decay,
                                     std::span<const SampleConfig> configs,
                                     const StatOptions& stat_options) {
  decay.validate();
  for (const SampleConfig& cfg : configs) cfg.validate();

  std::vector<ObservationTable> tables(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    tables[c].sample = configs[c];
    tables[c].decay = decay;
    tables[c].n_events_stream = log.size();
  }

  PastEventNetwork net(decay);
  for (const Event& e : log.events) {
    net.advance(e.time);
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const SampleConfig& cfg = configs[c];
      if (!event_included(e.seq, cfg)) continue;
      ObservationTable& table = tables[c];
      Stratum stratum =
          sample_controls(log.users_at[e.seq], log.articles_at[e.seq],
                          {e.source, e.target}, e.seq, cfg);
      ++table.n_strata;
      if (stratum.flag == StratumFlag::clamped) ++table.n_clamped;
      if (stratum.flag == StratumFlag::degenerate) ++table.n_degenerate;

      Observation case_row;
      case_row.stratum = e.seq;
      case_row.is_case = true;
      case_row.user = e.source;
      case_row.article = e.target;
      case_row.stats = stat_vector(net, e.source, e.target, e.time, stat_options);
      case_row.time = e.time;
      table.rows.push_back(case_row);
      for (const Dyad& d : stratum.controls) {
        Observation row;
        row.stratum = e.seq;
        row.is_case = false;
        row.user = d.user;
        row.article = d.article;
        row.stats = stat_vector(net, d.user, d.article, e.time, stat_options);
        row.time = e.time;
        table.rows.push_back(row);
      }
    }
    net.apply_event(e);
  }
  return tables;
}

ObservationTable replay_one(const EventLog& log, const DecayConfig& decay,
                            const SampleConfig& config,
                            const StatOptions& stat_options) {
  return replay(log, decay, {&config, 1}, stat_options)[0];
}

void write_table(std::ostream& out, const ObservationTable& table,
                 const EventLog& log,
                 std::span<const std::string> extra_header_lines) {
  for (const std::string& line : extra_header_lines) out << "# " << line << '\n';
  out << "# rng=" << kRngAlgorithm << " seed=" << table.sample.seed
      << " p=" << format_double(table.sample.p) << " m=" << table.sample.m
      << " halflife=" << table.decay.halflife
      << " epsilon=" << format_double(table.decay.prune_epsilon) << '\n';
  out << "# n_events_stream=" << table.n_events_stream
      << " n_strata=" << table.n_strata << " clamped=" << table.n_clamped
      << " degenerate=" << table.n_degenerate << '\n';
  out << "stratum,is_case,user,article,repetition,popularity,activity,"
         "four_cycle,assortativity,time\n";
  for (const Observation& row : table.rows) {
    out << row.stratum << ',' << (row.is_case ? 1 : 0) << ','
        << log.users.id(row.user) << ',' << log.articles.id(row.article);
    for (std::size_t i = 0; i < StatVector::size; ++i) {
      out << ',' << format_double(row.stats[i]);
    }
    out << ',' << row.time << '\n';
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

ObservationTable read_table(std::istream& in) {
  ObservationTable table;
  std::string line;
  std::size_t line_no = 0;
  bool saw_column_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string token;
      while (meta >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
          if (key == "seed") table.sample.seed = std::stoull(value);
          else if (key == "p") table.sample.p = std::stod(value);
          else if (key == "m") table.sample.m = static_cast<std::uint32_t>(std::stoul(value));
          else if (key == "halflife") table.decay.halflife = std::stoll(value);
          else if (key == "epsilon") table.decay.prune_epsilon = std::stod(value);
          else if (key == "n_events_stream") table.n_events_stream = std::stoull(value);
          else if (key == "n_strata") table.n_strata = std::stoull(value);
          else if (key == "clamped") table.n_clamped = std::stoull(value);
          else if (key == "degenerate") table.n_degenerate = std::stoull(value);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad header value in '" + token + "'");
        }
      }
      continue;
    }
    if (!saw_column_header && line.rfind("stratum,", 0) == 0) {
      saw_column_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 10) {
      throw ParseError(line_no, "expected 10 columns in observation row");
    }
    try {
      Observation row;
      row.stratum = std::stoull(fields[0]);
      row.is_case = std::stoi(fields[1]) != 0;
      row.stats.repetition = std::stod(fields[4]);
      row.stats.popularity = std::stod(fields[5]);
      row.stats.activity = std::stod(fields[6]);
      row.stats.four_cycle = std::stod(fields[7]);
      row.stats.assortativity = std::stod(fields[8]);
      row.time = std::stoll(fields[9]);
      table.rows.push_back(row);
    } catch (const std::exception&) {
      throw ParseError(line_no, "cannot parse observation row");
    }
  }
  return table;
}

ObservationTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open observation table: " + path);
  return read_table(in);
}

}  // namespace remsamp
