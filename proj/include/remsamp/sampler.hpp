// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <vector>

#include "remsamp/errors.hpp"
#include "remsamp/rng.hpp"

namespace remsamp {

// Sample parameters: each event enters the sample independently with
// probability p; a sampled event gets m controls drawn uniformly without
// replacement from the risk set. Event inclusion and control draws come
// from independently derived sub-streams of `seed`, so changing p does not
// shift the control draws of events that stay in the sample.
struct SampleConfig {
  double p = 1e-4;
  std::uint32_t m = 5;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(p > 0.0 && p <= 1.0)) throw ValidationError("p must lie in (0,1]");
    if (m < 1) throw ValidationError("m must be at least 1");
  }
};

struct Dyad {
  std::uint32_t user = 0;
  std::uint32_t article = 0;
  bool operator==(const Dyad&) const = default;
};

enum class StratumFlag : std::uint8_t {
  ok = 0,
  clamped,     // fewer than m non-case dyads existed; all of them were taken
  degenerate,  // the case was the only dyad in the risk set
};

// One event's case plus its sampled controls.
struct Stratum {
  std::uint64_t event_seq = 0;
  Dyad case_dyad;
  std::vector<Dyad> controls;
  std::uint64_t risk_size = 0;
  StratumFlag flag = StratumFlag::ok;
};

// Pure inclusion predicate for one event index.
bool event_included(std::uint64_t event_seq, const SampleConfig& cfg);

// Inclusion vector for events 0..n_events-1.
std::vector<std::uint8_t> sample_events(std::uint64_t n_events,
                                        const SampleConfig& cfg);

// m uniform draws without replacement from the risk set minus the case,
// by rejection over (user index, article index). Returns a clamped stratum
// when fewer than m candidates exist and a degenerate one when none do.
Stratum sample_controls(std::uint32_t n_users, std::uint32_t n_articles,
                        Dyad case_dyad, std::uint64_t event_seq,
                        const SampleConfig& cfg);

}  // namespace remsamp
