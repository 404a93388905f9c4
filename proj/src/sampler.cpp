// Apache License, Version 2.0, refer to LICENSE.txt
#include "remsamp/sampler.hpp"

#include <unordered_set>

namespace remsamp {

bool event_included(std::uint64_t event_seq, const SampleConfig& cfg) {
  const std::uint64_t word =
      splitmix64(mix_seed(cfg.seed, event_seq, kStreamInclusion));
  return unit_double(word) < cfg.p;
}

std::vector<std::uint8_t> sample_events(std::uint64_t n_events,
                                        const SampleConfig& cfg) {
  cfg.validate();
  std::vector<std::uint8_t> included(n_events);
  for (std::uint64_t i = 0; i < n_events; ++i) {
    included[i] = event_included(i, cfg) ? 1 : 0;
  }
  return included;
}

Stratum sample_controls(std::uint32_t n_users, std::uint32_t n_articles,
                        Dyad case_dyad, std::uint64_t event_seq,
                        const SampleConfig& cfg) {
  cfg.validate();
  if (case_dyad.user >= n_users || case_dyad.article >= n_articles) {
    throw ValidationError("case dyad outside the risk set");
  }
  Stratum stratum;
  stratum.event_seq = event_seq;
  stratum.case_dyad = case_dyad;
  stratum.risk_size =
      static_cast<std::uint64_t>(n_users) * static_cast<std::uint64_t>(n_articles);

  const std::uint64_t available = stratum.risk_size - 1;
  if (available == 0) {
    stratum.flag = StratumFlag::degenerate;
    return stratum;
  }

  if (available <= cfg.m) {
    // Fewer candidates than requested: take the whole risk set minus the case.
    stratum.controls.reserve(available);
    for (std::uint32_t u = 0; u < n_users; ++u) {
      for (std::uint32_t a = 0; a < n_articles; ++a) {
        if (u == case_dyad.user && a == case_dyad.article) continue;
        stratum.controls.push_back({u, a});
      }
    }
    if (available < cfg.m) stratum.flag = StratumFlag::clamped;
    return stratum;
  }

  Rng rng(mix_seed(cfg.seed, event_seq, kStreamControls));
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(cfg.m * 2);
  stratum.controls.reserve(cfg.m);
  while (stratum.controls.size() < cfg.m) {
    const auto u = static_cast<std::uint32_t>(rng.bounded(n_users));
    const auto a = static_cast<std::uint32_t>(rng.bounded(n_articles));
    if (u == case_dyad.user && a == case_dyad.article) continue;
    const std::uint64_t dyad = (static_cast<std::uint64_t>(u) << 32) | a;
    if (!taken.insert(dyad).second) continue;
    stratum.controls.push_back({u, a});
  }
  return stratum;
}

}  // namespace remsamp
