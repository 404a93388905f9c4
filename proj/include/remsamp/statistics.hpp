// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "remsamp/past_network.hpp"

namespace remsamp {

// The five explanatory statistics of a dyad. All of repetition, popularity,
// activity and four_cycle carry the log(1+x) transform of the raw decayed
// value; assortativity is the product of the transformed popularity and
// activity.
struct StatVector {
  double repetition = 0.0;
  double popularity = 0.0;
  double activity = 0.0;
  double four_cycle = 0.0;
  double assortativity = 0.0;

  static constexpr std::size_t size = 5;
  static constexpr std::array<std::string_view, 5> names = {
      "repetition", "popularity", "activity", "four_cycle", "assortativity"};

  double operator[](std::size_t i) const {
    switch (i) {
      case 0: return repetition;
      case 1: return popularity;
      case 2: return activity;
      case 3: return four_cycle;
      default: return assortativity;
    }
  }
};

struct StatOptions {
  // Below this bound on degree(u)*degree(a) the four-cycle sum enumerates
  // neighbor pairs directly; above it the two two-path costs are measured
  // and the cheapest of the three enumeration orders wins.
  double four_cycle_cutoff = 1e6;
};

double repetition(const PastEventNetwork& net, std::uint32_t user,
                  std::uint32_t article, std::int64_t t);
double popularity(const PastEventNetwork& net, std::uint32_t user,
                  std::uint32_t article, std::int64_t t);
double activity(const PastEventNetwork& net, std::uint32_t user,
                std::uint32_t article, std::int64_t t);
double four_cycle(const PastEventNetwork& net, std::uint32_t user,
                  std::uint32_t article, std::int64_t t,
                  const StatOptions& options = {});
double assortativity(const PastEventNetwork& net, std::uint32_t user,
                     std::uint32_t article, std::int64_t t);

StatVector stat_vector(const PastEventNetwork& net, std::uint32_t user,
                       std::uint32_t article, std::int64_t t,
                       const StatOptions& options = {});

// Raw (pre-transform) four-cycle sum; exposed for the oracle tests and the
// enumeration-strategy cross-checks.
double four_cycle_raw(const PastEventNetwork& net, std::uint32_t user,
                      std::uint32_t article, std::int64_t t,
                      const StatOptions& options = {});
double four_cycle_raw_strategy(const PastEventNetwork& net, std::uint32_t user,
                               std::uint32_t article, std::int64_t t,
                               int strategy);

}  // namespace remsamp
