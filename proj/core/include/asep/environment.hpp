#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "asep/params.hpp"
#include "asep/rng.hpp"

namespace asep {

// One clock ring plus coin. Bond z sits between sites z and z + 1.
struct BondEvent {
  double time;
  std::int64_t bond;
  double coin;  // uniform in [0, 1)
};

// Shared randomness of the graphical construction: an independent
// rate-p Poisson clock per bond, each event carrying a fresh coin.
// Every configuration evolved through the same environment sees the
// same clocks and coins, which is the whole point of the basic
// coupling.
//
// Streams are deterministic given (seed, bond), so extending the time
// horizon or widening the bond range never disturbs events that were
// already sampled.
class CouplingEnvironment {
 public:
  static CouplingEnvironment sample(const SimulationParams& params,
                                    std::int64_t bond_lo, std::int64_t bond_hi,
                                    double t_max, std::uint64_t seed);

  const SimulationParams& params() const { return params_; }
  std::int64_t bond_lo() const { return bond_lo_; }
  std::int64_t bond_hi() const { return bond_hi_; }
  double t_max() const { return t_max_; }
  std::uint64_t seed() const { return seed_; }

  void extend_time(double new_t_max);
  void extend_bonds(std::int64_t new_lo, std::int64_t new_hi);

  // All events up to t_max, sorted by time.
  const std::vector<BondEvent>& events() const;

  std::size_t event_count() const { return events().size(); }
  bool all_times_distinct() const;

  // Compact round-trip form: the environment is fully determined by
  // its seed, rate and extents, so only those are written.
  std::string serialize() const;
  static CouplingEnvironment deserialize(std::string_view text);

 private:
  struct Stream {
    Rng engine{0};
    std::vector<double> times;
    std::vector<double> coins;
    double pending_time = 0;
    double pending_coin = 0;
  };

  CouplingEnvironment() = default;
  Stream make_stream(std::int64_t bond) const;
  void fill_stream(Stream& s) const;
  void draw_pending(Stream& s) const;

  SimulationParams params_{};
  std::int64_t bond_lo_ = 0;
  std::int64_t bond_hi_ = 0;
  double t_max_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<Stream> streams_;
  mutable std::vector<BondEvent> merged_;
  mutable bool merged_valid_ = false;
};

}  // namespace asep
