#include "asep/environment.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace asep {

CouplingEnvironment CouplingEnvironment::sample(const SimulationParams& params,
                                                std::int64_t bond_lo,
                                                std::int64_t bond_hi,
                                                double t_max,
                                                std::uint64_t seed) {
  if (bond_hi < bond_lo) throw std::invalid_argument("empty bond range");
  if (!(t_max >= 0)) throw std::invalid_argument("negative time horizon");
  CouplingEnvironment env;
  env.params_ = params;
  env.bond_lo_ = bond_lo;
  env.bond_hi_ = bond_hi;
  env.t_max_ = t_max;
  env.seed_ = seed;
  env.streams_.reserve(bond_hi - bond_lo + 1);
  for (std::int64_t b = bond_lo; b <= bond_hi; ++b)
    env.streams_.push_back(env.make_stream(b));
  return env;
}

void CouplingEnvironment::draw_pending(Stream& s) const {
  s.pending_time += exponential(s.engine, params_.p);
  s.pending_coin = uniform01(s.engine);
}

CouplingEnvironment::Stream CouplingEnvironment::make_stream(
    std::int64_t bond) const {
  Stream s;
  s.engine = Rng(mix_seed(seed_, zigzag64(bond)));
  s.pending_time = 0;
  draw_pending(s);
  fill_stream(s);
  return s;
}

void CouplingEnvironment::fill_stream(Stream& s) const {
  while (s.pending_time <= t_max_) {
    s.times.push_back(s.pending_time);
    s.coins.push_back(s.pending_coin);
    draw_pending(s);
  }
}

void CouplingEnvironment::extend_time(double new_t_max) {
  if (new_t_max < t_max_)
    throw std::invalid_argument("time horizon cannot shrink");
  t_max_ = new_t_max;
  for (auto& s : streams_) fill_stream(s);
  merged_valid_ = false;
}

void CouplingEnvironment::extend_bonds(std::int64_t new_lo,
                                       std::int64_t new_hi) {
  if (new_lo > bond_lo_ || new_hi < bond_hi_)
    throw std::invalid_argument("bond range cannot shrink");
  std::vector<Stream> fresh;
  fresh.reserve(new_hi - new_lo + 1);
  for (std::int64_t b = new_lo; b <= new_hi; ++b) {
    if (b >= bond_lo_ && b <= bond_hi_)
      fresh.push_back(std::move(streams_[b - bond_lo_]));
    else
      fresh.push_back(make_stream(b));
  }
  streams_ = std::move(fresh);
  bond_lo_ = new_lo;
  bond_hi_ = new_hi;
  merged_valid_ = false;
}

const std::vector<BondEvent>& CouplingEnvironment::events() const {
  if (!merged_valid_) {
    merged_.clear();
    for (std::size_t i = 0; i < streams_.size(); ++i) {
      const auto& s = streams_[i];
      const std::int64_t bond = bond_lo_ + static_cast<std::int64_t>(i);
      for (std::size_t j = 0; j < s.times.size(); ++j)
        merged_.push_back(BondEvent{s.times[j], bond, s.coins[j]});
    }
    std::sort(merged_.begin(), merged_.end(),
              [](const BondEvent& a, const BondEvent& b) {
                if (a.time != b.time) return a.time < b.time;
                return a.bond < b.bond;
              });
    merged_valid_ = true;
  }
  return merged_;
}

bool CouplingEnvironment::all_times_distinct() const {
  const auto& ev = events();
  for (std::size_t i = 1; i < ev.size(); ++i)
    if (ev[i].time == ev[i - 1].time) return false;
  return true;
}

std::string CouplingEnvironment::serialize() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "asep-env 1 p=%.17g bonds=%lld:%lld t=%.17g seed=%llu",
                params_.p, static_cast<long long>(bond_lo_),
                static_cast<long long>(bond_hi_), t_max_,
                static_cast<unsigned long long>(seed_));
  return buf;
}

CouplingEnvironment CouplingEnvironment::deserialize(std::string_view text) {
  double p = 0, t = 0;
  long long lo = 0, hi = 0;
  unsigned long long seed = 0;
  std::string s(text);
  if (std::sscanf(s.c_str(), "asep-env 1 p=%lg bonds=%lld:%lld t=%lg seed=%llu",
                  &p, &lo, &hi, &t, &seed) != 5)
    throw std::invalid_argument("unrecognized environment record");
  return sample(SimulationParams::from_p(p), lo, hi, t, seed);
}

}  // namespace asep
