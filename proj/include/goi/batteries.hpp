// The acceptance batteries, shared by `goi suite` and the acceptance test.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goi/nilpotency.hpp"
#include "goi/stconn.hpp"

namespace goi {

struct BatteryOptions {
  StconnVariant stconn = StconnVariant::Repaired;
  std::uint64_t cap = kDefaultCapacity;
  std::uint64_t seed = 20240601;
};

struct BatteryResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Battery {
  int id;
  std::string name;
  std::vector<std::string> tags;
  std::function<BatteryResult(const BatteryOptions&)> run;
};

const std::vector<Battery>& all_batteries();

// Matches the id, the name or any tag by substring; an empty filter matches everything.
bool battery_matches(const Battery& b, const std::string& filter);

BatteryResult run_battery(const Battery& b, const BatteryOptions& options);

// Individual batteries.
BatteryResult representation_battery(const BatteryOptions& options);
BatteryResult figure_battery(const BatteryOptions& options);
BatteryResult stconn_battery(const BatteryOptions& options);
BatteryResult acyclicity_battery(const BatteryOptions& options);
BatteryResult equivalence_battery(const BatteryOptions& options);
BatteryResult oracle_battery(const BatteryOptions& options);
BatteryResult p_plus_battery(const BatteryOptions& options);
BatteryResult positivity_battery(const BatteryOptions& options);

// A random observation with nonnegative rational coefficients on p = 1.
Observation random_observation(std::uint64_t seed);

}  // namespace goi
