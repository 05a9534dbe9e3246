#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace ffgeo {

/// Machine-readable result of a verification or experiment run. Identical
/// inputs and seed produce identical JSON except for elapsedMs.
struct Report {
  std::string op;
  nlohmann::json params = nlohmann::json::object();
  uint64_t seed = 0;
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json witness;  // null unless a detector produced one
  std::optional<bool> holds;
  int64_t elapsed_ms = 0;

  nlohmann::json to_json() const;
};

/// Copy of a report JSON with the timing field removed, for byte-level
/// reproducibility comparisons.
nlohmann::json without_timing(nlohmann::json j);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ffgeo
