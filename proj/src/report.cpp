#include "ffgeo/report.hpp"

namespace ffgeo {

nlohmann::json Report::to_json() const {
  return nlohmann::json{{"op", op},
                        {"params", params},
                        {"seed", seed},
                        {"counts", counts},
                        {"witness", witness.is_null() ? nlohmann::json() : witness},
                        {"holds", holds ? nlohmann::json(*holds) : nlohmann::json()},
                        {"elapsedMs", elapsed_ms}};
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("elapsedMs");
  return j;
}

}  // namespace ffgeo
