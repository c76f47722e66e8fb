#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace slicealg {

/// One checked identity: {identity, residual, pass}.
struct IdentityCheck {
  std::string identity;
  double residual = 0.0;
  bool pass = false;
};

using IdentityReport = std::vector<IdentityCheck>;

inline bool all_pass(const IdentityReport& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r)
    out.push_back({{"identity", c.identity}, {"residual", c.residual}, {"pass", c.pass}});
  return out;
}

}  // namespace slicealg
