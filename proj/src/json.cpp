#include "antisym/json.hpp"

#include "antisym/errors.hpp"

namespace antisym {

nlohmann::json to_json(const CodePoint& point) {
  auto coords = nlohmann::json::array();
  for (const auto& coordinate : point.coords()) {
    auto entries = nlohmann::json::array();
    for (const auto& e : coordinate) {
      entries.push_back({{"zeta", e.zeta},
                         {"parity", e.parity},
                         {"k_eta", e.k_eta.to_mask_string()},
                         {"k_xi", e.k_xi.to_mask_string()}});
    }
    coords.push_back(std::move(entries));
  }
  return coords;
}

CodePoint code_point_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("code point must be a JSON array", 0);
  std::vector<Coordinate> coords;
  for (const auto& coordinate : j) {
    Coordinate c;
    for (const auto& e : coordinate) {
      c.push_back(CoordinateEntry{e.at("zeta").get<std::string>(), e.at("parity").get<int>(),
                                  KSet::from_mask_string(e.at("k_eta").get<std::string>()),
                                  KSet::from_mask_string(e.at("k_xi").get<std::string>())});
    }
    coords.push_back(std::move(c));
  }
  return CodePoint(std::move(coords));
}

nlohmann::json to_json(const VerificationReport& report) {
  auto violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"index", v.index}, {"check", v.check}, {"x", v.x}, {"s", v.s}, {"detail", v.detail}});
  }
  auto histogram = nlohmann::json::object();
  for (auto b : kAllBranches) histogram[std::string(to_string(b))] = report.branch_count(b);
  auto exceptional = nlohmann::json::array();
  for (const auto& f : report.exceptional) {
    exceptional.push_back({{"s", f.s}, {"distance", f.distance}, {"gap", f.gap}});
  }
  return {{"campaign", report.campaign},
          {"seed", report.seed},
          {"pairs_checked", report.pairs_checked},
          {"violations", std::move(violations)},
          {"branch_histogram", std::move(histogram)},
          {"counts", report.counts},
          {"exceptional", std::move(exceptional)},
          {"elapsed_ms", report.elapsed_ms},
          {"pass", report.pass()}};
}

}  // namespace antisym
