#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/graver.hpp"
#include "wog/groebner.hpp"
#include "wog/robustness.hpp"

namespace wog {

// {"vertices":[{"id":"v1","w":6},...],"edges":[{"id":"e1","tail":"v1","head":"v2"},...]}
WeightedOrientedGraph graph_from_json(const nlohmann::json &j);
WeightedOrientedGraph read_graph_file(const std::string &path);
nlohmann::json graph_to_json(const WeightedOrientedGraph &g);

// 16 hex digits of FNV-1a over the dimensions and entries.
std::string matrix_hash(const IntegerMatrix &a);

nlohmann::json basis_set_to_json(const BasisSet &b, const IntegerMatrix &a,
                                 const std::vector<std::string> &labels);
BasisSet basis_set_from_json(const nlohmann::json &j, const std::vector<std::string> &labels);

nlohmann::json term_order_to_json(const TermOrder &t, const std::vector<std::string> &labels);
TermOrder term_order_from_json(const nlohmann::json &j, const std::vector<std::string> &labels);

nlohmann::json report_to_json(const RobustnessReport &r);
nlohmann::json shared_path_report_to_json(const SharedPathGraverReport &r,
                                          const WeightedOrientedGraph &g);

} // namespace wog
