#include "wog/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <algorithm>

#include "wog/error.hpp"

namespace wog {

using nlohmann::json;

namespace {

const json &field(const json &obj, const char *name, const std::string &where) {
  if (!obj.is_object() || !obj.contains(name))
    throw InputError(where + " is missing field '" + name + "'");
  return obj.at(name);
}

std::string string_field(const json &obj, const char *name, const std::string &where) {
  const json &v = field(obj, name, where);
  if (!v.is_string())
    throw InputError(where + " field '" + name + "' must be a string");
  return v.get<std::string>();
}

} // namespace

WeightedOrientedGraph graph_from_json(const json &j) {
  if (!j.is_object())
    throw InputError("graph JSON must be an object");
  const json &vs = field(j, "vertices", "graph");
  const json &es = field(j, "edges", "graph");
  if (!vs.is_array() || !es.is_array())
    throw InputError("graph fields 'vertices' and 'edges' must be arrays");
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string where = "vertex #" + std::to_string(i + 1);
    Vertex v;
    v.id = string_field(vs[i], "id", where);
    const json &w = field(vs[i], "w", "vertex '" + v.id + "'");
    if (!w.is_number_integer())
      throw InputError("vertex '" + v.id + "' weight must be an integer");
    v.weight = w.get<std::int64_t>();
    vertices.push_back(v);
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = "edge #" + std::to_string(i + 1);
    EdgeSpec e;
    e.id = string_field(es[i], "id", where);
    e.tail = string_field(es[i], "tail", "edge '" + e.id + "'");
    e.head = string_field(es[i], "head", "edge '" + e.id + "'");
    edges.push_back(e);
  }
  return build_graph(std::move(vertices), edges);
}

WeightedOrientedGraph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const WeightedOrientedGraph &g) {
  json vs = json::array(), es = json::array();
  for (const auto &v : g.vertices())
    vs.push_back({{"id", v.id}, {"w", v.weight}});
  for (const auto &e : g.edges())
    es.push_back({{"id", e.id}, {"tail", g.vertices()[e.tail].id}, {"head", g.vertices()[e.head].id}});
  return {{"vertices", vs}, {"edges", es}};
}

std::string matrix_hash(const IntegerMatrix &a) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string &s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  feed(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ";");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      feed(a(i, j).get_str() + ",");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json basis_set_to_json(const BasisSet &b, const IntegerMatrix &a, const std::vector<std::string> &labels) {
  json elements = json::array();
  for (const auto &m : b.elements)
    elements.push_back(binomial_string(m, labels));
  return {{"matrix_hash", matrix_hash(a)}, {"kind", b.kind}, {"elements", elements}};
}

BasisSet basis_set_from_json(const json &j, const std::vector<std::string> &labels) {
  std::vector<IntVec> out;
  for (const auto &s : field(j, "elements", "basis set"))
    out.push_back(parse_binomial(s.get<std::string>(), labels));
  std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
  return make_basis_set(kind, std::move(out));
}

json term_order_to_json(const TermOrder &t, const std::vector<std::string> &labels) {
  json p = json::array();
  for (auto i : t.priority)
    p.push_back(labels.at(i));
  json out{{"kind", "deglex"}, {"priority", p}};
  if (!t.grading.empty())
    out["grading"] = t.grading;
  return out;
}

TermOrder term_order_from_json(const json &j, const std::vector<std::string> &labels) {
  if (string_field(j, "kind", "term order") != "deglex")
    throw InputError("unsupported term order kind; only 'deglex' is available");
  std::vector<std::size_t> priority;
  for (const auto &s : field(j, "priority", "term order")) {
    auto name = s.get<std::string>();
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
      throw InputError("term order names unknown variable '" + name + "'");
    priority.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  TermOrder t = TermOrder::with_priority(priority, labels.size());
  if (j.contains("grading"))
    t = t.with_grading(j.at("grading").get<std::vector<std::int64_t>>());
  return t;
}

json report_to_json(const RobustnessReport &r) {
  auto one = [](const PredicateVerdict &p) {
    return json{{"verdict", to_string(p.value)}, {"method", to_string(p.method)}, {"certified", p.certified}};
  };
  return {{"strongly_robust", one(r.strongly)},
          {"robust", one(r.robust)},
          {"generalized_robust", one(r.generalized)},
          {"weakly_robust", one(r.weakly)},
          {"universal_groebner", r.certification},
          {"witnesses", r.witnesses}};
}

json shared_path_report_to_json(const SharedPathGraverReport &r, const WeightedOrientedGraph &g) {
  auto labels = g.edge_labels();
  auto strs = [](const std::vector<mpz_class> &v) {
    json out = json::array();
    for (const auto &x : v)
      out.push_back(x.get_str());
    return out;
  };
  auto pairs = [](const SharedPathGraverReport::Pairs &p) {
    json out = json::array();
    for (const auto &[x, y] : p)
      out.push_back({x, y});
    return out;
  };
  auto vecs = [&](const std::vector<IntVec> &vs) {
    json out = json::array();
    for (const auto &v : vs)
      out.push_back(v);
    return out;
  };
  json order = json::array();
  for (auto e : r.edge_order)
    order.push_back(labels[e]);
  json basis = json::array();
  for (const auto &m : r.basis.elements)
    basis.push_back(binomial_string(m, labels));
  return {{"edge_order", order},
          {"m", r.m},
          {"n", r.n},
          {"k", r.k},
          {"minors_C_m", strs(r.minors_a)},
          {"minors_C_n", strs(r.minors_b)},
          {"minors_C", strs(r.minors_c)},
          {"d_a", r.d_a.get_str()},
          {"d_b", r.d_b.get_str()},
          {"d_c", r.d_c.get_str()},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"d", {r.d[0], r.d[1], r.d[2], r.d[3], r.d[4], r.d[5]}},
          {"E_1", pairs(r.e1)},
          {"E_2", pairs(r.e2)},
          {"E_3", pairs(r.e3)},
          {"E_1_minimal", pairs(r.e1_min)},
          {"E_2_minimal", pairs(r.e2_min)},
          {"E_3_minimal", pairs(r.e3_min)},
          {"S_1", vecs(r.s1)},
          {"S_2", vecs(r.s2)},
          {"S_3", vecs(r.s3)},
          {"basis", basis}};
}

} // namespace wog
