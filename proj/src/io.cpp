#include "cordial/io.hpp"

#include <fstream>
#include <sstream>

namespace cordial {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"order", g.order}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  const nlohmann::json& src = j.contains("graph") ? j.at("graph") : j;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : src.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return make_graph(src.at("order").get<int>(), std::move(edges));
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int order = 0;
  if (!(in >> order)) throw std::invalid_argument("edge list: missing order line");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  if (!in.eof()) throw std::invalid_argument("edge list: trailing garbage");
  return make_graph(order, std::move(edges));
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(nlohmann::json::parse(text));
  return graph_from_edge_list(text);
}

nlohmann::json labeling_to_json(const Labeling& f) {
  nlohmann::json labels = nlohmann::json::object();
  for (size_t v = 0; v < f.values.size(); ++v) labels[std::to_string(v)] = f.values[v];
  return {{"labels", labels}};
}

Labeling labeling_from_json(const nlohmann::json& j) {
  const nlohmann::json& src = j.contains("labels") ? j.at("labels") : j;
  Labeling f;
  f.values.resize(src.size());
  for (auto it = src.begin(); it != src.end(); ++it) {
    size_t v = std::stoul(it.key());
    if (v >= f.values.size())
      throw std::invalid_argument("labeling: vertex ids must be 0.." +
                                  std::to_string(f.values.size() - 1));
    f.values[v] = it.value().get<i64>();
  }
  return f;
}

Labeling load_labeling(const std::string& path) {
  return labeling_from_json(nlohmann::json::parse(read_file(path)));
}

nlohmann::json report_to_json(const EdgeLabelReport& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& d : r.per_edge)
    edges.push_back({{"u", d.u},
                     {"v", d.v},
                     {"star", d.star_value},
                     {"residue", d.residue},
                     {"label", d.label},
                     {"reason", to_string(d.reason)}});
  return {{"e0", r.e0}, {"e1", r.e1}, {"cordial", r.cordial}, {"edges", edges}};
}

nlohmann::json psi_to_json(const EquivalenceWitness& w) {
  nlohmann::json psi = nlohmann::json::object();
  for (auto [a, b] : w.psi) psi[std::to_string(a)] = b;
  return {{"psi", psi}};
}

EquivalenceWitness psi_from_json(const nlohmann::json& j) {
  const nlohmann::json& src = j.contains("psi") ? j.at("psi") : j;
  EquivalenceWitness w;
  for (auto it = src.begin(); it != src.end(); ++it)
    w.psi[std::stoll(it.key())] = it.value().get<i64>();
  return w;
}

nlohmann::json load_json_file(const std::string& path) {
  return nlohmann::json::parse(read_file(path));
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file " + path);
  out << j.dump(2) << "\n";
}

}  // namespace cordial
