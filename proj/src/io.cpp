#include "restoration/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace restoration {

Graph read_graph(std::istream& in) {
  long long n, m;
  int weighted;
  if (!(in >> n >> m >> weighted) || (weighted != 0 && weighted != 1))
    throw std::runtime_error("invalid graph header: expected 'n m weighted'");
  if (n < 0 || m < 0) throw std::runtime_error("invalid graph header: negative count");
  std::vector<EdgeSpec> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    EdgeSpec es;
    if (!(in >> es.u >> es.v))
      throw std::runtime_error("invalid edge line " + std::to_string(i + 1));
    if (weighted && !(in >> es.w))
      throw std::runtime_error("missing weight on edge line " + std::to_string(i + 1));
    edges.push_back(es);
  }
  return Graph(static_cast<int>(n), edges, weighted == 1);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.weighted() ? 1 : 0) << '\n';
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << g.weights()[i];
    out << '\n';
  }
}

FaultSet read_faults(std::istream& in, const Graph& g) {
  std::vector<Edge> edges;
  Vertex u, v;
  while (in >> u >> v) {
    if (!g.has_edge(u, v))
      throw std::runtime_error("fault references absent edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    edges.emplace_back(u, v);
  }
  if (!in.eof() && in.fail()) throw std::runtime_error("invalid fault line");
  return FaultSet(std::move(edges));
}

void write_faults(std::ostream& out, const FaultSet& fs) {
  for (const Edge& e : fs) out << e.u << ' ' << e.v << '\n';
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

ordered_json edge_to_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json fault_set_to_json(const FaultSet& fs) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : fs) arr.push_back(edge_to_json(e));
  return arr;
}

Edge edge_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("edge must be a [u, v] pair");
  return Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

FaultSet load_faults(const std::string& path, const Graph& g) {
  auto in = open_in(path);
  return read_faults(in, g);
}

void save_faults(const std::string& path, const FaultSet& fs) {
  auto out = open_out(path);
  write_faults(out, fs);
}

ordered_json decomposition_to_json(const Decomposition& d, int budget) {
  ordered_json j;
  j["boundaries"] = d.boundaries;
  ordered_json sets = ordered_json::array();
  for (const FaultSet& fs : d.fault_sets) sets.push_back(fault_set_to_json(fs));
  j["fault_sets"] = sets;
  ordered_json seps = ordered_json::array();
  for (const Edge& e : d.separators) seps.push_back(edge_to_json(e));
  j["separators"] = seps;
  j["q"] = d.q();
  j["budget"] = budget;
  return j;
}

std::pair<Decomposition, int> decomposition_from_json(const nlohmann::json& j) {
  Decomposition d;
  for (const char* key : {"boundaries", "fault_sets", "separators", "q", "budget"})
    if (!j.contains(key)) throw std::runtime_error(std::string("missing key: ") + key);
  d.boundaries = j.at("boundaries").get<std::vector<Vertex>>();
  for (const auto& arr : j.at("fault_sets")) {
    std::vector<Edge> edges;
    for (const auto& je : arr) edges.push_back(edge_from_json(je));
    d.fault_sets.emplace_back(std::move(edges));
  }
  for (const auto& je : j.at("separators")) d.separators.push_back(edge_from_json(je));
  // A decomposition with separators is in the alternating form; without any
  // it reads identically either way.
  d.alternating = !d.separators.empty();
  if (j.at("q").get<int>() != d.q())
    throw std::runtime_error("q does not match the number of fault sets");
  return {std::move(d), j.at("budget").get<int>()};
}

ordered_json verifier_report_to_json(const VerifierReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  ordered_json checks = ordered_json::array();
  for (const VerifierCheck& c : rep.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

ordered_json lowerbound_to_json(const LowerBoundInstance& lbi) {
  const ReplacementInstance& inst = lbi.instance;
  ordered_json j;
  j["n"] = inst.g.vertex_count();
  j["s"] = inst.s;
  j["t"] = inst.t;
  j["g_params"] = lbi.g_params;
  j["copies"] = lbi.copies;
  ordered_json arcs = ordered_json::array();
  for (auto [a, b] : lbi.half_arcs) arcs.push_back(ordered_json::array({a, b}));
  j["half_arcs"] = arcs;
  ordered_json per_copy = ordered_json::array();
  for (const FaultSet& fs : lbi.per_copy_faults) per_copy.push_back(fault_set_to_json(fs));
  j["per_copy_faults"] = per_copy;
  j["faults"] = fault_set_to_json(inst.faults);
  j["pi"] = inst.pi.vertices;
  return j;
}

std::string instance_digest(const ReplacementInstance& inst) {
  std::ostringstream blob;
  write_graph(blob, inst.g);
  write_faults(blob, inst.faults);
  blob << inst.s << ' ' << inst.t << '\n';
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : blob.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  auto out = open_out(path);
  out << contents;
}

}  // namespace restoration
