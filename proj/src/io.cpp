#include "balrig/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace balrig::io {
namespace {

int as_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  const long long v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw InvalidInput(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

int parse_positive(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    throw InvalidInput("bad vertex token '" + s + "'");
  }
  const int v = std::stoi(s);
  if (v < 1) throw InvalidInput("vertex indices are 1-based");
  return v;
}

}  // namespace

Json to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a + 1, e.b + 1});
  return Json{{"a_size", g.a_size()}, {"b_size", g.b_size()}, {"edges", std::move(edges)}};
}

Json to_json(const BalancedComplex& k) {
  Json facets = Json::array();
  for (const Face& f : k.facets()) {
    Json face = Json::array();
    for (const Vertex& v : f.vertices()) face.push_back({v.color + 1, v.index + 1});
    facets.push_back(std::move(face));
  }
  return Json{{"dim", k.dim()}, {"color_sizes", k.color_sizes()}, {"facets", std::move(facets)}};
}

Json to_json(const TrialMeta& meta) {
  return Json{{"prime", meta.prime},
              {"seed", meta.seed},
              {"trials", meta.trials},
              {"escalated", meta.escalated},
              {"failure_bound", meta.failure_bound}};
}

Json to_json(const RigidityReport& r) {
  return Json{{"k", r.k},
              {"l", r.l},
              {"rank", r.rank},
              {"is_rigid", r.is_rigid},
              {"is_stress_free", r.is_stress_free},
              {"stress_dim", r.stress_dim},
              {"num_edges", r.num_edges},
              {"max_rank", r.max_rank},
              {"size_warning", r.size_warning},
              {"meta", to_json(r.meta)}};
}

Json to_json(const LamanReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    Json a = Json::array(), b = Json::array();
    for (int i : r.witness->a) a.push_back(i + 1);
    for (int j : r.witness->b) b.push_back(j + 1);
    witness = Json{{"a", std::move(a)}, {"b", std::move(b)}, {"edges", r.witness->edges}, {"bound", r.witness->bound}};
  }
  return Json{{"k", r.k},
              {"l", r.l},
              {"holds", r.holds},
              {"count_holds", r.count_holds},
              {"edges", r.edges},
              {"required", r.required},
              {"witness", std::move(witness)},
              {"subsets_checked", r.subsets_checked}};
}

Json to_json(const MatrixIndependence& m) {
  return Json{{"rows", m.rows},
              {"rank", m.rank},
              {"independent", m.independent},
              {"meta", to_json(m.meta)}};
}

Json to_json(const HeawoodReport& h) {
  return Json{{"avoids_van_kampen", h.avoids_van_kampen},
              {"facets", h.facets},
              {"ridges", h.ridges},
              {"holds", h.holds},
              {"meta", to_json(h.meta)}};
}

Json error_json(ErrorKind kind, const std::string& message) {
  return Json{{"error", Json{{"kind", to_string(kind)}, {"message", message}}}};
}

namespace {

bool flat(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

void dump_to(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      dump_to(value, depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !flat(j) && j.dump().size() > 40) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i != 0) out += ",\n";
      out += pad;
      dump_to(j[i], depth + 1, out);
    }
    out += "\n" + close + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, 0, out);
  return out;
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
  const int n = as_int(field(j, "a_size"), "a_size");
  const int m = as_int(field(j, "b_size"), "b_size");
  if (n < 0 || m < 0) throw InvalidInput("side sizes must be non-negative");
  if (static_cast<long long>(n) * m > 50'000'000LL) throw InvalidInput("graph is too large");
  const auto& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw InvalidInput("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a pair [i, j]");
    edges.push_back({as_int(e[0], "edge endpoint") - 1, as_int(e[1], "edge endpoint") - 1});
  }
  return BipartiteGraph(n, m, std::move(edges));
}

BalancedComplex complex_from_json(const nlohmann::json& j) {
  const auto& sizes_json = field(j, "color_sizes");
  if (!sizes_json.is_array() || sizes_json.empty()) throw InvalidInput("color_sizes must be a non-empty array");
  std::vector<int> sizes;
  for (const auto& s : sizes_json) sizes.push_back(as_int(s, "color size"));
  if (j.contains("dim") && as_int(j["dim"], "dim") != static_cast<int>(sizes.size()) - 1) {
    throw InvalidInput("dim must equal the number of colors minus one");
  }
  if (sizes.size() > 31) throw InvalidInput("at most 31 colors are supported");
  const auto& facets_json = field(j, "facets");
  if (!facets_json.is_array()) throw InvalidInput("facets must be an array");
  std::vector<Face> facets;
  for (const auto& fj : facets_json) {
    if (!fj.is_array()) throw InvalidInput("each facet must be an array of [color, index] pairs");
    Face f(static_cast<int>(sizes.size()));
    for (const auto& vj : fj) {
      if (!vj.is_array() || vj.size() != 2) throw InvalidInput("each vertex must be a pair [color, index]");
      const int c = as_int(vj[0], "color") - 1;
      const int i = as_int(vj[1], "index") - 1;
      if (c < 0 || c >= static_cast<int>(sizes.size())) throw InvalidInput("color out of range");
      if (i < 0) throw InvalidInput("vertex index out of range");
      if (f.has(c)) throw InvalidInput("a facet has two vertices of one color");
      f.set(c, i);
    }
    facets.push_back(std::move(f));
  }
  return BalancedComplex(std::move(sizes), std::move(facets));
}

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

VertexOrder parse_order(const std::string& text, const std::vector<int>& color_sizes) {
  std::vector<Vertex> seq;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    if (color_sizes.size() == 2 && tok.find(':') == std::string::npos) {
      const bool b_side = tok.back() == '\'';
      if (b_side) tok.pop_back();
      seq.push_back({b_side ? kSideB : kSideA, parse_positive(tok) - 1});
    } else {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw InvalidInput("order tokens for complexes are color:index");
      seq.push_back({parse_positive(trim(tok.substr(0, colon))) - 1, parse_positive(trim(tok.substr(colon + 1))) - 1});
    }
  }
  return VertexOrder(color_sizes, std::move(seq));
}

std::string format_order(const VertexOrder& order) {
  std::string out;
  for (const Vertex& v : order.sequence()) {
    if (!out.empty()) out += ",";
    if (order.color_sizes().size() == 2) {
      out += std::to_string(v.index + 1) + (v.color == kSideB ? "'" : "");
    } else {
      out += std::to_string(v.color + 1) + ":" + std::to_string(v.index + 1);
    }
  }
  return out;
}

}  // namespace balrig::io
