#include "balrig/cli.hpp"

#include <algorithm>
#include <functional>

#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/field.hpp"
#include "balrig/io.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/selftest.hpp"
#include "balrig/shifting.hpp"

namespace balrig::cli {
namespace {

using io::Json;
namespace fam = families;

constexpr int kMaxKL = 64;

struct Input {
  bool is_graph = true;
  BipartiteGraph graph;
  BalancedComplex complex;
};

// Bad command-line parameters, as opposed to bad input data.
class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

TrialPolicy policy_of(const CommandConfig& c) {
  TrialPolicy p;
  p.prime = c.prime;
  p.trials = c.trials;
  p.seed = c.seed;
  p.validate();
  return p;
}

Input load(const CommandConfig& c) {
  const int sources = !c.graph_path.empty() + !c.complex_path.empty() + !c.inline_spec.empty();
  require(sources == 1, "exactly one of --graph, --complex, --inline is required");
  Input in;
  if (!c.graph_path.empty()) {
    in.graph = io::graph_from_json(io::read_file(c.graph_path));
  } else if (!c.complex_path.empty()) {
    in.is_graph = false;
    in.complex = io::complex_from_json(io::read_file(c.complex_path));
  } else {
    const nlohmann::json j = io::parse(c.inline_spec);
    in.is_graph = !(j.is_object() && j.contains("facets"));
    if (in.is_graph) {
      in.graph = io::graph_from_json(j);
    } else {
      in.complex = io::complex_from_json(j);
    }
  }
  return in;
}

void check_kl(const CommandConfig& c) {
  require(c.k >= 1 && c.k <= kMaxKL, "k must be in [1, " + std::to_string(kMaxKL) + "]");
  require(c.l >= 1 && c.l <= kMaxKL, "l must be in [1, " + std::to_string(kMaxKL) + "]");
}

VertexOrder graph_order(const CommandConfig& c, const BipartiteGraph& g) {
  if (c.order == "default") {
    return VertexOrder::admissible(g.a_size(), g.b_size(), std::min(c.k, g.a_size()), std::min(c.l, g.b_size()));
  }
  if (c.order == "interleaved") return VertexOrder::interleaved({g.a_size(), g.b_size()});
  return io::parse_order(c.order, {g.a_size(), g.b_size()});
}

VertexOrder complex_order(const CommandConfig& c, const BalancedComplex& k) {
  if (c.order == "default" || c.order == "interleaved") return VertexOrder::interleaved(k.color_sizes());
  return io::parse_order(c.order, k.color_sizes());
}

Json cmd_shift(const CommandConfig& c) {
  const Input in = load(c);
  const TrialPolicy policy = policy_of(c);
  Json out;
  if (in.is_graph) {
    check_kl(c);
    const BipartiteGraph& g = in.graph;
    const GraphShift s = shift_graph(g, graph_order(c, g), policy);
    out["graph"] = io::to_json(s.graph);
    out["order"] = io::format_order(s.order);
    // Verdicts read off G^b, reported for (k,l)-admissible orders only.
    if (c.k <= g.a_size() && c.l <= g.b_size() && s.order.is_admissible(c.k, c.l)) {
      bool rigid = true;
      for (int a = 0; a < g.a_size(); ++a) {
        for (int b = 0; b < g.b_size(); ++b) {
          if ((a < c.k || b < c.l) && !s.graph.has_edge(a, b)) rigid = false;
        }
      }
      const bool stress_free = !(c.k < g.a_size() && c.l < g.b_size() && s.graph.has_edge(c.k, c.l));
      out["verdicts"] = {{"k", c.k}, {"l", c.l}, {"is_rigid", rigid}, {"is_stress_free", stress_free}};
    }
    out["meta"] = io::to_json(s.meta);
  } else {
    const ComplexShift s = shift_complex(in.complex, complex_order(c, in.complex), policy);
    out["complex"] = io::to_json(s.complex);
    out["order"] = io::format_order(s.order);
    out["is_pure"] = s.complex.is_pure();
    out["meta"] = io::to_json(s.meta);
  }
  return out;
}

const BipartiteGraph& need_graph(const Input& in, const char* cmd) {
  require(in.is_graph, std::string(cmd) + " expects a bipartite graph");
  return in.graph;
}

Json cmd_analyze(const CommandConfig& c) {
  const Input in = load(c);
  const BipartiteGraph& g = need_graph(in, "analyze");
  check_kl(c);
  const TrialPolicy policy = policy_of(c);
  Json out = io::to_json(analyze(g, c.k, c.l, policy));
  if (c.stresses) {
    const StressSpace s = stress_space(g, c.k, c.l, policy);
    Json basis = Json::array();
    for (const auto& v : s.basis) basis.push_back(v);
    out["stresses"] = {{"edges", io::to_json(g)["edges"]}, {"theta_seed", s.theta_seed}, {"basis", basis}};
  }
  return out;
}

Json cmd_laman(const CommandConfig& c) {
  const Input in = load(c);
  check_kl(c);
  return io::to_json(laman_check(need_graph(in, "laman"), c.k, c.l));
}

Json cmd_mcheck(const CommandConfig& c) {
  const Input in = load(c);
  require(!in.is_graph, "mcheck expects a balanced complex");
  require(c.l >= 1 && c.l <= kMaxKL, "l must be in [1, " + std::to_string(kMaxKL) + "]");
  const TrialPolicy policy = policy_of(c);
  const BalancedComplex& k = in.complex;
  Json out = io::to_json(rows_independent_M(k, c.l, policy));
  const ComplexShift s = shift_complex(k, complex_order(c, k), policy);
  out["shifted_contains_join"] = contains_join(s.complex, c.l + 1);
  if (c.l == 2) out["heawood"] = io::to_json(heawood_check(k, policy));
  return out;
}

long long param(const CommandConfig& c, const std::string& key, long long fallback, long long lo, long long hi) {
  const auto it = c.params.find(key);
  const long long v = it == c.params.end() ? fallback : it->second;
  require(v >= lo && v <= hi, "--" + key + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

long long need(const CommandConfig& c, const std::string& key, long long lo, long long hi) {
  require(c.params.count(key) != 0, "generate " + c.family + " needs --" + key);
  return param(c, key, 0, lo, hi);
}

Json cmd_generate(const CommandConfig& c) {
  require(!c.family.empty(), "generate needs a family name");
  const std::string& f = c.family;
  const std::uint64_t seed = c.seed;
  auto I = [](long long v) { return static_cast<int>(v); };

  if (f == "complete-bipartite") return io::to_json(fam::complete_bipartite(I(need(c, "n", 0, 500)), I(need(c, "m", 0, 500))));
  if (f == "cycle") return io::to_json(fam::cycle(I(need(c, "n", 2, 100000))));
  if (f == "tree") return io::to_json(fam::random_tree(I(need(c, "n", 1, 5000)), I(need(c, "m", 1, 5000)), seed));
  if (f == "k33-minus") return io::to_json(fam::k33_minus());
  if (f == "doubled-k33-minus") return io::to_json(fam::doubled_k33_minus());
  if (f == "cube") return io::to_json(fam::cube_graph(I(need(c, "d", 1, 16))));
  if (f == "stacked-cubical") {
    const int d = I(need(c, "d", 2, 12));
    const fam::CubicalGraph g = fam::stacked_cubical(d, I(param(c, "t", 1, 1, 1000)), seed);
    if (c.mode.empty()) return io::to_json(g.graph);
    const int facet = I(param(c, "facet", 0, 0, static_cast<long long>(g.boundary.size()) - 1));
    return io::to_json(fam::augment_facet(g, facet, fam::parse_augment_mode(c.mode)));
  }
  if (f == "quadrangulation") return io::to_json(fam::random_quadrangulation(I(need(c, "faces", 2, 100000)), seed));
  if (f == "outerplanar") {
    return io::to_json(fam::random_outerplanar(I(need(c, "n", 2, 100000)), I(param(c, "pendants", 0, 0, 100000)),
                                               I(param(c, "deletions", 0, 0, 100000)), seed));
  }
  if (f == "degenerate") {
    return io::to_json(fam::random_degenerate(I(need(c, "n", 2, 100000)), I(param(c, "max-back", 7, 1, 100000)), seed));
  }
  if (f == "random-bipartite") {
    return io::to_json(fam::random_bipartite(I(need(c, "n", 0, 2000)), I(need(c, "m", 0, 2000)),
                                             I(param(c, "num", 1, 0, 1000000)), I(param(c, "den", 2, 1, 1000000)), seed));
  }
  if (f == "cross-polytope") return io::to_json(fam::cross_polytope_boundary(I(need(c, "d", 1, 12))));
  if (f == "glued-cross-polytopes") {
    const int d = I(need(c, "d", 2, 8));
    return io::to_json(fam::glued_cross_polytopes(d, fam::default_gluing_pattern(d)));
  }
  if (f == "gamma") {
    const int d = I(need(c, "d", 1, 6));
    const int size = I(param(c, "size", 3, 2, 10));
    return io::to_json(fam::gamma_complex(d, std::vector<int>(static_cast<std::size_t>(d + 1), size)));
  }
  if (f == "van-kampen") return io::to_json(fam::van_kampen_complex(I(param(c, "l", c.l, 1, 10)), I(need(c, "d", 0, 6))));
  if (f == "random-complex") {
    const int colors = I(need(c, "colors", 1, 8));
    const int size = I(need(c, "size", 1, 12));
    return io::to_json(fam::random_balanced_complex(std::vector<int>(static_cast<std::size_t>(colors), size),
                                                    I(need(c, "facets", 1, 1000000)), seed));
  }
  throw UsageError("unknown family '" + f + "'");
}

Json cmd_selftest(const CommandConfig& c, bool& all_passed) {
  if (!field_self_check(c.prime, c.seed)) {
    throw InternalError("arithmetic self-check failed for modulus " + std::to_string(c.prime));
  }
  const TrialPolicy policy = policy_of(c);
  Json rows = Json::array();
  all_passed = true;
  for (const Criterion& crit : acceptance_criteria()) {
    const CriterionResult r = run_criterion(crit, policy);
    all_passed = all_passed && r.passed;
    rows.push_back({{"id", r.id}, {"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"prime", policy.prime}, {"seed", policy.seed}, {"trials", policy.trials},
          {"passed", all_passed}, {"criteria", rows}};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void write_table(const CommandConfig& c, const Json& j, std::ostream& out) {
  if (c.subcommand != "selftest") {
    flatten(j, "", out);
    return;
  }
  for (const Json& row : j["criteria"]) {
    out << (row["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << row["id"].get<int>() << "  "
        << row["property"].get<std::string>() << "  " << row["detail"].get<std::string>() << '\n';
  }
  out << (j["passed"].get<bool>() ? "all properties hold" : "some properties failed") << '\n';
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return kInput;
    case ErrorKind::kSizeCap: return kSizeCap;
    case ErrorKind::kTrialDisagreement: return kTrialDisagreement;
    case ErrorKind::kInternal: return kFailure;
  }
  return kFailure;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "json" && config.format != "table") {
    err << io::error_json(ErrorKind::kInvalidInput, "format must be json or table").dump() << '\n';
    return kUsage;
  }
  try {
    Json report;
    bool ok = true;
    const std::string& sub = config.subcommand;
    if (sub == "shift") {
      report = cmd_shift(config);
    } else if (sub == "analyze") {
      report = cmd_analyze(config);
    } else if (sub == "laman") {
      report = cmd_laman(config);
    } else if (sub == "mcheck") {
      report = cmd_mcheck(config);
    } else if (sub == "generate") {
      report = cmd_generate(config);
    } else if (sub == "selftest") {
      report = cmd_selftest(config, ok);
    } else {
      err << io::error_json(ErrorKind::kInvalidInput, "unknown subcommand '" + sub + "'").dump() << '\n';
      return kUsage;
    }
    if (config.format == "table") {
      write_table(config, report, out);
    } else {
      out << io::dump(report) << '\n';
    }
    return ok ? kOk : kFailure;
  } catch (const UsageError& e) {
    err << io::error_json(ErrorKind::kInvalidInput, e.what()).dump() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << io::error_json(e.kind(), e.what()).dump() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << io::error_json(ErrorKind::kInvalidInput, e.what()).dump() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << io::error_json(ErrorKind::kInternal, e.what()).dump() << '\n';
    return kFailure;
  }
}

}  // namespace balrig::cli
