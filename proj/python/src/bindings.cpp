#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "balrig/cli.hpp"
#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/io.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/selftest.hpp"
#include "balrig/shifting.hpp"

namespace py = pybind11;
using namespace balrig;

namespace {

TrialPolicy policy(int trials, std::uint64_t prime, std::uint64_t seed) {
  TrialPolicy p;
  p.trials = trials;
  p.prime = prime;
  p.seed = seed;
  p.validate();
  return p;
}

BipartiteGraph graph(const std::string& text) { return io::graph_from_json(io::parse(text)); }
BalancedComplex complex(const std::string& text) { return io::complex_from_json(io::parse(text)); }

VertexOrder graph_order(const BipartiteGraph& g, const std::string& order, int k, int l) {
  if (order == "default") {
    return VertexOrder::admissible(g.a_size(), g.b_size(), std::min(k, g.a_size()), std::min(l, g.b_size()));
  }
  if (order == "interleaved") return VertexOrder::interleaved({g.a_size(), g.b_size()});
  return io::parse_order(order, {g.a_size(), g.b_size()});
}

VertexOrder complex_order(const BalancedComplex& k, const std::string& order) {
  if (order == "default" || order == "interleaved") return VertexOrder::interleaved(k.color_sizes());
  return io::parse_order(order, k.color_sizes());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced shifting and bipartite rigidity (JSON in, JSON out)";

  py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", PyExc_ValueError);
  py::register_exception<TrialDisagreement>(m, "TrialDisagreement", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const InternalError& e) {
      py::set_error(PyExc_RuntimeError, e.what());
    }
  });

  m.attr("DEFAULT_PRIME") = kDefaultPrime;

  m.def(
      "shift_graph",
      [](const std::string& g_json, const std::string& order, int k, int l, int trials, std::uint64_t prime,
         std::uint64_t seed) {
        const BipartiteGraph g = graph(g_json);
        const GraphShift s = shift_graph(g, graph_order(g, order, k, l), policy(trials, prime, seed));
        return io::Json{{"graph", io::to_json(s.graph)}, {"order", io::format_order(s.order)},
                        {"meta", io::to_json(s.meta)}}
            .dump();
      },
      py::arg("graph"), py::arg("order") = "default", py::arg("k") = 2, py::arg("l") = 2, py::arg("trials") = 3,
      py::arg("prime") = kDefaultPrime, py::arg("seed") = 1);

  m.def(
      "shift_complex",
      [](const std::string& k_json, const std::string& order, int trials, std::uint64_t prime, std::uint64_t seed) {
        const BalancedComplex k = complex(k_json);
        const ComplexShift s = shift_complex(k, complex_order(k, order), policy(trials, prime, seed));
        return io::Json{{"complex", io::to_json(s.complex)}, {"order", io::format_order(s.order)},
                        {"meta", io::to_json(s.meta)}}
            .dump();
      },
      py::arg("complex"), py::arg("order") = "default", py::arg("trials") = 3, py::arg("prime") = kDefaultPrime,
      py::arg("seed") = 1);

  m.def(
      "analyze",
      [](const std::string& g_json, int k, int l, int trials, std::uint64_t prime, std::uint64_t seed) {
        return io::to_json(analyze(graph(g_json), k, l, policy(trials, prime, seed))).dump();
      },
      py::arg("graph"), py::arg("k"), py::arg("l"), py::arg("trials") = 3, py::arg("prime") = kDefaultPrime,
      py::arg("seed") = 1);

  m.def(
      "stress_space",
      [](const std::string& g_json, int k, int l, int trials, std::uint64_t prime, std::uint64_t seed) {
        return stress_space(graph(g_json), k, l, policy(trials, prime, seed)).basis;
      },
      py::arg("graph"), py::arg("k"), py::arg("l"), py::arg("trials") = 3, py::arg("prime") = kDefaultPrime,
      py::arg("seed") = 1);

  m.def(
      "laman_check", [](const std::string& g_json, int k, int l) { return io::to_json(laman_check(graph(g_json), k, l)).dump(); },
      py::arg("graph"), py::arg("k"), py::arg("l"));

  m.def(
      "rows_independent_m",
      [](const std::string& k_json, int l, int trials, std::uint64_t prime, std::uint64_t seed) {
        return io::to_json(rows_independent_M(complex(k_json), l, policy(trials, prime, seed))).dump();
      },
      py::arg("complex"), py::arg("l"), py::arg("trials") = 3, py::arg("prime") = kDefaultPrime, py::arg("seed") = 1);

  m.def(
      "heawood_check",
      [](const std::string& k_json, int trials, std::uint64_t prime, std::uint64_t seed) {
        return io::to_json(heawood_check(complex(k_json), policy(trials, prime, seed))).dump();
      },
      py::arg("complex"), py::arg("trials") = 3, py::arg("prime") = kDefaultPrime, py::arg("seed") = 1);

  m.def("check_shifted_graph", [](const std::string& g_json) { return check_shifted(graph(g_json)); });
  m.def("check_shifted_complex", [](const std::string& k_json) { return check_shifted(complex(k_json)); });
  m.def("contains_join", [](const std::string& k_json, int points) { return contains_join(complex(k_json), points); });

  m.def(
      "generate",
      [](const std::string& family, const std::map<std::string, long long>& params, const std::string& mode,
         std::uint64_t seed) {
        cli::CommandConfig c;
        c.subcommand = "generate";
        c.family = family;
        c.params = params;
        c.mode = mode;
        c.seed = seed;
        std::ostringstream out, err;
        if (cli::run(c, out, err) != cli::kOk) {
          throw InvalidInput(io::parse(err.str())["error"]["message"].get<std::string>());
        }
        return out.str();
      },
      py::arg("family"), py::arg("params") = std::map<std::string, long long>{}, py::arg("mode") = "",
      py::arg("seed") = 1);

  m.def(
      "selftest",
      [](std::uint64_t seed) {
        TrialPolicy p;
        p.seed = seed;
        std::vector<std::tuple<int, std::string, bool, std::string>> rows;
        for (const Criterion& c : acceptance_criteria()) {
          const CriterionResult r = run_criterion(c, p);
          rows.emplace_back(r.id, r.name, r.passed, r.detail);
        }
        return rows;
      },
      py::arg("seed") = 1);
}
