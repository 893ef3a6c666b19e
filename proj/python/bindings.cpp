// Python module: the command layer returns JSON documents, which the Python
// package decodes; a few direct queries are bound as plain values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octgroups/catalog.hpp"
#include "octgroups/cli.hpp"
#include "octgroups/verify.hpp"

namespace py = pybind11;
using namespace octgroups;

namespace {

CliOptions json_options(const std::string& golden_dir) {
  CliOptions o;
  o.format = Format::json;
  o.golden_dir = golden_dir;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("roster", [] {
    std::vector<std::string> names;
    for (const auto& e : roster()) names.push_back(e.name);
    return names;
  });
  m.def("group_order", [](const std::string& name) { return build_shared(roster_entry(name).name)->order(); });
  m.def("claim_ids", &claim_ids);

  m.def("chartab_json", [](const std::string& group, const std::string& golden_dir) { return cmd_chartab(group, json_options(golden_dir)).payload; },
        py::arg("group"), py::arg("golden_dir") = "");
  m.def("tensor_json",
        [](const std::string& group, const std::string& left, const std::string& right, const std::string& golden_dir) {
          return cmd_tensor(group, left, right, json_options(golden_dir)).payload;
        },
        py::arg("group"), py::arg("left"), py::arg("right"), py::arg("golden_dir") = "");
  m.def("branch_json",
        [](const std::string& group, const std::string& subgroup, const std::string& golden_dir) {
          return cmd_branch(group, subgroup, json_options(golden_dir)).payload;
        },
        py::arg("group"), py::arg("subgroup"), py::arg("golden_dir") = "");
  m.def("verify_json",
        [](std::optional<std::string> filter, const std::string& golden_dir) {
          auto doc = cmd_verify(filter, json_options(golden_dir));
          return py::make_tuple(doc.payload, doc.exit_code);
        },
        py::arg("filter") = py::none(), py::arg("golden_dir") = "");
  m.def("octmul_json", [](const std::vector<std::string>& factors) { return cmd_octmul(factors, json_options("")).payload; });
}
