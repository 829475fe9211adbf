#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "dsmooth/cli.hpp"
#include "dsmooth/error.hpp"
#include "dsmooth/format.hpp"
#include "dsmooth/report.hpp"

namespace py = pybind11;
using namespace dsmooth;

namespace {

Presentation solver_presentation(const AlgebraFile& f) {
  Presentation p = presentation_of(f);
  return p.ordering() == Ordering::ascending ? p : to_ascending(p);
}

long gkdim_or_n(std::optional<long> gkdim, const Presentation& p) {
  return gkdim ? *gkdim : static_cast<long>(p.size());
}

std::string smooth(const std::string& text, std::optional<long> gkdim) {
  Presentation p = solver_presentation(parse_algebra(text));
  py::gil_scoped_release nogil;
  return to_json(decide(p, gkdim_or_n(gkdim, p)), p).dump();
}

std::string classify3d(const std::string& text) {
  Presentation p = solver_presentation(parse_algebra(text));
  if (p.size() != 3) throw MismatchedArity("classify3d needs three generators");
  return to_json(classify_3d(p)).dump();
}

std::string calculus(const std::string& text, unsigned max_degree, std::size_t integrability, std::uint64_t seed,
                     std::optional<long> gkdim) {
  Presentation p = solver_presentation(parse_algebra(text));
  py::gil_scoped_release nogil;
  return to_json(analyse_calculus(p, gkdim_or_n(gkdim, p), max_degree, integrability, seed), p).dump();
}

std::string diffusion_classify(const std::string& text) {
  AlgebraFile f = parse_algebra(text);
  if (f.kind != AlgebraKind::diffusion1 || f.n() != 3)
    throw std::invalid_argument("diffusion_classify needs kind diffusion1 with n = 3");
  Presentation enc = encode_presentation(f.diffusion());
  return diffusion_classification_json(classify_diffusion_3(f.diffusion()), check_pbw_overlaps(enc), enc).dump();
}

std::string verify_identities(unsigned n_max, std::size_t samples, std::uint64_t seed) {
  py::gil_scoped_release nogil;
  return to_json(run_identity_suite(n_max, samples, seed)).dump();
}

std::string pbw_check(const std::string& text) {
  Presentation p = presentation_of(parse_algebra(text));
  return to_json(check_pbw_overlaps(p), p).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release nogil;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of dsmooth; the functions return JSON text.";

  auto& base = py::register_exception<Error>(m, "DsmoothError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "AlgebraSyntaxError", base);

  m.def("normalize", [](const std::string& text) { return emit_algebra(parse_algebra(text)); }, py::arg("text"),
        "Canonical text of an algebra file.");
  m.def("smooth", &smooth, py::arg("text"), py::arg("gkdim") = py::none());
  m.def("classify3d", &classify3d, py::arg("text"));
  m.def("calculus", &calculus, py::arg("text"), py::arg("max_degree"), py::arg("integrability") = 0,
        py::arg("seed") = 1, py::arg("gkdim") = py::none());
  m.def("diffusion_classify", &diffusion_classify, py::arg("text"));
  m.def("verify_identities", &verify_identities, py::arg("n_max") = 6, py::arg("samples") = 20, py::arg("seed") = 1);
  m.def("pbw_check", &pbw_check, py::arg("text"));
  m.def("run_cli", &cli, py::arg("args"), "(exit code, stdout, stderr) of the command-line tool.");
}
