// Python extension module. Mirrors the C++ surface with snake_case names;
// floats, int lists, and digit strings convert implicitly to DeformationParam,
// Composition, and Word so call sites stay short.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qdicke/algebra.hpp"
#include "qdicke/circuits.hpp"
#include "qdicke/common.hpp"
#include "qdicke/entanglement.hpp"
#include "qdicke/qcomb.hpp"
#include "qdicke/states.hpp"
#include "qdicke/verify.hpp"

namespace py = pybind11;
using namespace qdicke;

namespace {

std::string repr_composition(const Composition& k) {
  std::ostringstream out;
  out << "Composition([";
  for (int i = 0; i < k.d(); ++i) out << (i ? ", " : "") << k[i];
  out << "])";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Deformed Dicke states on qudits: exact and floating-point construction, "
      "entanglement entropy across bipartitions, and qubit preparation circuits.";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_RuntimeError);

  py::class_<DeformationParam>(m, "DeformationParam")
      .def(py::init<double, double>(), py::arg("magnitude"), py::arg("phase") = 0.0)
      .def_readonly("magnitude", &DeformationParam::magnitude)
      .def_readonly("phase", &DeformationParam::phase)
      .def("power", &DeformationParam::power, py::arg("x"))
      .def("inverse", &DeformationParam::inverse)
      .def("is_real", &DeformationParam::is_real)
      .def("__repr__", [](const DeformationParam& Q) {
        std::ostringstream out;
        out << "DeformationParam(" << Q.magnitude << ", " << Q.phase << ")";
        return out.str();
      });
  py::implicitly_convertible<py::float_, DeformationParam>();
  py::implicitly_convertible<py::int_, DeformationParam>();

  py::class_<Composition>(m, "Composition")
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_property_readonly("d", &Composition::d)
      .def_property_readonly("n", &Composition::n)
      .def_property_readonly("parts",
                             [](const Composition& k) { return k.parts(); })
      .def("__len__", &Composition::d)
      .def("__getitem__",
           [](const Composition& k, int i) {
             if (i < 0 || i >= k.d()) throw py::index_error();
             return k[i];
           })
      .def(py::self == py::self)
      .def("__repr__", &repr_composition);
  py::implicitly_convertible<py::list, Composition>();
  py::implicitly_convertible<py::tuple, Composition>();

  py::class_<Word>(m, "Word")
      .def(py::init(&Word::parse), py::arg("digits"))
      .def_readonly("letters", &Word::letters)
      .def("__str__", &Word::str)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Word& w) { return "Word(\"" + w.str() + "\")"; });
  py::implicitly_convertible<py::str, Word>();

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def("evaluate", &LaurentPoly::evaluate, py::arg("q"))
      .def("is_palindromic", &LaurentPoly::is_palindromic)
      .def("is_zero", &LaurentPoly::is_zero)
      .def(py::self == py::self)
      .def("__str__", &LaurentPoly::str)
      .def("__repr__",
           [](const LaurentPoly& p) { return "LaurentPoly(" + p.str() + ")"; });

  py::class_<StateVector>(m, "StateVector")
      .def_readonly("d", &StateVector::d)
      .def_readonly("n", &StateVector::n)
      .def_readonly("amplitudes", &StateVector::amplitudes)
      .def("dim", &StateVector::dim)
      .def("norm", &StateVector::norm)
      .def("__repr__", [](const StateVector& s) {
        std::ostringstream out;
        out << "StateVector(d=" << s.d << ", n=" << s.n << ", dim=" << s.dim() << ")";
        return out.str();
      });

  py::class_<EntropyCurve>(m, "EntropyCurve")
      .def_readonly("k", &EntropyCurve::k)
      .def_readonly("q_mag", &EntropyCurve::q_mag)
      .def_readonly("rows", &EntropyCurve::rows);

  // Combinatorics.
  m.def("q_bracket", &q_bracket, py::arg("x"), py::arg("q"));
  m.def("q_bracket_poly", &q_bracket_poly, py::arg("m"));
  m.def("q_factorial_poly", &q_factorial_poly, py::arg("m"));
  m.def("q_multinomial_poly", &q_multinomial_poly, py::arg("k"));
  m.def("q_multinomial_log", &q_multinomial_log, py::arg("k"), py::arg("q"));
  m.def("inversion_number", &inversion_number, py::arg("w"));
  m.def("max_inversion", &max_inversion, py::arg("k"));
  m.def("multiset_permutations", &multiset_permutations, py::arg("k"));
  m.def("identity_word", &identity_word, py::arg("k"));
  m.def("reverse_composition", &reverse_composition, py::arg("k"));
  m.def("verify_inversion_identity", &verify_inversion_identity, py::arg("k"));
  m.def("weak_compositions", &weak_compositions, py::arg("n"), py::arg("d"));

  // States.
  m.def("word_to_index", &word_to_index, py::arg("w"), py::arg("d"));
  m.def("index_to_word", &index_to_word, py::arg("idx"), py::arg("d"), py::arg("n"));
  m.def("amplitude", &amplitude, py::arg("k"), py::arg("Q"), py::arg("w"));
  m.def("dicke_sum", &dicke_sum, py::arg("k"), py::arg("Q"));
  m.def("dicke_recursive", &dicke_recursive, py::arg("k"), py::arg("Q"));
  m.def("dicke_operator", &dicke_operator, py::arg("k"), py::arg("q"));
  m.def("dual_transform", &dual_transform, py::arg("state"));
  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
  m.def("state_json", &state_json, py::arg("state"), py::arg("k"), py::arg("Q"));

  // Entanglement.
  m.def("enumerate_cuts", &enumerate_cuts, py::arg("k"), py::arg("l"));
  m.def("schmidt_coefficient", &schmidt_coefficient, py::arg("k"), py::arg("a"),
        py::arg("l"), py::arg("q"));
  m.def("schmidt_reconstruct", &schmidt_reconstruct, py::arg("k"), py::arg("Q"),
        py::arg("l"));
  m.def("entanglement_entropy", &entanglement_entropy, py::arg("k"), py::arg("q"),
        py::arg("l"));
  m.def("entropy_bruteforce", &entropy_bruteforce, py::arg("state"), py::arg("l"));
  m.def("verify_q_vandermonde", &verify_q_vandermonde, py::arg("k"), py::arg("l"));
  m.def("entropy_curve", &entropy_curve, py::arg("k"), py::arg("q"));
  m.def("entropy_csv", &entropy_csv, py::arg("curve"));
  m.def("entropy_csv_filename", &entropy_csv_filename, py::arg("curve"));

  // Circuits.
  py::enum_<GateKind>(m, "GateKind")
      .value("x", GateKind::x)
      .value("cx", GateKind::cx)
      .value("mcu", GateKind::mcu);

  py::class_<GateParams>(m, "GateParams")
      .def_readonly("theta", &GateParams::theta)
      .def_readonly("phi", &GateParams::phi)
      .def_readonly("lam", &GateParams::lambda)
      .def(py::self == py::self);

  py::class_<Gate>(m, "Gate")
      .def_readonly("kind", &Gate::kind)
      .def_readonly("controls", &Gate::controls)
      .def_readonly("target", &Gate::target)
      .def_readonly("params", &Gate::params)
      .def(py::self == py::self);

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("n_qubits", &Circuit::n_qubits)
      .def_readonly("gates", &Circuit::gates)
      .def(py::self == py::self)
      .def("__repr__", [](const Circuit& c) {
        std::ostringstream out;
        out << "Circuit(n_qubits=" << c.n_qubits << ", gates=" << c.gates.size()
            << ")";
        return out.str();
      });

  py::class_<FidelityReport>(m, "FidelityReport")
      .def_readonly("n", &FidelityReport::n)
      .def_readonly("l", &FidelityReport::l)
      .def_readonly("q", &FidelityReport::q)
      .def_readonly("alpha", &FidelityReport::alpha)
      .def_readonly("fidelity_full", &FidelityReport::fidelity_full)
      .def_readonly("fidelity_pruned", &FidelityReport::fidelity_pruned)
      .def_readonly("gates_full", &FidelityReport::gates_full)
      .def_readonly("gates_pruned", &FidelityReport::gates_pruned);

  m.def("wire_of_letter", &wire_of_letter, py::arg("n"), py::arg("i"));
  m.def("u_angles", &u_angles, py::arg("m"), py::arg("l"), py::arg("Q"));
  m.def("build_block_I", &build_block_I, py::arg("m"), py::arg("l"), py::arg("Q"));
  m.def("build_W", &build_W, py::arg("m"), py::arg("Q"));
  m.def("build_U", &build_U, py::arg("n"), py::arg("Q"));
  m.def("build_pruned_U", &build_pruned_U, py::arg("n"), py::arg("l"), py::arg("Q"));
  m.def("gate_count", &gate_count, py::arg("n"), py::arg("l"));
  m.def("simulate", &simulate, py::arg("circuit"), py::arg("input"));
  m.def("export_qasm", &export_qasm, py::arg("circuit"));
  m.def("parse_qasm", &parse_qasm, py::arg("text"));
  m.def("prepare_and_verify", &prepare_and_verify, py::arg("n"), py::arg("l"),
        py::arg("Q"));
  m.def("report_json", &report_json, py::arg("report"));

  // Algebra check.
  py::class_<CommutationReport>(m, "CommutationReport")
      .def_readonly("hx_violation", &CommutationReport::hx_violation)
      .def_readonly("xx_violation", &CommutationReport::xx_violation)
      .def_readonly("tol", &CommutationReport::tol)
      .def_readonly("pass_", &CommutationReport::pass);

  m.def("verify_commutation", &verify_commutation, py::arg("d"), py::arg("n"),
        py::arg("q"), py::arg("tol") = 1e-12);

  // Self-check suites.
  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("cases", &SuiteResult::cases)
      .def_readonly("max_dev", &SuiteResult::max_dev)
      .def_readonly("tolerance", &SuiteResult::tolerance)
      .def_readonly("pass_", &SuiteResult::pass);

  m.def(
      "run_verification",
      [](int max_n, int max_d, unsigned int seed, long long sample) {
        VerifyOptions opts;
        opts.max_n = max_n;
        opts.max_d = max_d;
        opts.seed = seed;
        opts.sample = sample;
        return run_verification(opts);
      },
      py::arg("max_n") = 6, py::arg("max_d") = 3, py::arg("seed") = 0,
      py::arg("sample") = 0);
  m.def("format_report", &format_report, py::arg("results"));
  m.def("all_pass", &all_pass, py::arg("results"));
}
