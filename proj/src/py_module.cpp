#include "acsa/errors.hpp"
#include "acsa/json_io.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;

namespace
{

using namespace acsa;

// All payloads cross the boundary as JSON text; the python package turns
// them into dicts. Scalars stay strings, so nothing is ever rounded.
Json parse_payload(const std::string& text)
{
  try
  {
    return Json::parse(text);
  }
  catch (const Json::parse_error& e)
  {
    throw parse_error(e.what());
  }
}

ModuleType make_type(const std::string& kind, int d, const std::string& n)
{
  return type_from_json(Json{{"kind", kind}, {"d", d}, {"n", n}}, "type");
}

std::string py_construct(const std::string& kind, int d, const std::string& n)
{
  return module_json(construct(make_type(kind, d, n))).dump();
}

std::string py_verify(const std::string& text)
{
  std::array<Mat, 3> g = triple_from_json(parse_payload(text));
  return Json{{"xyz_ok", check_relations_xyz(g[0], g[1], g[2]).ok},
              {"xy_ok", check_relations_xy(g[0], g[1]).ok},
              {"irreducible", is_irreducible(g[0], g[1], g[2])}}
      .dump();
}

std::string py_classify(const std::string& text)
{
  std::array<Mat, 3> g = triple_from_json(parse_payload(text));
  return type_json(classify_by_traces(g[0], g[1], g[2])).dump();
}

std::string py_twist(const std::string& text, const std::string& perm)
{
  ModuleRep m = module_from_json(parse_payload(text), "module");
  return module_json(twist(m, automorphism_from_perm(parse_perm(perm))))
      .dump();
}

std::string py_eig(const std::string& kind, int d, const std::string& n)
{
  EigTable e = eig_tables(make_type(kind, d, n));
  Json out;
  for (Idx g : {Idx::x, Idx::y, Idx::z})
  {
    Json list = Json::array();
    for (const Rational& q : e.of(g))
      list.push_back(rational_str(q));
    out[std::string(1, idx_char(g))] = std::move(list);
  }
  return out.dump();
}

std::string py_rep(const std::string& kind, int d, const std::string& n,
                   const std::string& a, const std::string& b)
{
  if (a.size() != 1 || b.size() != 1)
    throw parse_error("generators are single characters");
  ModuleType t = make_type(kind, d, n);
  Idx ia = idx_from_char(a[0]);
  Idx ib = idx_from_char(b[0]);
  Idx ic = Idx::x;
  for (Idx g : {Idx::x, Idx::y, Idx::z})
    if (g != ia && g != ib)
      ic = g;
  std::array<Mat, 3> rep = closed_form_rep(t, ia, ib);
  Json out;
  out[std::string(1, idx_char(ia))] = matrix_json(rep[0]);
  out[std::string(1, idx_char(ib))] = matrix_json(rep[1]);
  out[std::string(1, idx_char(ic))] = matrix_json(rep[2]);
  return out.dump();
}

std::string py_analyze_pair(const std::string& text)
{
  auto [a, a_star] = pair_from_json(parse_payload(text));
  PairAnalysis p = analyze_pair(a, a_star);
  Json out = pair_analysis_json(p);
  switch (is_bannai_ito(p))
  {
  case BIVerdict::yes:
    out["bannai_ito"] = "yes";
    break;
  case BIVerdict::no:
    out["bannai_ito"] = "no";
    break;
  default:
    out["bannai_ito"] = "indeterminate";
  }
  return out.dump();
}

std::string py_fit_aw(const std::string& text)
{
  auto [a, a_star] = pair_from_json(parse_payload(text));
  return aw_json(fit_AW(analyze_pair(a, a_star))).dump();
}

std::string py_analyze_triple(const std::string& text)
{
  std::array<Mat, 3> g = triple_from_json(parse_payload(text));
  return triple_analysis_json(verify_triple(g[0], g[1], g[2])).dump();
}

std::string py_recognize_pair(const std::string& text)
{
  auto [a, a_star] = pair_from_json(parse_payload(text));
  return pair_recognition_json(recognize_pair(a, a_star)).dump();
}

std::string py_pair_choices(const std::string& text)
{
  auto [a, a_star] = pair_from_json(parse_payload(text));
  Json out = Json::array();
  for (const PairRecognition& c : pair_choices(recognize_pair(a, a_star)))
    out.push_back(pair_recognition_json(c));
  return out.dump();
}

std::string py_recognize_triple(const std::string& text)
{
  std::array<Mat, 3> g = triple_from_json(parse_payload(text));
  return triple_outcome_json(recognize_triple(g[0], g[1], g[2])).dump();
}

std::string py_extend(const std::string& text, const std::string& xi_eps)
{
  auto [a, a_star] = pair_from_json(parse_payload(text));
  PairRecognition r = recognize_pair(a, a_star);
  std::array<Mat, 3> g = extend_pair_to_triple(r, parse_scalar(xi_eps));
  return Json{{"a", matrix_json(g[0])},
              {"a_star", matrix_json(g[1])},
              {"a_eps", matrix_json(g[2])}}
      .dump();
}

std::string py_iso_pair(const std::string& t1, const std::string& t2)
{
  auto [a, a_star] = pair_from_json(parse_payload(t1));
  auto [b, b_star] = pair_from_json(parse_payload(t2));
  return iso_json(pair_isomorphism(a, a_star, b, b_star)).dump();
}

std::string py_iso_triple(const std::string& t1, const std::string& t2)
{
  std::array<Mat, 3> g = triple_from_json(parse_payload(t1));
  std::array<Mat, 3> h = triple_from_json(parse_payload(t2));
  return iso_json(
             triple_isomorphism(g[0], g[1], g[2], h[0], h[1], h[2]))
      .dump();
}

std::string py_counterexample_d2()
{
  std::array<Mat, 3> g = counterexample_d2();
  return Json{{"a", matrix_json(g[0])},
              {"a_star", matrix_json(g[1])},
              {"a_eps", matrix_json(g[2])}}
      .dump();
}

} // namespace

PYBIND11_MODULE(_acsa, m)
{
  m.doc() = "Exact constructions and recognition for modules of the "
            "anticommutator spin algebra";

  py::register_exception<error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<unsupported_extension>(m, "UnsupportedExtension",
                                                PyExc_ValueError);

  m.def("construct", &py_construct, py::arg("kind"), py::arg("d"),
        py::arg("n") = "0", "Generator matrices of one module, as JSON");
  m.def("verify", &py_verify, py::arg("payload"),
        "Relation and irreducibility checks on a module or triple");
  m.def("classify", &py_classify, py::arg("payload"),
        "Type from the trace triple");
  m.def("twist", &py_twist, py::arg("payload"), py::arg("perm"),
        "Precompose a module with the automorphism of an index permutation");
  m.def("eig", &py_eig, py::arg("kind"), py::arg("d"), py::arg("n") = "0",
        "Ordered generator spectra of one type");
  m.def("rep", &py_rep, py::arg("kind"), py::arg("d"), py::arg("n"),
        py::arg("a"), py::arg("b"),
        "Closed-form matrices in one ordered eigenbasis");
  m.def("analyze_pair", &py_analyze_pair, py::arg("payload"),
        "Leonard pair analysis of two operators");
  m.def("fit_aw", &py_fit_aw, py::arg("payload"),
        "Askey-Wilson parameters of a pair");
  m.def("analyze_triple", &py_analyze_triple, py::arg("payload"),
        "Leonard triple analysis of three operators");
  m.def("recognize_pair", &py_recognize_pair, py::arg("payload"),
        "Module structure carried by a pair");
  m.def("pair_choices", &py_pair_choices, py::arg("payload"),
        "The four sign choices of a recognized pair");
  m.def("recognize_triple", &py_recognize_triple, py::arg("payload"),
        "Module structure carried by a triple, or a certificate");
  m.def("extend", &py_extend, py::arg("payload"), py::arg("xi_eps"),
        "Complete a recognized pair to a triple");
  m.def("iso_pair", &py_iso_pair, py::arg("first"), py::arg("second"),
        "Pair isomorphism decision");
  m.def("iso_triple", &py_iso_triple, py::arg("first"), py::arg("second"),
        "Triple isomorphism decision");
  m.def("counterexample_d2", &py_counterexample_d2,
        "The diameter-two triple that carries no module structure");
}
