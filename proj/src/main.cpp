#include "acsa/errors.hpp"
#include "acsa/json_io.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace
{

using namespace acsa;

struct Opts
{
  std::string kind = "B";
  int d = 0;
  std::string n = "0";
  std::string a = "x", b = "y";
  std::string in, with, out, perm;
  std::string scale_x = "1", scale_y = "1", scale_z = "1";
  std::string xi_eps = "1";
  int d_max = 6;
  bool verbose = false;
};

void emit(const Json& j, const Opts& o)
{
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!o.out.empty())
  {
    std::ofstream f(o.out);
    if (!f)
      throw error("cannot write " + o.out);
    f << text << "\n";
  }
}

void note(const Opts& o, const std::string& line)
{
  if (o.verbose)
    std::cerr << line << "\n";
}

ModuleType type_from_opts(const Opts& o)
{
  ModuleType t;
  t.kind = o.kind == "B" ? Kind::B : Kind::AB;
  t.d = o.d;
  t.n = idx_from_char(o.n[0]);
  return t;
}

const char* bi_str(BIVerdict v)
{
  switch (v)
  {
  case BIVerdict::yes:
    return "yes";
  case BIVerdict::no:
    return "no";
  default:
    return "indeterminate";
  }
}

const char* class_str(TripleClass c)
{
  switch (c)
  {
  case TripleClass::totally_bipartite:
    return "totally_bipartite";
  case TripleClass::totally_almost_bipartite:
    return "totally_almost_bipartite";
  default:
    return "other";
  }
}

ExtScalar parse_scale(const std::string& s, const char* flag)
{
  ExtScalar v = parse_scalar(s);
  if (v.is_zero())
    throw precondition_error(std::string(flag) + " must be nonzero");
  return v;
}

Json residual_list(const std::vector<Mat>& residuals)
{
  Json out = Json::array();
  for (const Mat& r : residuals)
    out.push_back(matrix_json(r));
  return out;
}

int cmd_construct(const Opts& o)
{
  ModuleRep m = construct(type_from_opts(o));
  ExtScalar sx = parse_scale(o.scale_x, "--scale-x");
  ExtScalar sy = parse_scale(o.scale_y, "--scale-y");
  ExtScalar sz = parse_scale(o.scale_z, "--scale-z");
  bool scaled = o.scale_x != "1" || o.scale_y != "1" || o.scale_z != "1";
  m.x = sx * m.x;
  m.y = sy * m.y;
  m.z = sz * m.z;
  emit(module_json(m), o);
  note(o, "constructed " + type_str(m.type) + ", order " +
              std::to_string(m.type.d + 1) +
              (scaled ? ", with scaled generators" : ""));
  return 0;
}

int cmd_verify(const Opts& o)
{
  std::array<Mat, 3> g = triple_from_json(load_json(o.in));
  RelationReport xyz = check_relations_xyz(g[0], g[1], g[2]);
  RelationReport xy = check_relations_xy(g[0], g[1]);
  bool irr = is_irreducible(g[0], g[1], g[2]);
  Json out{{"xyz_ok", xyz.ok}, {"xy_ok", xy.ok}, {"irreducible", irr}};
  if (o.verbose)
    out["residuals"] = Json{{"xyz", residual_list(xyz.residuals)},
                            {"xy", residual_list(xy.residuals)}};
  emit(out, o);
  note(o, std::string("relations ") + (xyz.ok && xy.ok ? "hold" : "fail") +
              (irr ? "; irreducible" : "; reducible"));
  return 0;
}

int cmd_classify(const Opts& o)
{
  std::array<Mat, 3> g = triple_from_json(load_json(o.in));
  ModuleType t = classify_by_traces(g[0], g[1], g[2]);
  emit(Json{{"type", type_json(t)},
            {"traces", Json{{"x", scalar_json(g[0].trace())},
                            {"y", scalar_json(g[1].trace())},
                            {"z", scalar_json(g[2].trace())}}}},
       o);
  note(o, "classified as " + type_str(t));
  return 0;
}

int cmd_twist(const Opts& o)
{
  ModuleRep m = module_from_json(load_json(o.in), "module");
  Automorphism s = automorphism_from_perm(parse_perm(o.perm));
  ModuleRep t = twist(m, s);
  emit(module_json(t), o);
  note(o, "twisted " + type_str(m.type) + " by " + perm_str(s.perm) +
              " into " + type_str(t.type));
  return 0;
}

int cmd_eig(const Opts& o)
{
  ModuleType t = type_from_opts(o);
  EigTable e = eig_tables(t);
  Json lists;
  for (Idx g : {Idx::x, Idx::y, Idx::z})
  {
    Json list = Json::array();
    for (const Rational& q : e.of(g))
      list.push_back(rational_str(q));
    lists[std::string(1, idx_char(g))] = std::move(list);
  }
  emit(Json{{"type", type_json(t)}, {"eigenvalues", std::move(lists)}}, o);
  note(o, "spectra of " + type_str(t));
  return 0;
}

int cmd_idempotents(const Opts& o)
{
  Mat m = matrix_from_json(load_json(o.in), "matrix");
  std::vector<ExtScalar> ordering;
  Json values = Json::array();
  for (const auto& [value, mult] : rational_eigenvalues(m))
  {
    ordering.push_back(ExtScalar(value));
    values.push_back(Json{{"value", rational_str(value)},
                          {"multiplicity", mult}});
  }
  SpectralData s = primitive_idempotents(m, ordering);
  int n = m.rows();
  bool ok = true;
  Mat sum(n, n);
  for (std::size_t i = 0; i < s.idempotents.size(); ++i)
  {
    sum = sum + s.idempotents[i];
    ok = ok && (m * s.idempotents[i] - s.eigenvalues[i] * s.idempotents[i])
                   .is_zero();
    for (std::size_t j = 0; j < s.idempotents.size(); ++j)
    {
      Mat p = s.idempotents[i] * s.idempotents[j];
      ok = ok && (i == j ? p == s.idempotents[i] : p.is_zero());
    }
  }
  ok = ok && sum == Mat::identity(n);
  Json idem = Json::array();
  for (const Mat& e : s.idempotents)
    idem.push_back(matrix_json(e));
  emit(Json{{"eigenvalues", std::move(values)},
            {"idempotents", std::move(idem)},
            {"identities_ok", ok}},
       o);
  note(o, std::to_string(s.idempotents.size()) + " idempotents, identities " +
              (ok ? "hold" : "fail"));
  return 0;
}

Idx remaining_generator(Idx a, Idx b)
{
  for (Idx c : {Idx::x, Idx::y, Idx::z})
    if (c != a && c != b)
      return c;
  throw precondition_error("generator pair must be distinct");
}

Json basis_entry(const ModuleRep& m, Idx a, Idx b)
{
  Idx c = remaining_generator(a, b);
  std::array<Mat, 3> rep = representation_in_basis(m, a, b);
  Json matrices;
  matrices[std::string(1, idx_char(a))] = matrix_json(rep[0]);
  matrices[std::string(1, idx_char(b))] = matrix_json(rep[1]);
  matrices[std::string(1, idx_char(c))] = matrix_json(rep[2]);
  return Json{{"a", std::string(1, idx_char(a))},
              {"b", std::string(1, idx_char(b))},
              {"transition", matrix_json(six_bases(m, a, b))},
              {"matrices", std::move(matrices)}};
}

int cmd_bases(const Opts& o)
{
  ModuleType t = type_from_opts(o);
  ModuleRep m = construct(t);
  Json list = Json::array();
  for (Idx a : {Idx::x, Idx::y, Idx::z})
    for (Idx b : {Idx::x, Idx::y, Idx::z})
      if (a != b)
        list.push_back(basis_entry(m, a, b));
  emit(Json{{"type", type_json(t)}, {"bases", std::move(list)}}, o);
  note(o, "six bases of " + type_str(t));
  return 0;
}

int cmd_rep(const Opts& o)
{
  ModuleType t = type_from_opts(o);
  Idx a = idx_from_char(o.a[0]);
  Idx b = idx_from_char(o.b[0]);
  Idx c = remaining_generator(a, b);
  std::array<Mat, 3> rep = closed_form_rep(t, a, b);
  Json matrices;
  matrices[std::string(1, idx_char(a))] = matrix_json(rep[0]);
  matrices[std::string(1, idx_char(b))] = matrix_json(rep[1]);
  matrices[std::string(1, idx_char(c))] = matrix_json(rep[2]);
  emit(Json{{"type", type_json(t)},
            {"a", o.a},
            {"b", o.b},
            {"matrices", std::move(matrices)}},
       o);
  note(o, type_str(t) + " in the (" + o.a + ", " + o.b + ") basis");
  return 0;
}

int cmd_analyze_pair(const Opts& o)
{
  auto [a, a_star] = pair_from_json(load_json(o.in));
  PairAnalysis p = analyze_pair(a, a_star);
  Json out = pair_analysis_json(p);
  out["bannai_ito"] = bi_str(is_bannai_ito(p));
  emit(out, o);
  note(o, std::string(p.is_leonard ? "Leonard pair" : "not a Leonard pair") +
              ", diameter " + std::to_string(p.d));
  return 0;
}

int cmd_fit_aw(const Opts& o)
{
  auto [a, a_star] = pair_from_json(load_json(o.in));
  PairAnalysis p = analyze_pair(a, a_star);
  AWParams w = fit_AW(p);
  Json out = aw_json(w);
  if (o.verbose)
  {
    RefinedReport r = check_refined_relations(a, a_star, w.rho, w.rho_star);
    out["refined"] = Json{{"ok", r.ok},
                          {"residual", matrix_json(r.residual)},
                          {"residual_star", matrix_json(r.residual_star)}};
  }
  emit(out, o);
  note(o, "rho = " + scalar_str(w.rho) + ", rho_star = " +
              scalar_str(w.rho_star));
  return 0;
}

int cmd_analyze_triple(const Opts& o)
{
  std::array<Mat, 3> g = triple_from_json(load_json(o.in));
  TripleAnalysis t = verify_triple(g[0], g[1], g[2]);
  emit(triple_analysis_json(t), o);
  note(o, std::string(t.is_leonard ? "Leonard triple, " : "not a Leonard "
                                                          "triple, ") +
              class_str(t.cls));
  return 0;
}

int cmd_recognize_pair(const Opts& o)
{
  auto [a, a_star] = pair_from_json(load_json(o.in));
  PairRecognition r = recognize_pair(a, a_star);
  emit(pair_recognition_json(r), o);
  note(o, "recognized " + type_str(r.type) + " with xi = " +
              scalar_str(r.xi) + ", xi_star = " + scalar_str(r.xi_star));
  return 0;
}

int cmd_recognize_triple(const Opts& o)
{
  std::array<Mat, 3> g = triple_from_json(load_json(o.in));
  TripleOutcome out = recognize_triple(g[0], g[1], g[2]);
  emit(triple_outcome_json(out), o);
  if (out.ok)
    note(o, "recognized " + type_str(out.recognition->type));
  else
    note(o, "no module structure: " + out.certificate);
  return 0;
}

int cmd_extend(const Opts& o)
{
  auto [a, a_star] = pair_from_json(load_json(o.in));
  PairRecognition r = recognize_pair(a, a_star);
  ExtScalar xe = parse_scalar(o.xi_eps);
  std::array<Mat, 3> g = extend_pair_to_triple(r, xe);
  TripleAnalysis t = verify_triple(g[0], g[1], g[2]);
  emit(Json{{"a", matrix_json(g[0])},
            {"a_star", matrix_json(g[1])},
            {"a_eps", matrix_json(g[2])},
            {"class", class_str(t.cls)}},
       o);
  note(o, std::string("extended to a ") + class_str(t.cls) + " triple");
  return 0;
}

int cmd_iso_pair(const Opts& o)
{
  auto [a, a_star] = pair_from_json(load_json(o.in));
  auto [b, b_star] = pair_from_json(load_json(o.with));
  IsoDecision d = pair_isomorphism(a, a_star, b, b_star);
  emit(iso_json(d), o);
  note(o, d.isomorphic ? "isomorphic"
                       : "not isomorphic: " + d.discriminant);
  return 0;
}

int cmd_iso_triple(const Opts& o)
{
  std::array<Mat, 3> g = triple_from_json(load_json(o.in));
  std::array<Mat, 3> h = triple_from_json(load_json(o.with));
  IsoDecision d = triple_isomorphism(g[0], g[1], g[2], h[0], h[1], h[2]);
  emit(iso_json(d), o);
  note(o, d.isomorphic ? "isomorphic"
                       : "not isomorphic: " + d.discriminant);
  return 0;
}

int cmd_counterexample_d2(const Opts& o)
{
  auto [a, a_star, a_eps] = counterexample_d2();
  TripleAnalysis t = verify_triple(a, a_star, a_eps);
  ExtScalar four(4);
  const Mat* g[3] = {&a, &a_star, &a_eps};
  const char* names[3] = {"a", "a_star", "a_eps"};
  Json pairs = Json::array();
  for (int k = 0; k < 3; ++k)
  {
    RefinedReport r =
        check_refined_relations(*g[k], *g[(k + 1) % 3], four, four);
    pairs.push_back(Json{{"pair", Json::array({names[k], names[(k + 1) % 3]})},
                         {"rho", scalar_json(four)},
                         {"rho_star", scalar_json(four)},
                         {"refined_ok", r.ok}});
  }
  TripleOutcome out = recognize_triple(a, a_star, a_eps);
  emit(Json{{"a", matrix_json(a)},
            {"a_star", matrix_json(a_star)},
            {"a_eps", matrix_json(a_eps)},
            {"analysis", triple_analysis_json(t)},
            {"pairs", std::move(pairs)},
            {"outcome", triple_outcome_json(out)}},
       o);
  note(o, std::string(class_str(t.cls)) + " Leonard triple; " +
              (out.ok ? "recognized" : out.certificate));
  return 0;
}

int cmd_sweep(const Opts& o)
{
  Json rows = Json::array();
  bool all_ok = true;
  for (int d = 0; d <= o.d_max; ++d)
  {
    std::vector<ModuleType> types;
    if (d % 2 == 0)
      types.push_back({Kind::B, d, Idx::zero});
    for (Idx n : {Idx::zero, Idx::x, Idx::y, Idx::z})
      types.push_back({Kind::AB, d, n});
    for (const ModuleType& t : types)
    {
      ModuleRep m = construct(t);
      bool rel = check_relations_xyz(m.x, m.y, m.z).ok &&
                 check_relations_xy(m.x, m.y).ok;
      bool irr = is_irreducible(m.x, m.y, m.z);
      bool cls = classify_by_traces(m.x, m.y, m.z) == t;
      PairAnalysis p = analyze_pair(m.x, m.y);
      TripleAnalysis v = verify_triple(m.x, m.y, m.z);
      bool ok = rel && irr && cls && p.is_leonard && v.is_leonard;
      all_ok = all_ok && ok;
      Json row{{"type", type_str(t)},
               {"traces", Json{{"x", scalar_json(m.x.trace())},
                               {"y", scalar_json(m.y.trace())},
                               {"z", scalar_json(m.z.trace())}}},
               {"relations_ok", rel},
               {"irreducible", irr},
               {"classified_ok", cls},
               {"is_leonard", p.is_leonard && v.is_leonard},
               {"bannai_ito", bi_str(is_bannai_ito(p))},
               {"class", class_str(v.cls)},
               {"ok", ok}};
      if (p.is_leonard)
        row["aw"] = aw_json(fit_AW(p));
      rows.push_back(std::move(row));
    }
  }
  emit(Json{{"d_max", o.d_max}, {"rows", std::move(rows)},
            {"all_ok", all_ok}},
       o);
  note(o, std::string("sweep up to d = ") + std::to_string(o.d_max) +
              (all_ok ? ": all ok" : ": failures present"));
  return 0;
}

void add_type_flags(CLI::App* c, Opts& o, bool with_d = true)
{
  c->add_option("--kind", o.kind, "family, B or AB")
      ->check(CLI::IsMember({"B", "AB"}));
  if (with_d)
    c->add_option("--d", o.d, "diameter")->required();
  c->add_option("--n", o.n, "AB character index")
      ->check(CLI::IsMember({"0", "x", "y", "z"}));
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact constructions and recognition for modules of the "
               "anticommutator spin algebra"};
  app.require_subcommand(1);
  Opts o;
  app.add_flag("--verbose", o.verbose,
               "human summary and residuals on standard error");
  int (*handler)(const Opts&) = nullptr;
  auto bind = [&](CLI::App* c, int (*fn)(const Opts&)) {
    c->callback([&handler, fn] { handler = fn; });
    c->add_option("--out", o.out, "also write the JSON to this file");
    c->fallthrough();
    return c;
  };

  CLI::App* c = bind(app.add_subcommand(
                         "construct", "generator matrices of one module"),
                     cmd_construct);
  add_type_flags(c, o);
  c->add_option("--scale-x", o.scale_x, "multiply the x action");
  c->add_option("--scale-y", o.scale_y, "multiply the y action");
  c->add_option("--scale-z", o.scale_z, "multiply the z action");

  c = bind(app.add_subcommand("verify",
                              "check the defining relations and "
                              "irreducibility"),
           cmd_verify);
  c->add_option("--in", o.in, "module or operator triple JSON")->required();

  c = bind(app.add_subcommand("classify", "type from the trace triple"),
           cmd_classify);
  c->add_option("--in", o.in, "module or operator triple JSON")->required();

  c = bind(app.add_subcommand("twist",
                              "precompose a module with an automorphism"),
           cmd_twist);
  c->add_option("--in", o.in, "module JSON")->required();
  c->add_option("--perm", o.perm, "index permutation in cycle notation")
      ->required();

  c = bind(app.add_subcommand("eig", "generator spectra of one type"),
           cmd_eig);
  add_type_flags(c, o);

  c = bind(app.add_subcommand("idempotents",
                              "primitive idempotents of one matrix"),
           cmd_idempotents);
  c->add_option("--in", o.in, "matrix JSON")->required();

  c = bind(app.add_subcommand("bases",
                              "all six eigenbasis transitions and "
                              "representations"),
           cmd_bases);
  add_type_flags(c, o);

  c = bind(app.add_subcommand("rep",
                              "closed-form matrices in one ordered "
                              "eigenbasis"),
           cmd_rep);
  add_type_flags(c, o);
  c->add_option("--a", o.a, "diagonal generator")
      ->check(CLI::IsMember({"x", "y", "z"}));
  c->add_option("--b", o.b, "second generator")
      ->check(CLI::IsMember({"x", "y", "z"}));

  c = bind(app.add_subcommand("analyze-pair",
                              "Leonard pair analysis of two operators"),
           cmd_analyze_pair);
  c->add_option("--in", o.in, "pair JSON")->required();

  c = bind(app.add_subcommand("fit-aw",
                              "Askey-Wilson parameters of a pair"),
           cmd_fit_aw);
  c->add_option("--in", o.in, "pair JSON")->required();

  c = bind(app.add_subcommand("analyze-triple",
                              "Leonard triple analysis of three operators"),
           cmd_analyze_triple);
  c->add_option("--in", o.in, "triple JSON")->required();

  c = bind(app.add_subcommand("recognize-pair",
                              "module structure carried by a pair"),
           cmd_recognize_pair);
  c->add_option("--in", o.in, "pair JSON")->required();

  c = bind(app.add_subcommand("recognize-triple",
                              "module structure carried by a triple, or a "
                              "certificate"),
           cmd_recognize_triple);
  c->add_option("--in", o.in, "triple JSON")->required();

  c = bind(app.add_subcommand("extend",
                              "complete a recognized pair to a triple"),
           cmd_extend);
  c->add_option("--in", o.in, "pair JSON")->required();
  c->add_option("--xi-eps", o.xi_eps, "scale on the third operator");

  c = bind(app.add_subcommand("iso-pair", "pair isomorphism decision"),
           cmd_iso_pair);
  c->add_option("--in", o.in, "first pair JSON")->required();
  c->add_option("--with", o.with, "second pair JSON")->required();

  c = bind(app.add_subcommand("iso-triple", "triple isomorphism decision"),
           cmd_iso_triple);
  c->add_option("--in", o.in, "first triple JSON")->required();
  c->add_option("--with", o.with, "second triple JSON")->required();

  bind(app.add_subcommand("counterexample-d2",
                          "the diameter-two triple that carries no module "
                          "structure"),
       cmd_counterexample_d2);

  c = bind(app.add_subcommand("sweep",
                              "construct, verify and classify every type up "
                              "to a diameter"),
           cmd_sweep);
  c->add_option("--d-max", o.d_max, "largest diameter")->required();

  try
  {
    app.parse(argc, argv);
    return handler(o);
  }
  catch (const CLI::ParseError& e)
  {
    return app.exit(e);
  }
  catch (const unsupported_extension& e)
  {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  catch (const parse_error& e)
  {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  catch (const Json::parse_error& e)
  {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  catch (const std::exception& e)
  {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
