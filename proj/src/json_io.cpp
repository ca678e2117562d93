#include "acsa/json_io.hpp"

#include "acsa/errors.hpp"

#include <fstream>

namespace acsa
{

namespace
{

const Json& field(const Json& j, const char* key, const std::string& where)
{
  if (!j.is_object() || !j.contains(key))
    throw parse_error(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where)
{
  const Json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw parse_error(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string str_field(const Json& j, const char* key,
                      const std::string& where)
{
  const Json& v = field(j, key, where);
  if (!v.is_string())
    throw parse_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Idx idx_from_str(const std::string& s, const std::string& where)
{
  if (s.size() != 1)
    throw parse_error(where + ": expected one of 0, x, y, z, got \"" + s +
                      "\"");
  try
  {
    return idx_from_char(s[0]);
  }
  catch (const error&)
  {
    throw parse_error(where + ": expected one of 0, x, y, z, got \"" + s +
                      "\"");
  }
}

const char* profile_str(ProfileClass c)
{
  switch (c)
  {
  case ProfileClass::bipartite:
    return "bipartite";
  case ProfileClass::almost_bipartite_first:
    return "almost_bipartite_first";
  case ProfileClass::almost_bipartite_last:
    return "almost_bipartite_last";
  default:
    return "other";
  }
}

const char* triple_class_str(TripleClass c)
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

Json scalar_vec_json(const std::vector<ExtScalar>& v)
{
  Json out = Json::array();
  for (const ExtScalar& e : v)
    out.push_back(scalar_str(e));
  return out;
}

Json rational_vec_json(const std::vector<Rational>& v)
{
  Json out = Json::array();
  for (const Rational& q : v)
    out.push_back(rational_str(q));
  return out;
}

} // namespace

Json scalar_json(const ExtScalar& v) { return Json(scalar_str(v)); }

ExtScalar scalar_from_json(const Json& j, const std::string& where)
{
  if (!j.is_string())
    throw parse_error(where + ": scalars must be strings");
  try
  {
    return parse_scalar(j.get<std::string>());
  }
  catch (const parse_error& e)
  {
    throw parse_error(where + ": " + e.what());
  }
}

Json rational_json(const Rational& q) { return Json(rational_str(q)); }

Rational rational_from_json(const Json& j, const std::string& where)
{
  if (!j.is_string())
    throw parse_error(where + ": rationals must be strings");
  try
  {
    return parse_rational(j.get<std::string>());
  }
  catch (const parse_error& e)
  {
    throw parse_error(where + ": " + e.what());
  }
}

Json matrix_json(const Mat& m)
{
  if (!m.is_square())
    throw error("matrix serialization requires a square matrix");
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
  {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(scalar_str(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"order", m.rows()}, {"entries", std::move(entries)}};
}

Mat matrix_from_json(const Json& j, const std::string& where)
{
  int n = int_field(j, "order", where);
  if (n < 1)
    throw parse_error(where + ": \"order\" must be positive");
  const Json& entries = field(j, "entries", where);
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw parse_error(where + ": \"entries\" must be an array of " +
                      std::to_string(n) + " rows");
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
  {
    const Json& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw parse_error(where + ": row " + std::to_string(i) + " must have " +
                        std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c)
      m(i, c) = scalar_from_json(row.at(c), where + " entry (" +
                                                std::to_string(i) + ", " +
                                                std::to_string(c) + ")");
  }
  return m;
}

Json type_json(const ModuleType& t)
{
  return Json{{"kind", t.kind == Kind::B ? "B" : "AB"},
              {"d", t.d},
              {"n", std::string(1, idx_char(t.n))}};
}

ModuleType type_from_json(const Json& j, const std::string& where)
{
  ModuleType t;
  std::string kind = str_field(j, "kind", where);
  if (kind == "B")
    t.kind = Kind::B;
  else if (kind == "AB")
    t.kind = Kind::AB;
  else
    throw parse_error(where + ": \"kind\" must be \"B\" or \"AB\"");
  t.d = int_field(j, "d", where);
  if (t.d < 0)
    throw parse_error(where + ": \"d\" must be nonnegative");
  if (j.contains("n"))
    t.n = idx_from_str(str_field(j, "n", where), where + " key \"n\"");
  else if (t.kind == Kind::AB)
    throw parse_error(where + ": AB types need the key \"n\"");
  return t;
}

Json module_json(const ModuleRep& m)
{
  Json basis;
  switch (m.basis.kind)
  {
  case BasisTag::Kind::constructor:
    basis = "constructor";
    break;
  case BasisTag::Kind::pair:
    basis = Json::array({std::string(1, idx_char(m.basis.a)),
                         std::string(1, idx_char(m.basis.b))});
    break;
  case BasisTag::Kind::ambient:
    basis = "ambient";
    break;
  }
  return Json{{"type", type_json(m.type)},
              {"x", matrix_json(m.x)},
              {"y", matrix_json(m.y)},
              {"z", matrix_json(m.z)},
              {"basis", std::move(basis)}};
}

ModuleRep module_from_json(const Json& j, const std::string& where)
{
  ModuleRep m;
  m.type = type_from_json(field(j, "type", where), where + " key \"type\"");
  m.x = matrix_from_json(field(j, "x", where), where + " key \"x\"");
  m.y = matrix_from_json(field(j, "y", where), where + " key \"y\"");
  m.z = matrix_from_json(field(j, "z", where), where + " key \"z\"");
  if (m.x.rows() != m.type.d + 1 || m.y.rows() != m.type.d + 1 ||
      m.z.rows() != m.type.d + 1)
    throw parse_error(where + ": matrix order must be d + 1");
  const Json& basis = field(j, "basis", where);
  if (basis.is_string())
  {
    std::string s = basis.get<std::string>();
    if (s == "constructor")
      m.basis.kind = BasisTag::Kind::constructor;
    else if (s == "ambient")
      m.basis.kind = BasisTag::Kind::ambient;
    else
      throw parse_error(where +
                        ": \"basis\" must be \"constructor\", \"ambient\" or "
                        "a generator pair");
  }
  else if (basis.is_array() && basis.size() == 2 && basis.at(0).is_string() &&
           basis.at(1).is_string())
  {
    m.basis.kind = BasisTag::Kind::pair;
    m.basis.a = idx_from_str(basis.at(0).get<std::string>(),
                             where + " key \"basis\"");
    m.basis.b = idx_from_str(basis.at(1).get<std::string>(),
                             where + " key \"basis\"");
  }
  else
    throw parse_error(where +
                      ": \"basis\" must be \"constructor\", \"ambient\" or a "
                      "generator pair");
  return m;
}

Json pair_analysis_json(const PairAnalysis& p)
{
  return Json{{"d", p.d},
              {"is_leonard", p.is_leonard},
              {"theta", rational_vec_json(p.theta)},
              {"theta_star", rational_vec_json(p.theta_star)},
              {"a_diag", scalar_vec_json(p.a_diag)},
              {"a_star_diag", scalar_vec_json(p.a_star_diag)},
              {"profile", profile_str(p.bip_class)},
              {"dual_profile", profile_str(p.dual_bip_class)},
              {"is_BI", p.is_BI}};
}

Json aw_json(const AWParams& w)
{
  return Json{{"beta", scalar_json(w.beta)},
              {"gamma", scalar_json(w.gamma)},
              {"gamma_star", scalar_json(w.gamma_star)},
              {"rho", scalar_json(w.rho)},
              {"rho_star", scalar_json(w.rho_star)},
              {"omega", scalar_json(w.omega)},
              {"eta", scalar_json(w.eta)},
              {"eta_star", scalar_json(w.eta_star)},
              {"unique", w.unique}};
}

Json triple_analysis_json(const TripleAnalysis& t)
{
  Json theta = Json::array();
  for (const auto& spectrum : t.theta)
    theta.push_back(rational_vec_json(spectrum));
  Json profiles = Json::array();
  for (const auto& row : t.profiles)
    profiles.push_back(
        Json::array({profile_str(row[0].cls), profile_str(row[1].cls)}));
  return Json{{"d", t.d},
              {"is_leonard", t.is_leonard},
              {"theta", std::move(theta)},
              {"profiles", std::move(profiles)},
              {"class", triple_class_str(t.cls)},
              {"is_BI", t.is_BI}};
}

Json pair_recognition_json(const PairRecognition& r)
{
  return Json{{"rho", scalar_json(r.rho)},
              {"rho_star", scalar_json(r.rho_star)},
              {"xi", scalar_json(r.xi)},
              {"xi_star", scalar_json(r.xi_star)},
              {"type", type_json(r.type)},
              {"module", module_json(r.module)},
              {"choices", r.choice_count}};
}

Json triple_outcome_json(const TripleOutcome& o)
{
  Json rec;
  if (o.recognition)
  {
    const TripleRecognition& r = *o.recognition;
    rec = Json{{"zeta", scalar_json(r.zeta)},
               {"zeta_star", scalar_json(r.zeta_star)},
               {"zeta_eps", scalar_json(r.zeta_eps)},
               {"xi", scalar_json(r.xi)},
               {"xi_star", scalar_json(r.xi_star)},
               {"xi_eps", scalar_json(r.xi_eps)},
               {"type", type_json(r.type)},
               {"module", module_json(r.module)}};
  }
  return Json{{"ok", o.ok},
              {"certificate", o.certificate},
              {"recognition", std::move(rec)}};
}

Json iso_json(const IsoDecision& d)
{
  Json p;
  if (d.intertwiner)
    p = matrix_json(*d.intertwiner);
  return Json{{"isomorphic", d.isomorphic},
              {"intertwiner", std::move(p)},
              {"discriminant", d.discriminant}};
}

Json load_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw error("cannot open " + path);
  try
  {
    return Json::parse(in);
  }
  catch (const Json::parse_error& e)
  {
    throw parse_error(path + ": " + e.what());
  }
}

std::pair<Mat, Mat> pair_from_json(const Json& j)
{
  Mat a, a_star;
  if (j.is_object() && j.contains("a") && j.contains("a_star"))
  {
    a = matrix_from_json(j.at("a"), "key \"a\"");
    a_star = matrix_from_json(j.at("a_star"), "key \"a_star\"");
  }
  else if (j.is_object() && j.contains("x") && j.contains("y"))
  {
    a = matrix_from_json(j.at("x"), "key \"x\"");
    a_star = matrix_from_json(j.at("y"), "key \"y\"");
  }
  else
    throw parse_error("operator input needs keys a, a_star or x, y");
  if (a.rows() != a_star.rows())
    throw parse_error("operator orders differ");
  return {std::move(a), std::move(a_star)};
}

std::array<Mat, 3> triple_from_json(const Json& j)
{
  Mat a, a_star, a_eps;
  if (j.is_object() && j.contains("a") && j.contains("a_star") &&
      j.contains("a_eps"))
  {
    a = matrix_from_json(j.at("a"), "key \"a\"");
    a_star = matrix_from_json(j.at("a_star"), "key \"a_star\"");
    a_eps = matrix_from_json(j.at("a_eps"), "key \"a_eps\"");
  }
  else if (j.is_object() && j.contains("x") && j.contains("y") &&
           j.contains("z"))
  {
    a = matrix_from_json(j.at("x"), "key \"x\"");
    a_star = matrix_from_json(j.at("y"), "key \"y\"");
    a_eps = matrix_from_json(j.at("z"), "key \"z\"");
  }
  else
    throw parse_error("operator input needs keys a, a_star, a_eps or x, y, z");
  if (a.rows() != a_star.rows() || a.rows() != a_eps.rows())
    throw parse_error("operator orders differ");
  return {std::move(a), std::move(a_star), std::move(a_eps)};
}

} // namespace acsa
