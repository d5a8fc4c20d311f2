#include "nfold/json_io.hpp"

#include <fstream>

#include "nfold/error.hpp"

namespace nfold {

namespace {

void expect(bool cond, const std::string& msg) { require(cond, ErrorKind::InvalidInput, msg); }

json scalar_to_json(const Field& F, const Scalar& s) {
  if (F.is_rational()) {
    const mpq_class& q = std::get<mpq_class>(s);
    return q.get_den() == 1 ? json(q.get_num().get_str()) : json(q.get_str());
  }
  if (F.degree() == 1) return code_of(s);
  return F.digits(s);
}

Scalar scalar_from_json(const Field& F, const json& j) {
  if (F.is_rational()) {
    if (j.is_number_integer()) return F.from_int(j.get<long>());
    expect(j.is_string(), "rational coefficients are integers or \"num/den\" strings");
    mpq_class q;
    expect(q.set_str(j.get<std::string>(), 10) == 0, "malformed rational '" + j.get<std::string>() + "'");
    expect(q.get_den() != 0, "zero denominator");
    q.canonicalize();
    return F.from_rational(q);
  }
  if (F.degree() == 1) {
    expect(j.is_number_integer(), "prime field coefficients are integers");
    return F.from_int(j.get<long>());
  }
  if (j.is_number_integer()) return F.from_int(j.get<long>());
  expect(j.is_array() && j.size() <= F.degree(), "extension field elements are digit arrays");
  std::vector<std::uint32_t> d(F.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long v = j[i].get<long>();
    const long p = F.characteristic();
    d[i] = static_cast<std::uint32_t>(((v % p) + p) % p);
  }
  return F.from_digits(d);
}

}  // namespace

json to_json(const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return {{"kind", "rationals"}};
  if (f.e == 1) return {{"kind", "prime"}, {"p", f.p}};
  return {{"kind", "extension"}, {"p", f.p}, {"e", f.e}, {"modulus", f.modulus}};
}

FieldSpec field_spec_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind"), "field needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint32_t>());
  if (kind == "extension")
    return FieldSpec::extension(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(),
                                j.at("modulus").get<std::vector<std::uint32_t>>());
  expect(false, "unknown field kind '" + kind + "'");
  return {};
}

json to_json(const Ring& r) {
  json om = json::array();
  for (const auto& c : r.omega().c) om.push_back(scalar_to_json(r.field(), c));
  return {{"field", to_json(r.field().spec())}, {"sigma_power", r.phi_power()}, {"omega", om}};
}

Ring ring_from_json(const json& j) {
  try {
    const Field F(field_spec_from_json(j.at("field")));
    std::vector<Scalar> om;
    for (const auto& c : j.at("omega")) om.push_back(scalar_from_json(F, c));
    return Ring(F, j.value("sigma_power", 0L), std::move(om));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("ring JSON: ") + e.what());
  }
}

json to_json(const Ring& r, const Poly& p) {
  json a = json::array();
  for (const auto& c : p.c) a.push_back(scalar_to_json(r.field(), c));
  return a;
}

Poly poly_from_json(const Ring& r, const json& j) {
  if (j.is_number_integer() || j.is_string()) return r.constant(scalar_from_json(r.field(), j));
  expect(j.is_array(), "polynomials are coefficient arrays");
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(r.field(), e));
  return r.from_coeffs(std::move(c));
}

json to_json(const TwistedMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.ring(), m.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"twist", m.twist()}, {"entries", rows}};
}

TwistedMatrix matrix_from_json(const Ring& r, const json& j) {
  try {
    const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    TwistedMatrix m(r, rows, cols, j.value("twist", 0L));
    const json& e = j.at("entries");
    expect(e.is_array() && e.size() == rows, "matrix entries must have one array per row");
    for (std::size_t i = 0; i < rows; ++i) {
      expect(e[i].is_array() && e[i].size() == cols, "matrix row has the wrong length");
      for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = poly_from_json(r, e[i][c]);
    }
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("matrix JSON: ") + e.what());
  }
}

json to_json(const NFactorization& x) {
  json maps = json::array();
  for (const auto& m : x.maps()) maps.push_back(to_json(m));
  return {{"n", x.n()}, {"ranks", x.ranks()}, {"maps", maps}};
}

NFactorization object_from_json(const Ring& r, const json& j) {
  try {
    std::vector<TwistedMatrix> maps;
    for (const auto& m : j.at("maps")) maps.push_back(matrix_from_json(r, m));
    if (j.contains("n")) expect(j.at("n").get<std::size_t>() == maps.size(), "\"n\" disagrees with the map count");
    NFactorization x(r, std::move(maps));
    if (j.contains("ranks"))
      expect(j.at("ranks").get<std::vector<std::size_t>>() == x.ranks(), "\"ranks\" disagree with the maps");
    return x;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("factorization JSON: ") + e.what());
  }
}

json to_json(const FactorMorphism& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

FactorMorphism morphism_from_json(const Ring& r, const json& j) {
  try {
    std::vector<TwistedMatrix> comps;
    for (const auto& c : j.at("components")) comps.push_back(matrix_from_json(r, c));
    return FactorMorphism(object_from_json(r, j.at("source")), object_from_json(r, j.at("target")),
                          std::move(comps));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("morphism JSON: ") + e.what());
  }
}

json to_json(const HomotopyWitness& w) {
  json h = json::array();
  for (const auto& m : w.h) h.push_back(to_json(m));
  return {{"h", h}};
}

json to_json(const ModulePresentation& p) {
  return {{"generators", p.generators}, {"relations", to_json(p.relations)}};
}

ModulePresentation presentation_from_json(const Ring& r, const json& j) {
  try {
    return ModulePresentation(j.at("generators").get<std::size_t>(), matrix_from_json(r, j.at("relations")));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("presentation JSON: ") + e.what());
  }
}

json to_json(const ChainModule& c) {
  json mods = json::array(), maps = json::array();
  for (const auto& m : c.modules()) mods.push_back(to_json(m));
  for (const auto& m : c.maps()) maps.push_back(to_json(m));
  return {{"modules", mods}, {"maps", maps}};
}

ChainModule chain_from_json(const Ring& r, const json& j) {
  try {
    std::vector<ModulePresentation> mods;
    std::vector<TwistedMatrix> maps;
    for (const auto& m : j.at("modules")) mods.push_back(presentation_from_json(r, m));
    for (const auto& m : j.at("maps")) maps.push_back(matrix_from_json(r, m));
    return ChainModule(r, std::move(mods), std::move(maps));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("chain JSON: ") + e.what());
  }
}

json to_json(const GammaModuleData& g) {
  json maps = json::array();
  for (const auto& m : g.maps) maps.push_back(to_json(m));
  return {{"n", g.n}, {"ranks", g.ranks}, {"maps", maps}};
}

GammaModuleData gamma_from_json(const Ring& r, const json& j) {
  try {
    GammaModuleData g{r, j.at("n").get<std::size_t>(), j.at("ranks").get<std::vector<std::size_t>>(), {}};
    for (const auto& m : j.at("maps")) g.maps.push_back(matrix_from_json(r, m));
    return g;
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("Gamma JSON: ") + e.what());
  }
}

json to_json(const KMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.field(), m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, "'" + path + "': " + e.what());
  }
}

}  // namespace nfold
