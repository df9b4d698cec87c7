#include "kml/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kml/errors.hpp"

namespace kml {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

std::size_t sizeFromJson(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Subset subsetFromLabel(const SCube& c, const std::string& text, const std::string& path) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw SchemaError(path, "subset key must look like {1,2}");
  Subset s = 0;
  std::stringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw SchemaError(path, "empty direction label");
    const std::string label = item.substr(b, e - b + 1);
    std::size_t idx = 0;
    try {
      idx = c.directionIndex(label);
    } catch (const UnknownDirection&) {
      throw SchemaError(path, "unknown direction '" + label + "'");
    }
    s |= Subset{1} << idx;
  }
  return s;
}

}  // namespace

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Ring ringFromJson(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const auto key = j.contains("ring") ? "ring" : "base";
  if (!j.contains(key)) throw SchemaError(child(path, "ring"), "missing field");
  const Json& r = j[key];
  if (!r.is_string()) throw SchemaError(child(path, key), "expected a string");
  std::string name = r.get<std::string>();
  if (name == "Fp") {
    const Json& p = require(j, "p", path);
    if (!p.is_number_integer()) throw SchemaError(child(path, "p"), "expected an integer");
    name = "Fp:" + std::to_string(p.get<long long>());
  }
  try {
    return Ring::parse(name);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(child(path, key), e.what());
  }
}

mpq_class scalarFromJson(const Json& j, const Ring& ring, const std::string& path) {
  mpq_class v;
  if (j.is_number_integer()) {
    v = mpq_class(mpz_class(std::to_string(j.get<long long>())));
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || v.set_str(s, 10) != 0)
      throw SchemaError(path, "not a decimal integer or fraction: '" + s + "'");
    if (v.get_den() == 0) throw SchemaError(path, "zero denominator");
    v.canonicalize();
  } else {
    throw SchemaError(path, "expected a decimal string or integer");
  }
  if (ring.kind() == RingKind::Integer && v.get_den() != 1) throw SchemaError(path, "fraction in an integer matrix");
  return ring.normalize(v);
}

Matrix matrixFromJson(const Json& j, const Ring& fallback, const std::string& path, long rows, long cols) {
  Ring ring = fallback;
  const Json* entries = &j;
  std::string entriesPath = path;
  if (j.is_object()) {
    if (j.contains("ring")) {
      ring = ringFromJson(j, path);
      if (ring != fallback) throw SchemaError(child(path, "ring"), "ring " + ring.name() + " where " + fallback.name() + " is expected");
    }
    entries = &require(j, "entries", path);
    entriesPath = child(path, "entries");
    const long r = static_cast<long>(sizeFromJson(require(j, "rows", path), child(path, "rows")));
    const long c = static_cast<long>(sizeFromJson(require(j, "cols", path), child(path, "cols")));
    if (rows >= 0 && r != rows) throw SchemaError(child(path, "rows"), "expected " + std::to_string(rows) + " rows");
    if (cols >= 0 && c != cols) throw SchemaError(child(path, "cols"), "expected " + std::to_string(cols) + " columns");
    rows = r;
    cols = c;
  }
  if (!entries->is_array()) throw SchemaError(entriesPath, "expected an array of rows");
  if (rows < 0) rows = static_cast<long>(entries->size());
  if (static_cast<long>(entries->size()) != rows)
    throw SchemaError(entriesPath, "expected " + std::to_string(rows) + " rows, found " + std::to_string(entries->size()));
  if (cols < 0) cols = rows == 0 ? 0 : static_cast<long>((*entries)[0].size());
  Matrix m(ring, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Json& row = (*entries)[r];
    const std::string rowPath = child(entriesPath, r);
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      throw SchemaError(rowPath, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, scalarFromJson(row[c], ring, child(rowPath, c)));
  }
  return m;
}

Module moduleFromJson(const Json& j, const Ring& ring, const std::string& path) {
  if (j.is_number_integer()) return Module::free(ring, sizeFromJson(j, path));
  if (!j.is_object()) throw SchemaError(path, "expected a rank or a presentation object");
  if (j.contains("generators")) {
    const std::size_t g = sizeFromJson(j["generators"], child(path, "generators"));
    if (!j.contains("relations")) return Module::free(ring, g);
    Matrix rel = matrixFromJson(j["relations"], ring, child(path, "relations"), static_cast<long>(g));
    return Module::quotient(rel);
  }
  ModulePresentation p;
  p.freeRank = j.contains("free") ? sizeFromJson(j["free"], child(path, "free")) : 0;
  if (j.contains("torsion")) {
    const Json& t = j["torsion"];
    if (!t.is_array()) throw SchemaError(child(path, "torsion"), "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      mpq_class v = scalarFromJson(t[i], Ring::integers(), child(child(path, "torsion"), i));
      if (v <= 1) throw SchemaError(child(child(path, "torsion"), i), "invariant factors must exceed 1");
      p.invariantFactors.push_back(v.get_num());
    }
  }
  if (!p.invariantFactors.empty() && ring.kind() != RingKind::Integer)
    throw SchemaError(child(path, "torsion"), "torsion over a field");
  return moduleFromPresentation(ring, p);
}

SCube cubeFromJson(const Json& j, const Ring& fallback) {
  const Ring ring = j.is_object() && (j.contains("ring") || j.contains("base")) ? ringFromJson(j, "") : fallback;
  const Json& dirs = require(j, "directions", "");
  if (!dirs.is_array() || dirs.size() > 8) throw SchemaError("/directions", "expected an array of at most 8 labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (!dirs[i].is_string() && !dirs[i].is_number_integer())
      throw SchemaError(child("/directions", i), "expected a label");
    labels.push_back(dirs[i].is_string() ? dirs[i].get<std::string>() : std::to_string(dirs[i].get<long long>()));
    for (std::size_t k = 0; k < i; ++k)
      if (labels[k] == labels[i]) throw SchemaError(child("/directions", i), "duplicate label");
  }
  SCube c(ring, labels);

  const Json& verts = require(j, "vertices", "");
  if (!verts.is_object()) throw SchemaError("/vertices", "expected an object keyed by subsets");
  std::vector<bool> seen(c.fullSet() + 1, false);
  for (const auto& [key, value] : verts.items()) {
    const std::string p = child("/vertices", key);
    const Subset s = subsetFromLabel(c, key, p);
    if (seen[s]) throw SchemaError(p, "vertex given twice");
    seen[s] = true;
    c.setVertex(s, moduleFromJson(value, ring, p));
  }
  for (Subset s = 0; s <= c.fullSet(); ++s)
    if (!seen[s]) throw SchemaError(child("/vertices", c.subsetLabel(s)), "missing vertex");

  const Json empty = Json::object();
  const Json& bnd = j.contains("boundaries") ? j["boundaries"] : empty;
  if (!bnd.is_object()) throw SchemaError("/boundaries", "expected an object keyed by subsets");
  std::vector<Subset> assigned(c.fullSet() + 1, 0);
  for (const auto& [key, maps] : bnd.items()) {
    const std::string p = child("/boundaries", key);
    const Subset s = subsetFromLabel(c, key, p);
    if (!maps.is_object()) throw SchemaError(p, "expected an object keyed by direction");
    for (const auto& [label, m] : maps.items()) {
      const std::string mp = child(p, label);
      std::size_t t = 0;
      try {
        t = c.directionIndex(label);
      } catch (const UnknownDirection&) {
        throw SchemaError(mp, "unknown direction");
      }
      if (!hasDirection(s, t)) throw SchemaError(mp, "direction not in the subset");
      const Subset face = s & ~(Subset{1} << t);
      if (assigned[s] & (Subset{1} << t)) throw SchemaError(mp, "boundary given twice");
      assigned[s] |= Subset{1} << t;
      c.setBoundary(s, t, matrixFromJson(m, ring, mp, static_cast<long>(c.vertex(face).generatorCount()),
                                         static_cast<long>(c.vertex(s).generatorCount())));
    }
  }
  for (Subset s = 1; s <= c.fullSet(); ++s)
    for (std::size_t t = 0; t < c.dimension(); ++t) {
      if (!hasDirection(s, t)) continue;
      const bool present = (assigned[s] & (Subset{1} << t)) != 0;
      const bool zeroSized = c.vertex(s).generatorCount() == 0 || c.vertex(s & ~(Subset{1} << t)).generatorCount() == 0;
      if (!present && !zeroSized)
        throw SchemaError(child(child("/boundaries", c.subsetLabel(s)), c.directions()[t]), "missing boundary");
    }

  const CubeValidation v = validateCube(c);
  if (!v.shapeErrors.empty()) throw SchemaError("/boundaries", v.shapeErrors.front());
  if (!v.squares.empty()) {
    const SquareViolation& q = v.squares.front();
    throw SchemaError(child("/boundaries", c.subsetLabel(q.subset)),
                      "square in directions " + c.directions()[q.s] + "," + c.directions()[q.t] + " does not commute");
  }
  return c;
}

GradedModule gradedFromJson(const Json& j, const Ring& fallback) {
  const Ring ring = j.is_object() && (j.contains("ring") || j.contains("base")) ? ringFromJson(j, "") : fallback;
  const std::size_t vars = sizeFromJson(require(j, "vars", ""), "/vars");
  const std::size_t d = sizeFromJson(require(j, "truncation", ""), "/truncation");
  const Json& comps = require(j, "components", "");
  if (!comps.is_array() || comps.size() > d + 1)
    throw SchemaError("/components", "expected at most truncation + 1 components");
  GradedModule x(ring, vars, d);
  for (std::size_t k = 0; k < comps.size(); ++k) x.setComponent(k, moduleFromJson(comps[k], ring, child("/components", k)));

  const Json empty = Json::object();
  const Json& maps = j.contains("maps") ? j["maps"] : empty;
  if (!maps.is_object()) throw SchemaError("/maps", "expected an object keyed by t1..tn");
  for (const auto& [key, _] : maps.items()) {
    bool known = false;
    for (std::size_t i = 0; i < vars; ++i) known = known || key == "t" + std::to_string(i + 1);
    if (!known) throw SchemaError(child("/maps", key), "unknown variable");
  }
  for (std::size_t i = 0; i < vars; ++i) {
    const std::string key = "t" + std::to_string(i + 1);
    const std::string p = child("/maps", key);
    const Json* list = maps.contains(key) ? &maps[key] : nullptr;
    if (list && (!list->is_array() || list->size() > d)) throw SchemaError(p, "expected at most truncation matrices");
    for (std::size_t k = 0; k < d; ++k) {
      const long rows = static_cast<long>(x.component(k + 1).generatorCount());
      const long cols = static_cast<long>(x.component(k).generatorCount());
      if (list && k < list->size() && !(*list)[k].is_null()) {
        x.setMap(i, k, matrixFromJson((*list)[k], ring, child(p, k), rows, cols));
      } else if (rows != 0 && cols != 0) {
        throw SchemaError(child(p, k), "missing map between nonzero components");
      } else {
        x.setMap(i, k, Matrix(ring, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)));
      }
    }
  }
  try {
    x.validate();
  } catch (const InvalidGradedModule& e) {
    throw SchemaError("/maps", e.what());
  }
  return x;
}

AffineObject affineFromJson(const Json& j, const Ring& fallback) {
  const Ring ring = j.is_object() && (j.contains("ring") || j.contains("base")) ? ringFromJson(j, "") : fallback;
  Module m = j.contains("module") ? moduleFromJson(j["module"], ring, "/module")
                                  : Module::free(ring, sizeFromJson(require(j, "dim", ""), "/dim"));
  const long g = static_cast<long>(m.generatorCount());
  const Json& endos = require(j, "endos", "");
  if (!endos.is_array()) throw SchemaError("/endos", "expected an array of matrices");
  std::vector<Matrix> list;
  for (std::size_t i = 0; i < endos.size(); ++i) list.push_back(matrixFromJson(endos[i], ring, child("/endos", i), g, g));
  try {
    return AffineObject(std::move(m), std::move(list));
  } catch (const InvalidAffineObject& e) {
    throw SchemaError("/endos", e.what());
  }
}

FFiltration filtrationFromJson(const Json& j, const AffineObject& parent) {
  FFiltration fil{parent, {}, {}};
  const Json* steps = &j;
  std::string path;
  if (j.is_object()) {
    steps = &require(j, "steps", "");
    path = "/steps";
    if (j.contains("endos")) {
      const Json& f = j["endos"];
      if (!f.is_array()) throw SchemaError("/endos", "expected an array of endomorphism indices");
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t e = sizeFromJson(f[i], child("/endos", i));
        if (e >= parent.endos().size()) throw SchemaError(child("/endos", i), "no such endomorphism");
        fil.f.push_back(e);
      }
    }
  }
  if (!steps->is_array() || steps->empty()) throw SchemaError(path, "expected a non-empty array of generator matrices");
  const long g = static_cast<long>(parent.generatorCount());
  for (std::size_t n = 0; n < steps->size(); ++n)
    fil.steps.push_back(imageOf(matrixFromJson((*steps)[n], parent.ring(), child(path, n), g)));
  try {
    validateFiltration(fil);
  } catch (const InvalidFiltration& e) {
    throw SchemaError(path, e.what());
  }
  return fil;
}

Json toJson(const mpq_class& value) { return value.get_str(); }

Json toJson(const mpz_class& value) { return value.get_str(); }

Json toJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json out{{"ring", m.ring().kind() == RingKind::PrimeField ? "Fp" : m.ring().name()},
           {"rows", m.rows()},
           {"cols", m.cols()},
           {"entries", std::move(rows)}};
  if (m.ring().kind() == RingKind::PrimeField) out["p"] = m.ring().characteristic();
  return out;
}

Json toJson(const ModulePresentation& p, const Ring& ring) {
  Json torsion = Json::array();
  for (const auto& f : p.invariantFactors) torsion.push_back(toJson(f));
  return Json{{"free", p.freeRank}, {"torsion", std::move(torsion)}, {"text", p.toString(ring.name())}};
}

Json toJson(const Submodule& s) {
  return Json{{"ambient", s.ambientRank()}, {"rank", s.rank()}, {"basis", toJson(s.generators())}};
}

Json toJson(const K0Vector& v) {
  return Json{{"window", v.window}, {"coefficients", v.coeffs}, {"text", v.toString()}};
}

Json toJson(const LaurentPolynomial& f) { return f.toString(); }

}  // namespace kml
