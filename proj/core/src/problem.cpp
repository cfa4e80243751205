#include "unitstate/problem.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace unitstate {

using nlohmann::json;

const Term& ProblemSpec::term(const std::string& tname) const {
  auto it = terms.find(tname);
  if (it == terms.end()) throw ValidationError("unknown term \"" + tname + "\"");
  return it->second;
}

Element ProblemSpec::element(const std::string& ename) const {
  auto t = terms.find(ename);
  if (t != terms.end()) return Element::from_term(t->second);
  auto e = elements.find(ename);
  if (e != elements.end()) return Element::from_forms(e->second);
  throw ValidationError("unknown element \"" + ename + "\": not a named term or per-simplex element");
}

namespace {

RatVec parse_vertex(const json& j, size_t m) {
  if (!j.is_array() || j.size() != m)
    throw ValidationError("vertex must be an array of " + std::to_string(m) + " rational strings");
  RatVec v;
  for (const auto& coord : j) {
    if (!coord.is_string()) throw ValidationError("vertex coordinates must be rational strings like \"1/3\"");
    v.push_back(parse_rat(coord.get<std::string>()));
  }
  return v;
}

void check_element_face_agreement(const ProblemSpec& spec) {
  const auto& cells = spec.complex.cells();
  for (const auto& [name, table] : spec.elements) {
    auto value_at = [&](size_t id, const RatVec& p) {
      auto it = table.find(id);
      return it == table.end() ? Rat(0) : dot(it->second, p);
    };
    for (size_t i = 0; i < cells.size(); ++i) {
      for (size_t j = i + 1; j < cells.size(); ++j) {
        // On a valid complex the intersection is the hull of the shared
        // vertices; affine forms agree there iff they agree at those.
        for (const RatVec& v : cells[i].vertices()) {
          bool shared = std::find(cells[j].vertices().begin(), cells[j].vertices().end(), v) !=
                        cells[j].vertices().end();
          if (shared && value_at(i, v) != value_at(j, v))
            throw ValidationError("element \"" + name + "\" disagrees on the shared face of cells " +
                                  std::to_string(i) + " and " + std::to_string(j) + " at vertex (" +
                                  vec_str(v) + ")");
        }
      }
    }
  }
}

}  // namespace

ProblemSpec parse_problem(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": JSON parse error: " + e.what());
  }

  ProblemSpec spec;
  try {
    spec.name = j.value("name", std::string{});
    if (!j.contains("ambient") || !j["ambient"].is_number_unsigned())
      throw ValidationError("missing or invalid \"ambient\" (the cube dimension n)");
    spec.n = j["ambient"].get<size_t>();
    if (spec.n < 1) throw ValidationError("\"ambient\" must be >= 1");
    size_t m = spec.n + 1;

    if (!j.contains("simplexes") || !j["simplexes"].is_array() || j["simplexes"].empty())
      throw ValidationError("missing or empty \"simplexes\" array");
    std::vector<Simplex> cells;
    for (const auto& jc : j["simplexes"]) {
      if (!jc.is_array() || jc.empty()) throw ValidationError("each simplex must be a nonempty vertex array");
      std::vector<RatVec> verts;
      for (const auto& jv : jc) verts.push_back(parse_vertex(jv, m));
      cells.emplace_back(std::move(verts));
    }
    spec.complex = PolytopalComplex(m, std::move(cells));

    std::vector<Diagnostic> diags = validate_cube_embedding(spec.complex);
    for (Diagnostic& d : validate_complex(spec.complex)) diags.push_back(std::move(d));
    if (!diags.empty()) {
      std::ostringstream os;
      os << origin << ": invalid complex:";
      for (const Diagnostic& d : diags) {
        os << "\n  - " << d.what;
        if (d.cell_a != SIZE_MAX) {
          os << " [cell " << d.cell_a;
          if (d.cell_b != SIZE_MAX) os << ", cell " << d.cell_b;
          os << "]";
        }
      }
      throw ValidationError(os.str());
    }

    if (j.contains("terms")) {
      if (!j["terms"].is_object()) throw ValidationError("\"terms\" must be a name -> string map");
      for (const auto& [name, text] : j["terms"].items()) {
        if (!text.is_string()) throw ValidationError("term \"" + name + "\" must be a string");
        spec.terms.emplace(name, parse_term(text.get<std::string>(), static_cast<int>(spec.n)));
      }
    }

    if (j.contains("elements")) {
      if (!j["elements"].is_object()) throw ValidationError("\"elements\" must be a map");
      for (const auto& [name, table] : j["elements"].items()) {
        if (spec.terms.count(name))
          throw ValidationError("element \"" + name + "\" collides with a term of the same name");
        if (!table.is_object()) throw ValidationError("element \"" + name + "\" must map cell ids to coefficient lists");
        PerSimplexForms forms;
        for (const auto& [idstr, coeffs] : table.items()) {
          size_t id = std::stoul(idstr);
          if (id >= spec.complex.size())
            throw ValidationError("element \"" + name + "\": cell id " + idstr + " out of range");
          if (!coeffs.is_array() || coeffs.size() != m)
            throw ValidationError("element \"" + name + "\": coefficient list must have length " +
                                  std::to_string(m));
          IntVec f;
          for (const auto& c : coeffs) {
            if (c.is_number_integer())
              f.push_back(Int(c.get<long long>()));
            else if (c.is_string())
              f.push_back(Int(c.get<std::string>()));
            else
              throw ValidationError("element \"" + name + "\": coefficients must be integers");
          }
          forms.emplace(id, std::move(f));
        }
        spec.elements.emplace(name, std::move(forms));
      }
      check_element_face_agreement(spec);
    }

    if (j.contains("units")) {
      if (!j["units"].is_array()) throw ValidationError("\"units\" must be an array of term names");
      for (const auto& u : j["units"]) {
        std::string name = u.get<std::string>();
        require_unit(spec.term(name), spec.complex);
        spec.units.push_back(name);
      }
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open problem file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file \"" + path + "\"");
  uint64_t hash = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  char out[17];
  snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(out);
}

}  // namespace unitstate
