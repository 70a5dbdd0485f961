#include "grs/io.hpp"

#include <json.hpp>

namespace grs {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw ParseError((ptr.empty() ? "/" : ptr) + ": " + what);
}

Scalar rational_at(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(ptr, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const InvalidInput&) {
    fail(ptr, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Vector vector_at(const Json& j, const std::string& ptr, std::size_t dim) {
  if (!j.is_array()) fail(ptr, "expected an array");
  if (j.size() != dim) fail(ptr, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_at(j[i], ptr + "/" + std::to_string(i)));
  return v;
}

const Json& field(const Json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

Json rational_json(const Scalar& x) { return to_string(x); }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json space_json(const FormSpace& s) {
  Json g = Json::array();
  for (const auto& row : s.gram) g.push_back(vector_json(row));
  return Json{{"dim", s.dim()}, {"basis_labels", s.labels}, {"gram", g}};
}

FormSpace space_at(const Json& j) {
  const Json& dj = field(j, "/space", "dim");
  if (!dj.is_number_unsigned()) fail("/space/dim", "expected a nonnegative integer");
  const std::size_t d = dj.get<std::size_t>();
  FormSpace s;
  const Json& lj = field(j, "/space", "basis_labels");
  if (!lj.is_array() || lj.size() != d) fail("/space/basis_labels", "expected " + std::to_string(d) + " labels");
  for (std::size_t i = 0; i < d; ++i) {
    if (!lj[i].is_string()) fail("/space/basis_labels/" + std::to_string(i), "expected a string");
    s.labels.push_back(lj[i].get<std::string>());
  }
  const Json& gj = field(j, "/space", "gram");
  if (!gj.is_array() || gj.size() != d) fail("/space/gram", "expected " + std::to_string(d) + " rows");
  for (std::size_t i = 0; i < d; ++i) s.gram.push_back(vector_at(gj[i], "/space/gram/" + std::to_string(i), d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i + 1; k < d; ++k)
      if (s.gram[i][k] != s.gram[k][i])
        fail("/space/gram/" + std::to_string(i) + "/" + std::to_string(k), "gram matrix is not symmetric");
  return s;
}

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Two-space indentation, with arrays of scalars kept on one line.
void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  auto flat = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_array() && (j.empty() || flat(j))) {
    out += j.dump();
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + Json(k).dump() + ": ";
      dump(v, out, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

SystemDocument make_document(const FiniteRootSystem& r, std::map<std::string, std::string> metadata) {
  return {"finite", r, std::nullopt, std::move(metadata)};
}

SystemDocument make_document(const AffinePresentation& p, std::map<std::string, std::string> metadata) {
  return {"affine", std::nullopt, p, std::move(metadata)};
}

SystemDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("syntax error at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) fail("", "document must be an object");
  const Json& vj = field(j, "", "format_version");
  if (!vj.is_string() || vj.get<std::string>() != kFormatVersion)
    fail("/format_version", std::string("unsupported format version (expected \"") + kFormatVersion + "\")");
  const Json& kj = field(j, "", "kind");
  if (!kj.is_string()) fail("/kind", "expected a string");
  SystemDocument doc;
  doc.kind = kj.get<std::string>();
  FormSpace space = space_at(field(j, "", "space"));
  const std::size_t d = space.dim();
  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) fail("/metadata", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) fail("/metadata/" + k, "expected a string");
      doc.metadata[k] = v.get<std::string>();
    }
  }
  if (doc.kind == "finite") {
    const Json& rj = field(j, "", "roots");
    if (!rj.is_array()) fail("/roots", "expected an array");
    std::vector<Vector> roots;
    std::map<Vector, std::size_t> seen;
    for (std::size_t i = 0; i < rj.size(); ++i) {
      const std::string ptr = "/roots/" + std::to_string(i);
      Vector v = vector_at(rj[i], ptr, d);
      if (auto [it, fresh] = seen.emplace(v, i); !fresh)
        fail(ptr, "duplicate of /roots/" + std::to_string(it->second));
      roots.push_back(v);
    }
    doc.finite = FiniteRootSystem(space, roots);
  } else if (doc.kind == "affine") {
    const Json& fj = field(j, "", "fibers");
    if (!fj.is_array()) fail("/fibers", "expected an array");
    std::vector<Vector> classes;
    std::vector<Fiber> fibers;
    std::map<Vector, std::size_t> seen;
    for (std::size_t i = 0; i < fj.size(); ++i) {
      const std::string ptr = "/fibers/" + std::to_string(i);
      Vector c = vector_at(field(fj[i], ptr, "class"), ptr + "/class", d);
      if (auto [it, fresh] = seen.emplace(c, i); !fresh)
        fail(ptr + "/class", "duplicate of /fibers/" + std::to_string(it->second));
      const Json& sj = field(fj[i], ptr, "step");
      if (!sj.is_number_integer() || sj.get<long>() < 0) fail(ptr + "/step", "expected a nonnegative integer");
      const Json& resj = field(fj[i], ptr, "residues");
      if (!resj.is_array() || resj.empty()) fail(ptr + "/residues", "expected a nonempty array");
      std::vector<Scalar> res;
      for (std::size_t k = 0; k < resj.size(); ++k)
        res.push_back(rational_at(resj[k], ptr + "/residues/" + std::to_string(k)));
      classes.push_back(c);
      fibers.push_back({c, sj.get<long>(), res});
    }
    std::string label = "delta";
    if (auto it = j.find("delta_label"); it != j.end()) {
      if (!it->is_string()) fail("/delta_label", "expected a string");
      label = it->get<std::string>();
    }
    try {
      doc.affine = AffinePresentation(FiniteRootSystem(space, classes), fibers, label);
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      fail("/fibers", e.what());
    }
  } else {
    fail("/kind", "expected \"finite\" or \"affine\"");
  }
  return doc;
}

std::string serialize(const SystemDocument& doc) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = doc.kind;
  if (doc.kind == "finite") {
    const FiniteRootSystem& r = doc.finite.value();
    j["space"] = space_json(r.space());
    Json roots = Json::array();
    for (const auto& v : r.roots()) roots.push_back(vector_json(v));
    j["roots"] = roots;
  } else {
    const AffinePresentation& p = doc.affine.value();
    j["space"] = space_json(p.base().space());
    j["delta_label"] = p.delta_label();
    Json fibers = Json::array();
    for (const auto& f : p.fibers()) {
      Json res = Json::array();
      for (const auto& r : f.residues) res.push_back(rational_json(r));
      fibers.push_back(Json{{"class", vector_json(f.base_class)}, {"step", f.step}, {"residues", res}});
    }
    j["fibers"] = fibers;
  }
  if (!doc.metadata.empty()) {
    Json m = Json::object();
    for (const auto& [k, v] : doc.metadata) m[k] = v;
    j["metadata"] = m;
  }
  std::string out;
  dump(j, out, 0);
  return out + "\n";
}

}  // namespace grs
