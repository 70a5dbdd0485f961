// grs: command-line front end. Exit codes: 0 success or positive verdict,
// 1 negative verdict or domain error, 2 usage, input or parse error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grs/analysis.hpp"
#include "grs/io.hpp"
#include "grs/oracle.hpp"

using namespace grs;
using Json = nlohmann::ordered_json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

SystemDocument load(const std::string& path) { return parse_document(read_input(path)); }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << text;
}

Json vec_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

// Explicit root list of a document: the system itself, or a window.
FiniteRootSystem roots_of(const SystemDocument& d, std::optional<long> n) {
  if (d.finite) return *d.finite;
  if (!n) throw Usage("affine document: pass --window N");
  return window(*d.affine, *n);
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw Usage("bad index list \"" + s + "\"");
    }
  }
  return out;
}

const Vector& root_at(const FiniteRootSystem& r, std::size_t i) {
  if (i >= r.size()) throw Usage("root index " + std::to_string(i) + " out of range (" + std::to_string(r.size()) + " roots)");
  return r.root(i);
}

std::string report_text(const AxiomReport& r) {
  std::ostringstream o;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  o << "rs: " << yn(r.is_rs) << "\ngrs: " << yn(r.is_grs) << "\nweak_grs: " << yn(r.is_weak_grs)
    << "\nreduced: " << yn(r.is_reduced) << "\nirreducible: " << yn(r.is_irreducible) << "\n";
  for (const auto& v : r.violations) {
    o << "violation (" << v.axiom << "): " << v.detail;
    for (const auto& w : v.witness) o << " " << to_string(w);
    o << "\n";
  }
  return o.str();
}

Json report_json(const AxiomReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json w = Json::array();
    for (const auto& y : x.witness) w.push_back(vec_json(y));
    v.push_back(Json{{"axiom", x.axiom}, {"detail", x.detail}, {"witness", w}});
  }
  return Json{{"rs", r.is_rs},           {"grs", r.is_grs},
              {"weak_grs", r.is_weak_grs}, {"reduced", r.is_reduced},
              {"irreducible", r.is_irreducible}, {"violations", v}};
}

TypeTag classify_doc(const SystemDocument& d) {
  return d.finite ? classify_finite(*d.finite) : classify_affine(*d.affine);
}

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized and affine root systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "report format")->check(CLI::IsMember({"text", "json"}));

  std::string tag_name, out_path;
  TagOptions topt;
  std::string params, qs, ls;
  auto* cat = app.add_subcommand("catalog", "write the catalog system for a tag");
  cat->add_option("tag", tag_name, "tag or family word")->required();
  cat->add_option("--m", topt.m);
  cat->add_option("--n", topt.n);
  cat->add_option("--params", params, "m,n");
  cat->add_option("--q", qs, "p/q");
  cat->add_option("--lambda", ls, "p/q");
  cat->add_option("--twist", topt.twist);
  cat->add_option("-o,--output", out_path);

  std::string file, file_b;
  std::optional<long> win;
  auto* verify = app.add_subcommand("verify", "check the axioms");
  verify->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "type tag and Lie structure");
  classify->add_option("file", file)->required();

  std::string out_dir;
  auto* decompose_cmd = app.add_subcommand("decompose", "irreducible components");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--out", out_dir, "directory for component documents")->required();

  std::size_t alpha = 0, beta = 0;
  auto* reflect_cmd = app.add_subcommand("reflect", "reflect root beta in root alpha");
  reflect_cmd->add_option("file", file)->required();
  reflect_cmd->add_option("--alpha", alpha)->required();
  reflect_cmd->add_option("--beta", beta)->required();
  reflect_cmd->add_option("--window", win);

  auto* orbits_cmd = app.add_subcommand("orbits", "generalized Weyl group orbits");
  orbits_cmd->add_option("file", file)->required();
  orbits_cmd->add_option("--window", win);

  auto* parity_cmd = app.add_subcommand("parity", "parity functions");
  parity_cmd->add_option("file", file)->required();

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("a", file)->required();
  iso_cmd->add_option("b", file_b)->required();

  long wn = 0;
  auto* window_cmd = app.add_subcommand("window", "finite window |offset| <= N of an affine document");
  window_cmd->add_option("file", file)->required();
  window_cmd->add_option("--n", wn)->required();
  window_cmd->add_option("-o,--output", out_path);

  std::string roots_arg;
  auto* sub_cmd = app.add_subcommand("subsystem", "root subsystem test");
  sub_cmd->add_option("file", file)->required();
  sub_cmd->add_option("--roots", roots_arg, "comma-separated root indices")->required();
  sub_cmd->add_option("--window", win);

  std::string oracle_what;
  std::optional<long> oracle_n;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference checks");
  oracle_cmd->group("");
  oracle_cmd->add_option("check", oracle_what)->required()->check(CLI::IsMember({"axioms", "iso", "parity"}));
  oracle_cmd->add_option("a", file)->required();
  oracle_cmd->add_option("b", file_b);
  oracle_cmd->add_option("--n", oracle_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ostringstream out;
    int rc = 0;
    if (*cat) {
      if (!params.empty()) {
        auto ix = parse_indices(params);
        if (ix.size() != 2) throw Usage("--params expects m,n");
        topt.m = static_cast<int>(ix[0]);
        topt.n = static_cast<int>(ix[1]);
      }
      if (!qs.empty()) topt.q = parse_scalar(qs);
      if (!ls.empty()) topt.lambda = parse_scalar(ls);
      TypeTag t = resolve_tag(tag_name, topt);
      System s = catalog_make(t);
      std::map<std::string, std::string> meta{{"tag", to_string(t)}};
      auto doc = std::holds_alternative<FiniteRootSystem>(s) ? make_document(std::get<FiniteRootSystem>(s), meta)
                                                            : make_document(std::get<AffinePresentation>(s), meta);
      write_output(out_path, serialize(doc));
      return 0;
    }
    if (*verify) {
      auto d = load(file);
      AxiomReport r = d.finite ? check_axioms(*d.finite) : validate_agrs(*d.affine);
      out << (common.json() ? report_json(r).dump(2) + "\n" : report_text(r));
      rc = r.is_weak_grs ? 0 : 1;
    } else if (*classify) {
      auto d = load(file);
      TypeTag t = classify_doc(d);
      Correspondence c = correspondence(t);
      if (common.json())
        out << Json{{"tag", to_string(t)}, {"lie_structure", c.lie_structure}, {"class", c.notes}}.dump(2) << "\n";
      else
        out << to_string(t) << "\n" << c.notes << ": " << c.lie_structure << "\n";
    } else if (*decompose_cmd) {
      auto d = load(file);
      std::filesystem::create_directories(out_dir);
      std::vector<std::pair<std::string, SystemDocument>> parts;
      if (d.finite) {
        for (const auto& c : decompose(*d.finite)) parts.emplace_back(to_string(classify_finite(c.system)), make_document(c.system));
      } else {
        auto dec = decompose_agrs(*d.affine);
        for (const auto& c : dec.affine) parts.emplace_back(to_string(classify_affine(c.system)), make_document(c.system));
        for (const auto& c : dec.finite) parts.emplace_back(to_string(classify_finite(c.system)), make_document(c.system));
      }
      Json list = Json::array();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& [tag, doc] = parts[i];
        doc.metadata["tag"] = tag;
        std::string name = "component_" + std::to_string(i) + ".json";
        write_output((std::filesystem::path(out_dir) / name).string(), serialize(doc));
        list.push_back(Json{{"file", name}, {"tag", tag}});
        if (!common.json()) out << name << " " << tag << "\n";
      }
      if (common.json()) out << list.dump(2) << "\n";
    } else if (*reflect_cmd) {
      auto r = roots_of(load(file), win);
      Vector img = reflect(r, root_at(r, alpha), root_at(r, beta));
      out << (common.json() ? vec_json(img).dump() : to_string(img)) << "\n";
    } else if (*orbits_cmd) {
      auto r = roots_of(load(file), win);
      Json all = Json::array();
      for (const auto& o : weyl_orbits(r)) {
        Json a = Json::array();
        for (const auto& v : o) a.push_back(vec_json(v));
        all.push_back(a);
        if (!common.json()) {
          out << o.size() << ":";
          for (const auto& v : o) out << " " << to_string(v);
          out << "\n";
        }
      }
      if (common.json()) out << all.dump(2) << "\n";
    } else if (*parity_cmd) {
      auto d = load(file);
      ParityResult p = d.finite ? parity_functions(*d.finite) : parity_functions(*d.affine);
      auto bits = [](const std::vector<int>& f) {
        std::string s;
        for (int x : f) s += static_cast<char>('0' + x);
        return s;
      };
      Json fs = Json::array();
      for (const auto& f : p.functions) fs.push_back(bits(f));
      Json basis = Json::array();
      for (const auto& f : p.kernel_basis) basis.push_back(bits(f));
      if (common.json()) {
        Json roots = Json::array();
        for (const auto& v : p.roots) roots.push_back(vec_json(v));
        out << Json{{"roots", roots},
                    {"dimension", p.empty() ? -1 : static_cast<long>(p.count_log2())},
                    {"enumerated", p.enumerated},
                    {"functions", fs},
                    {"particular", p.empty() ? "" : bits(p.particular)},
                    {"kernel_basis", basis}}
                   .dump(2)
            << "\n";
      } else if (p.empty()) {
        out << "no parity function\n";
        rc = 1;
      } else {
        out << "roots:";
        for (const auto& v : p.roots) out << " " << to_string(v);
        out << "\nsolution space dimension: " << p.count_log2() << "\n";
        if (p.enumerated)
          for (const auto& f : p.functions) out << bits(f) << "\n";
        else
          out << "particular: " << bits(p.particular) << "\n";
      }
    } else if (*iso_cmd) {
      auto a = load(file), b = load(file_b);
      std::optional<Scalar> scale;
      std::optional<Matrix> m;
      if (a.finite && b.finite) {
        if (auto w = isomorphic(*a.finite, *b.finite)) scale = w->scale, m = w->matrix;
      } else if (a.affine && b.affine) {
        if (auto w = isomorphic_affine(*a.affine, *b.affine)) scale = w->scale, m = w->matrix;
      }
      if (common.json()) {
        Json j{{"isomorphic", scale.has_value()}};
        if (scale) {
          Json mj = Json::array();
          for (const auto& row : *m) mj.push_back(vec_json(row));
          j["scale"] = to_string(*scale);
          j["matrix"] = mj;
        }
        out << j.dump(2) << "\n";
      } else {
        out << (scale ? "isomorphic (scale " + to_string(*scale) + ")" : "not isomorphic") << "\n";
      }
      rc = scale ? 0 : 1;
    } else if (*window_cmd) {
      auto d = load(file);
      if (!d.affine) throw Usage("window needs an affine document");
      write_output(out_path, serialize(make_document(window(*d.affine, wn), {{"window", std::to_string(wn)}})));
      return 0;
    } else if (*sub_cmd) {
      auto d = load(file);
      std::vector<Vector> s;
      SubsystemResult res;
      if (d.finite) {
        for (auto i : parse_indices(roots_arg)) s.push_back(root_at(*d.finite, i));
        res = is_subsystem(s, *d.finite);
      } else {
        auto r = roots_of(d, win);
        for (auto i : parse_indices(roots_arg)) s.push_back(root_at(r, i));
        res = is_subsystem(s, *d.affine);
      }
      if (common.json()) {
        Json esc = Json::array();
        for (const auto& e : res.escapes)
          esc.push_back(Json{{"alpha", vec_json(e.alpha)}, {"beta", vec_json(e.beta)}, {"image", vec_json(e.image)}});
        out << Json{{"system", res.is_system}, {"label", res.label}, {"escapes", esc}}.dump(2) << "\n";
      } else {
        out << res.label << "\n";
        for (const auto& e : res.escapes)
          out << "escape: r_" << to_string(e.alpha) << "(" << to_string(e.beta) << ") = " << to_string(e.image) << "\n";
      }
      rc = res.is_system ? 0 : 1;
    } else if (*oracle_cmd) {
      if (oracle_what == "axioms") {
        auto d = load(file);
        std::optional<long> bound = d.affine ? std::optional<long>(oracle_n.value_or(6)) : std::nullopt;
        auto b = oracle::brute_axioms(roots_of(d, bound), bound);
        out << report_text(b.report) << "checked: " << b.checked << "\nskipped: " << b.skipped << "\n";
        rc = b.report.is_weak_grs ? 0 : 1;
      } else if (oracle_what == "iso") {
        if (file_b.empty()) throw Usage("oracle iso needs two files");
        auto a = load(file), b = load(file_b);
        if (!a.finite || !b.finite) throw Usage("oracle iso compares finite documents");
        auto w = oracle::brute_iso(*a.finite, *b.finite);
        out << (w ? "isomorphic (scale " + to_string(w->scale) + ")" : "not isomorphic") << "\n";
        rc = w ? 0 : 1;
      } else {
        auto d = load(file);
        if (!d.finite) throw Usage("oracle parity needs a finite document");
        out << oracle::brute_parity(*d.finite).size() << "\n";
      }
    }
    std::cout << out.str();
    return rc;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const AmbiguityError& e) {
    std::cerr << "ambiguity error: " << e.what() << "\n";
    return 1;
  } catch (const Unclassifiable& e) {
    std::cerr << "unclassifiable: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
