#include "hirsch/cli.hpp"

#include <regex>
#include <set>

namespace hirsch::cli {

namespace {

template <typename T>
const T& lookup(const std::vector<T>& items, const std::string& name, const char* kind) {
  for (const auto& x : items) {
    if (x.name == name) return x;
  }
  throw InputError(std::string("unknown ") + kind + " '" + name + "'");
}

// Line of the first `"name": "<name>"` in the document; 0 if not found.
int line_of(const std::string& text, const std::string& name) {
  static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
  const std::regex key("\"name\"\\s*:\\s*\"" + std::regex_replace(name, special, R"(\$&)") + "\"");
  std::smatch m;
  if (!std::regex_search(text, m, key)) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + m.position(0), '\n'));
}

class Loader {
 public:
  explicit Loader(const std::string& text) : text_(text) {}

  Workspace load();

 private:
  [[noreturn]] void fail(const std::string& kind, const std::string& name, const std::string& what) const {
    std::string where = kind + " '" + name + "'";
    if (const int l = line_of(text_, name); l > 0) where += " (line " + std::to_string(l) + ")";
    throw InputError(where + ": " + what);
  }

  void claim(const std::string& kind, const std::string& name) {
    if (name.empty()) throw InputError(kind + " without a name");
    if (!names_.insert(name).second) fail(kind, name, "duplicate name");
  }

  void load_cga(const Json& j);
  void load_dga(const Json& j);
  void load_twisting(const Json& j);
  void load_hom(const Json& j);
  void load_hypothesis(const Json& j);

  const std::string& text_;
  std::set<std::string> names_;
  Workspace w_;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw DomainError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Integer to_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) return Integer::parse(v.get<std::string>());
  throw DomainError("coefficient must be an integer");
}

Json from_integer(const Integer& c) {
  if (c.is_small()) return c.to_long();
  return c.to_string();
}

const Json& pairs(const Json& v) {
  if (!v.is_array()) throw DomainError("element must be a list of [coefficient, word] pairs");
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 2) throw DomainError("element terms are [coefficient, word] pairs");
  }
  return v;
}

DgaElement parse_dga_element(const BigradedDga& a, const Json& v) {
  DgaElement out = a.zero();
  for (const auto& t : pairs(v)) {
    if (!t[1].is_string()) throw DomainError("dga words are basis element names");
    const auto i = a.find(t[1].get<std::string>());
    if (!i) throw DomainError("unknown basis element '" + t[1].get<std::string>() + "'");
    out(*i) += to_integer(t[0]);
  }
  return out;
}

Json dump_dga_element(const BigradedDga& a, const DgaElement& x) {
  Json out = Json::array();
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) out.push_back(Json::array({from_integer(x(i)), a.basis(i).name}));
  }
  return out;
}

SparseVector to_sparse(const DgaElement& x) {
  SparseVector out;
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) out.emplace_back(i, x(i));
  }
  return out;
}

// Words are lists of letters: a generator name or {"cup1": [names]}.
MixedElement parse_mixed_element(const AlphabetPtr& alphabet, const Json& v) {
  MixedElement out(alphabet);
  for (const auto& t : pairs(v)) {
    if (!t[1].is_array()) throw DomainError("resolution words are lists of letters");
    Integer c = to_integer(t[0]);
    MixedWord w;
    bool vanishes = false;
    for (const auto& l : t[1]) {
      if (l.is_string()) {
        w.push_back(Cup1Monomial{{alphabet->id(l.get<std::string>())}});
        continue;
      }
      if (!l.is_object() || !l.contains("cup1") || !l["cup1"].is_array()) {
        throw DomainError("a letter is a generator name or {\"cup1\": [names]}");
      }
      std::vector<GeneratorId> ids;
      for (const auto& f : l["cup1"]) {
        if (!f.is_string()) throw DomainError("cup1 factors are generator names");
        ids.push_back(alphabet->id(f.get<std::string>()));
      }
      if (ids.empty()) throw DomainError("empty cup1 bundle");
      const auto norm = normalize_cup1(*alphabet, ids);
      if (!norm) {
        vanishes = true;
        break;
      }
      if (norm->sign < 0) c = -c;
      w.push_back(norm->monomial);
    }
    if (!vanishes) out.add_term(std::move(w), c);
  }
  return out;
}

Json dump_letter(const Alphabet& alphabet, const Cup1Monomial& m) {
  if (m.is_plain()) return alphabet[m.factors[0]].name;
  Json f = Json::array();
  for (auto g : m.factors) f.push_back(alphabet[g].name);
  return Json{{"cup1", f}};
}

Json dump_tensor_element(const TensorElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (auto g : w) word.push_back(x.alphabet()[g].name);
    out.push_back(Json::array({from_integer(c), word}));
  }
  return out;
}

Json dump_group(const FGAbelianGroup& g) { return g.to_string(); }

FGAbelianGroup parse_group(const Json& v) {
  if (!v.is_string()) throw DomainError("groups are strings like \"Z^2+Z/4\"");
  return FGAbelianGroup::parse(v.get<std::string>());
}

std::map<int, FGAbelianGroup> parse_degree_groups(const Json& v) {
  if (!v.is_object()) throw DomainError("cohomology maps degrees to groups");
  std::map<int, FGAbelianGroup> out;
  for (const auto& [k, g] : v.items()) {
    std::size_t used = 0;
    const int degree = std::stoi(k, &used);
    if (used != k.size()) throw DomainError("degree key '" + k + "' is not an integer");
    out[degree] = parse_group(g);
  }
  return out;
}

IntMatrix parse_matrix(const Json& v, Index rows, Index cols) {
  if (!v.is_array() || static_cast<Index>(v.size()) != rows) {
    throw DomainError("matrix needs " + std::to_string(rows) + " rows");
  }
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw DomainError("matrix rows need " + std::to_string(cols) + " entries");
    }
    for (Index j = 0; j < cols; ++j) m(i, j) = to_integer(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

Json dump_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(from_integer(m(i, j)));
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<int>> parse_simplices(const Json& v) {
  if (!v.is_array()) throw DomainError("simplices must be a list of vertex lists");
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.push_back(s.get<std::vector<int>>());
  return out;
}

Json dump_simplices(const SimplicialComplex& x) {
  // maximal simplices only
  Json out = Json::array();
  for (const auto& s : x.simplices) {
    bool maximal = true;
    for (const auto& t : x.simplices) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

void Loader::load_cga(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
  claim("cga", name);
  try {
    CgaPresentation p;
    for (const auto& g : field(j, "generators")) {
      p.generators.push_back({string_field(g, "name"), int_field(g, "degree")});
    }
    if (j.contains("m") && !j["m"].is_null()) p.m = int_field(j, "m");
    const auto v = validate_presentation(p);
    if (!v.passed) {
      std::string msg;
      for (const auto& s : v.violations) msg += (msg.empty() ? "" : "; ") + s;
      throw DomainError(msg);
    }
    w_.cgas.push_back({name, std::move(p)});
  } catch (const nlohmann::json::exception& e) {
    fail("cga", name, e.what());
  } catch (const DomainError& e) {
    fail("cga", name, e.what());
  }
}

void Loader::load_dga(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
  claim("dga", name);
  try {
    DgaEntry e;
    e.name = name;
    e.kind = j.contains("kind") ? string_field(j, "kind") : "table";
    e.description = Json{{"name", name}, {"kind", e.kind}};
    std::size_t triple_budget = 200000;
    if (e.kind == "table") {
      std::vector<BasisElement> basis;
      for (const auto& b : field(j, "basis")) {
        const auto deg = field(b, "bidegree").get<std::vector<int>>();
        if (deg.size() != 2) throw DomainError("bidegree must be [perturbation, internal]");
        basis.push_back({string_field(b, "name"), {deg[0], deg[1]}});
      }
      std::set<std::string> seen;
      for (const auto& b : basis) {
        if (!seen.insert(b.name).second) throw DomainError("repeated basis element '" + b.name + "'");
      }
      // a bare basis to resolve names
      const TableDga names(basis, {}, {}, DgaElement::Constant(static_cast<Index>(basis.size()), Integer(0)));
      std::map<Index, SparseVector> d;
      if (j.contains("d")) {
        for (const auto& [k, v] : j["d"].items()) {
          const auto i = names.find(k);
          if (!i) throw DomainError("d of unknown basis element '" + k + "'");
          d[*i] = to_sparse(parse_dga_element(names, v));
        }
      }
      std::map<std::pair<Index, Index>, SparseVector> products;
      if (j.contains("products")) {
        for (const auto& p : j["products"]) {
          const auto l = names.find(string_field(p, "left"));
          const auto r = names.find(string_field(p, "right"));
          if (!l || !r) throw DomainError("product of unknown basis elements");
          auto& slot = products[{*l, *r}];
          const auto sum = parse_dga_element(names, field(p, "value"));
          DgaElement prev = names.zero();
          for (const auto& [i, c] : slot) prev(i) += c;
          slot = to_sparse(prev + sum);
        }
      }
      const DgaElement unit = parse_dga_element(names, field(j, "unit"));
      e.dga = std::make_shared<TableDga>(basis, d, products, unit);
      Json jb = Json::array();
      for (const auto& b : basis) jb.push_back({{"name", b.name}, {"bidegree", {b.degree.first, b.degree.second}}});
      e.description["basis"] = jb;
      e.description["unit"] = dump_dga_element(*e.dga, e.dga->unit());
      Json jd = Json::object();
      for (const auto& [i, v] : d) {
        if (!v.empty()) jd[basis[static_cast<std::size_t>(i)].name] = dump_dga_element(*e.dga, e.dga->d(e.dga->basis_vector(i)));
      }
      e.description["d"] = jd;
      Json jp = Json::array();
      for (const auto& [k, v] : products) {
        if (v.empty()) continue;
        DgaElement x = e.dga->zero();
        for (const auto& [i, c] : v) x(i) += c;
        jp.push_back({{"left", basis[static_cast<std::size_t>(k.first)].name},
                      {"right", basis[static_cast<std::size_t>(k.second)].name},
                      {"value", dump_dga_element(*e.dga, x)}});
      }
      e.description["products"] = jp;
    } else if (e.kind == "cochains" || e.kind == "d-x") {
      const auto x = SimplicialComplex::generated_by(parse_simplices(field(j, "simplices")));
      e.description["simplices"] = dump_simplices(x);
      if (e.kind == "cochains") {
        e.dga = std::make_shared<CochainDga>(x);
      } else {
        std::vector<FGAbelianGroup> groups;
        Json jg = Json::array();
        for (const auto& g : field(j, "groups")) {
          groups.push_back(parse_group(g));
          jg.push_back(dump_group(groups.back()));
        }
        e.description["groups"] = jg;
        e.dga = build_DX(x, groups);
        triple_budget = 20000;
      }
    } else if (e.kind == "tensor") {
      const std::string l = string_field(j, "left"), r = string_field(j, "right");
      DgaPtr left, right;
      for (const auto& d : w_.dgas) {
        if (d.name == l) left = d.dga;
        if (d.name == r) right = d.dga;
      }
      if (!left || !right) throw DomainError("tensor factors must be dgas listed earlier");
      e.dga = tensor_dga(left, right);
      e.description["left"] = l;
      e.description["right"] = r;
    } else {
      throw DomainError("unknown dga kind '" + e.kind + "' (table, cochains, tensor, d-x)");
    }
    const auto check = check_dga(*e.dga, triple_budget);
    if (!check.passed) throw DomainError("not a dga: " + check.failure);
    w_.dgas.push_back(std::move(e));
  } catch (const nlohmann::json::exception& e) {
    fail("dga", name, e.what());
  } catch (const DomainError& e) {
    fail("dga", name, e.what());
  }
}

void Loader::load_twisting(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
  claim("twisting", name);
  try {
    TwistingEntry t;
    t.name = name;
    t.dga = string_field(j, "dga");
    t.role = j.contains("role") ? string_field(j, "role") : "twisting";
    t.truncation = int_field(j, "truncation");
    if (t.truncation < 2) throw DomainError("truncation must be at least 2");
    const auto& a = *w_.dga(t.dga).dga;
    t.value = parse_dga_element(a, field(j, "value"));
    if (t.role == "gauge") {
      check_gauge_shape(a, GaugeElement{t.truncation, t.value});
    } else if (t.role == "twisting" || t.role == "candidate") {
      const TwistingElement x{t.truncation, t.value};
      check_twisting_shape(a, x);
      if (t.role == "twisting") {
        const auto rep = is_twisting(a, x);
        if (!rep.passed) throw DomainError("not a twisting element: " + rep.message);
      }
    } else {
      throw DomainError("role must be twisting, candidate or gauge");
    }
    w_.twistings.push_back(std::move(t));
  } catch (const nlohmann::json::exception& e) {
    fail("twisting", name, e.what());
  } catch (const InputError& e) {
    fail("twisting", name, e.what());
  } catch (const DomainError& e) {
    fail("twisting", name, e.what());
  }
}

void Loader::load_hom(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
  claim("hom", name);
  try {
    HomEntry h;
    h.name = name;
    h.source = string_field(j, "source");
    h.target = string_field(j, "target");
    h.range = int_field(j, "range");
    const auto src = std::make_shared<const Resolution>(build_resolution(w_.cga(h.source).presentation, h.range));
    const auto tgt = std::make_shared<const Resolution>(build_resolution(w_.cga(h.target).presentation, h.range));
    if (j.contains("images")) {
      for (const auto& [g, v] : j["images"].items()) {
        if (!src->alphabet()->find(g)) throw DomainError("image of unknown generator '" + g + "'");
        const auto x = to_tensor(parse_mixed_element(tgt->alphabet(), v));
        if (!x.is_zero()) h.images.emplace(g, x);
      }
    }
    (void)build_rh_map(h.images, src, tgt);
    w_.homs.push_back(std::move(h));
  } catch (const nlohmann::json::exception& e) {
    fail("hom", name, e.what());
  } catch (const InputError& e) {
    fail("hom", name, e.what());
  } catch (const DomainError& e) {
    fail("hom", name, e.what());
  }
}

void Loader::load_hypothesis(const Json& j) {
  const std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
  claim("hypotheses", name);
  try {
    HypothesisEntry h;
    h.name = name;
    const auto cohomology = j.contains("cohomology") ? parse_degree_groups(j["cohomology"])
                                                     : std::map<int, FGAbelianGroup>{};
    if (j.contains("unitary")) {
      h.unitary = int_field(j, "unitary");
      h.instance = unitary_instance(*h.unitary, cohomology);
    } else {
      h.instance.m = int_field(j, "m");
      if (h.instance.m < 1) throw DomainError("m must be at least 1");
      h.instance.cohomology = cohomology;
      if (j.contains("hurewicz")) {
        for (const auto& [k, v] : j["hurewicz"].items()) {
          const int degree = std::stoi(k);
          GroupHom u{parse_group(field(v, "source")), parse_group(field(v, "target")), {}};
          u.matrix = parse_matrix(field(v, "matrix"), u.target.generator_count(), u.source.generator_count());
          u.validate();
          h.instance.hurewicz.emplace(degree, std::move(u));
        }
      }
    }
    w_.hypotheses.push_back(std::move(h));
  } catch (const nlohmann::json::exception& e) {
    fail("hypotheses", name, e.what());
  } catch (const std::invalid_argument& e) {
    fail("hypotheses", name, "degree keys must be integers");
  } catch (const DomainError& e) {
    fail("hypotheses", name, e.what());
  }
}

Workspace Loader::load() {
  Json doc;
  try {
    doc = Json::parse(text_);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line and column
    const std::size_t at = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text_.size());
    const auto line = 1 + std::count(text_.begin(), text_.begin() + static_cast<long>(at), '\n');
    const auto nl = text_.rfind('\n', at == 0 ? 0 : at - 1);
    const std::size_t col = (nl == std::string::npos || at == 0) ? at + 1 : at - nl;
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be an object");
  static const std::set<std::string> known{"cgas", "dgas", "twistings", "homs", "hypotheses"};
  for (const auto& [k, v] : doc.items()) {
    if (!known.count(k)) throw InputError("unknown top-level key '" + k + "'");
    if (!v.is_array()) throw InputError("'" + k + "' must be a list");
  }
  auto each = [&](const char* key, auto&& fn) {
    if (!doc.contains(key)) return;
    for (const auto& item : doc[key]) {
      if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
        throw InputError(std::string("every entry of '") + key + "' needs a string name");
      }
      fn(item);
    }
  };
  each("cgas", [&](const Json& j) { load_cga(j); });
  each("dgas", [&](const Json& j) { load_dga(j); });
  each("twistings", [&](const Json& j) { load_twisting(j); });
  each("homs", [&](const Json& j) { load_hom(j); });
  each("hypotheses", [&](const Json& j) { load_hypothesis(j); });
  return std::move(w_);
}

}  // namespace

const CgaEntry& Workspace::cga(const std::string& name) const { return lookup(cgas, name, "cga"); }
const DgaEntry& Workspace::dga(const std::string& name) const { return lookup(dgas, name, "dga"); }
const TwistingEntry& Workspace::twisting(const std::string& name) const {
  return lookup(twistings, name, "twisting element");
}
const HomEntry& Workspace::hom(const std::string& name) const { return lookup(homs, name, "hom"); }
const HypothesisEntry& Workspace::hypothesis(const std::string& name) const {
  return lookup(hypotheses, name, "hypotheses instance");
}

Workspace parse_input(const std::string& text) { return Loader(text).load(); }

Json serialize(const Workspace& w) {
  Json doc = Json::object();
  Json cgas = Json::array();
  for (const auto& c : w.cgas) {
    Json gens = Json::array();
    for (const auto& g : c.presentation.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json e{{"name", c.name}, {"generators", gens}};
    e["m"] = c.presentation.m ? Json(*c.presentation.m) : Json(nullptr);
    cgas.push_back(e);
  }
  doc["cgas"] = cgas;
  Json dgas = Json::array();
  for (const auto& d : w.dgas) dgas.push_back(d.description);
  doc["dgas"] = dgas;
  Json tw = Json::array();
  for (const auto& t : w.twistings) {
    tw.push_back({{"name", t.name},
                  {"dga", t.dga},
                  {"role", t.role},
                  {"truncation", t.truncation},
                  {"value", dump_dga_element(*w.dga(t.dga).dga, t.value)}});
  }
  doc["twistings"] = tw;
  Json homs = Json::array();
  for (const auto& h : w.homs) {
    Json images = Json::object();
    for (const auto& [g, x] : h.images) images[g] = dump_tensor_element(x);
    homs.push_back({{"name", h.name}, {"source", h.source}, {"target", h.target}, {"range", h.range}, {"images", images}});
  }
  doc["homs"] = homs;
  Json hyp = Json::array();
  for (const auto& h : w.hypotheses) {
    Json e{{"name", h.name}};
    if (h.unitary) {
      e["unitary"] = *h.unitary;
    } else {
      e["m"] = h.instance.m;
    }
    Json co = Json::object();
    for (const auto& [k, g] : h.instance.cohomology) co[std::to_string(k)] = dump_group(g);
    e["cohomology"] = co;
    if (!h.unitary) {
      Json hu = Json::object();
      for (const auto& [k, u] : h.instance.hurewicz) {
        hu[std::to_string(k)] = {{"source", dump_group(u.source)}, {"target", dump_group(u.target)},
                                 {"matrix", dump_matrix(u.matrix)}};
      }
      e["hurewicz"] = hu;
    }
    hyp.push_back(e);
  }
  doc["hypotheses"] = hyp;
  return doc;
}

// shared with the command layer
Json element_json(const BigradedDga& a, const DgaElement& x) { return dump_dga_element(a, x); }
Json mixed_json(const MixedElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (const auto& l : w) word.push_back(dump_letter(x.alphabet(), l));
    out.push_back(Json::array({from_integer(c), word}));
  }
  return out;
}
Json integer_json(const Integer& c) { return from_integer(c); }

}  // namespace hirsch::cli
