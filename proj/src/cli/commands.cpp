#include "hirsch/cli.hpp"
#include "hirsch/homology.hpp"
#include "hirsch/permutohedron.hpp"

#include <functional>
#include <sstream>

namespace hirsch::cli {

Json element_json(const BigradedDga& a, const DgaElement& x);
Json mixed_json(const MixedElement& x);
Json integer_json(const Integer& c);

namespace {

template <typename T>
const T& pick(const std::vector<T>& items, const std::optional<std::string>& name, const char* flag,
              const char* kind, std::function<bool(const T&)> eligible = {}) {
  if (name) {
    for (const auto& x : items) {
      if (x.name == *name) return x;
    }
    throw InputError(std::string("unknown ") + kind + " '" + *name + "'");
  }
  const T* only = nullptr;
  std::size_t count = 0;
  for (const auto& x : items) {
    if (eligible && !eligible(x)) continue;
    only = &x;
    ++count;
  }
  if (count != 1) throw InputError(std::string("--") + flag + " must name a " + kind);
  return *only;
}

Json head(const std::string& command, Json parameters) {
  return Json{{"command", command}, {"parameters", std::move(parameters)}, {"verdict", ""}};
}

std::string verdict_word(bool passed) { return passed ? "pass" : "fail"; }

std::string face_boundary_text(const std::vector<SignedFace>& terms) {
  std::string out;
  for (const auto& [c, f] : terms) {
    if (!out.empty()) out += " ";
    out += (c.sign() < 0 ? "-" : "+");
    if (abs(c) != Integer(1)) out += abs(c).to_string() + " ";
    out += f.to_string();
  }
  return out;
}

Report permutohedron(const Options& o) {
  if (!o.n) throw InputError("permutohedron needs --n");
  const int n = *o.n;
  Report r;
  r.document = head("permutohedron", {{"n", n}});
  const auto faces = enumerate_faces(n);
  const auto letters = standard_letters(n);
  Json fv = Json::array();
  for (const auto& g : faces) fv.push_back(g.size());
  Json cells = Json::array();
  for (std::size_t k = faces.size(); k-- > 0;) {
    for (const auto& f : faces[k]) {
      cells.push_back({{"dim", k},
                       {"face", f.to_string()},
                       {"label", monomial_of_face(f, letters).to_string()},
                       {"boundary", k > 0 ? face_boundary_text(face_boundary(f)) : ""}});
    }
  }
  // transported boundary of the top cell against the cup-1 boundary formula
  Cup1Monomial top;
  for (int i = 0; i < n; ++i) top.factors.push_back(static_cast<GeneratorId>(i));
  const auto direct = cup1_boundary(top, Derivation(letters, {}));
  MixedElement transported(letters);
  if (n > 1) {
    for (const auto& [c, f] : face_boundary(faces.back().front())) transported.add(monomial_of_face(f, letters), c);
  }
  const bool agree = direct == transported;
  const auto cx = permutohedron_complex(n);
  check_boundary_squares(cx);
  Json hom = Json::array();
  bool contractible = true;
  const auto h = homology(cx);
  for (std::size_t k = 0; k < h.size(); ++k) {
    hom.push_back(h[k].to_string());
    contractible = contractible && h[k] == (k == 0 ? FGAbelianGroup::free(1) : FGAbelianGroup());
  }
  r.document["f_vector"] = fv;
  r.document["cells"] = cells;
  r.document["cup1_boundary"] = direct.to_string();
  r.document["boundary_matches_cup1"] = agree;
  r.document["homology"] = hom;
  const bool ok = agree && contractible;
  r.document["verdict"] = ok ? "computed" : "fail";
  r.outcome = ok ? Outcome::computed : Outcome::failed;
  return r;
}

std::shared_ptr<const Resolution> resolution_for(const Workspace& w, const Options& o, Json& params) {
  const auto& c = pick(w.cgas, o.cga, "cga", "cga");
  params["cga"] = c.name;
  std::optional<int> range = o.m ? o.m : o.truncation;
  if (range) params["m"] = *range;
  return std::make_shared<const Resolution>(build_resolution(c.presentation, range));
}

Json generator_table(const Resolution& res) {
  Json gens = Json::array();
  for (const auto& g : res.generators()) {
    gens.push_back({{"generator", format_letter(*res.alphabet(), g, false)},
                    {"bidegree", to_string(letter_bidegree(*res.alphabet(), g))},
                    {"d", res.image(g).to_string()}});
  }
  return gens;
}

Report resolve(const Workspace& w, const Options& o) {
  Json params = Json::object();
  const auto res = resolution_for(w, o, params);
  Report r;
  r.document = head("resolve", params);
  r.document["range"] = res->range();
  r.document["generators"] = generator_table(*res);
  const auto sq = check_d_squared(*res);
  r.document["d_squared_zero"] = sq.passed;
  if (!sq.passed) {
    r.document["failing_generator"] = format_letter(*res->alphabet(), *sq.failing_generator, false);
    r.document["witness"] = sq.witness->to_string();
  }
  r.document["verdict"] = sq.passed ? "computed" : "fail";
  r.outcome = sq.passed ? Outcome::computed : Outcome::failed;
  return r;
}

Report certify(const Workspace& w, const Options& o) {
  Json params = Json::object();
  const auto res = resolution_for(w, o, params);
  Report r;
  r.document = head("certify", params);
  r.document["range"] = res->range();
  const auto sq = check_d_squared(*res);
  r.document["d_squared_zero"] = sq.passed;
  bool ok = sq.passed;
  if (!sq.passed) {
    r.document["failing_generator"] = format_letter(*res->alphabet(), *sq.failing_generator, false);
  } else {
    const auto cert = certify_resolution(*res);
    Json degrees = Json::array();
    for (const auto& d : cert.degrees) {
      degrees.push_back({{"total_degree", d.total_degree},
                         {"positions", d.positions},
                         {"max_rank", d.max_rank},
                         {"exact", d.passed}});
    }
    r.document["degrees"] = degrees;
    if (!cert.passed) r.document["failure"] = cert.failure;
    ok = cert.passed;
  }
  r.document["verdict"] = verdict_word(ok);
  r.outcome = ok ? Outcome::computed : Outcome::failed;
  return r;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Report boundary(const Workspace& w, const Options& o) {
  Report r;
  MixedElement d(standard_letters(1));
  std::string label;
  if (o.n) {
    const int n = *o.n;
    r.document = head("boundary", {{"n", n}});
    if (n < 2 || n > kMaxPermutohedron) throw InputError("boundary --n needs 2 <= n <= 7");
    const auto letters = standard_letters(n);
    Cup1Monomial top;
    for (int i = 0; i < n; ++i) top.factors.push_back(static_cast<GeneratorId>(i));
    label = format_letter(*letters, top, false);
    d = cup1_boundary(top, Derivation(letters, {}));
    // each term names a facet of P_n
    Json facets = Json::array();
    for (const auto& [word, c] : d.terms()) facets.push_back(face_of_monomial(word, *letters).to_string());
    r.document["facets"] = facets;
    r.document["expected_terms"] = (1 << n) - 2;
  } else {
    if (!o.bundle) throw InputError("boundary needs --n or --bundle with --cga");
    Json params = Json::object();
    const auto res = resolution_for(w, o, params);
    params["bundle"] = *o.bundle;
    r.document = head("boundary", params);
    std::vector<GeneratorId> ids;
    for (const auto& s : split_names(*o.bundle)) ids.push_back(res->alphabet()->id(s));
    const auto norm = normalize_cup1(*res->alphabet(), ids);
    if (!norm) {
      label = "0";
      d = MixedElement(res->alphabet());
    } else {
      if (!res->has_generator(norm->monomial)) throw InputError("bundle outside the resolution range");
      label = (norm->sign < 0 ? "-" : "") + format_letter(*res->alphabet(), norm->monomial, false);
      d = Integer(norm->sign) * res->image(norm->monomial);
    }
  }
  r.document["bundle"] = label;
  r.document["terms"] = d.size();
  r.document["boundary"] = d.to_string();
  r.document["element"] = mixed_json(d);
  r.document["verdict"] = "computed";
  return r;
}

Report rh_map(const Workspace& w, const Options& o) {
  const auto& h = pick(w.homs, o.hom, "hom", "hom");
  Report r;
  r.document = head("rh-map", {{"hom", h.name}, {"range", h.range}});
  const auto src = std::make_shared<const Resolution>(build_resolution(w.cga(h.source).presentation, h.range));
  const auto tgt = std::make_shared<const Resolution>(build_resolution(w.cga(h.target).presentation, h.range));
  const auto f = build_rh_map(h.images, src, tgt);
  Json table = Json::array();
  bool zero = true;
  for (const auto& g : src->generators()) {
    const auto& im = f.image(g);
    zero = zero && im.is_zero();
    table.push_back({{"generator", format_letter(*src->alphabet(), g, false)}, {"image", im.to_string()}});
  }
  const auto defect = chain_map_defect(f);
  r.document["images"] = table;
  r.document["chain_map"] = !defect.has_value();
  r.document["zero_map"] = zero;
  r.document["verdict"] = defect ? "fail" : "computed";
  r.outcome = defect ? Outcome::failed : Outcome::computed;
  return r;
}

Json components(const BigradedDga& a, const DgaElement& x, int from, int to) {
  Json out = Json::array();
  for (int k = from; k <= to; ++k) {
    out.push_back({{"degree", k}, {"component", a.format(a.perturbation_part(x, k))}});
  }
  return out;
}

Json twisting_json(const std::string& name, const std::string& dga, const std::string& role, int n,
                   const BigradedDga& a, const DgaElement& x) {
  return {{"name", name}, {"dga", dga}, {"role", role}, {"truncation", n}, {"value", element_json(a, x)}};
}

Report twisting_check(const Workspace& w, const Options& o) {
  const auto& t = pick<TwistingEntry>(w.twistings, o.a, "a", "twisting element",
                                      [](const TwistingEntry& e) { return e.role != "gauge"; });
  if (t.role == "gauge") throw InputError("'" + t.name + "' is a gauge element");
  const auto& a = *w.dga(t.dga).dga;
  Report r;
  r.document = head("twisting-check", {{"a", t.name}, {"truncation", t.truncation}});
  const auto rep = is_twisting(a, {t.truncation, t.value});
  r.document["components"] = components(a, t.value, 2, t.truncation);
  if (!rep.passed) {
    r.document["failed_level"] = rep.failed_level;
    r.document["message"] = rep.message;
  }
  r.document["verdict"] = verdict_word(rep.passed);
  r.outcome = rep.passed ? Outcome::computed : Outcome::failed;
  return r;
}

const TwistingEntry& twisting_arg(const Workspace& w, const std::optional<std::string>& name, const char* flag) {
  if (!name) throw InputError(std::string("missing --") + flag);
  const auto& t = w.twisting(*name);
  if (t.role != "twisting") throw InputError("'" + t.name + "' is not a validated twisting element");
  return t;
}

Report gauge(const Workspace& w, const Options& o) {
  const auto& x = twisting_arg(w, o.a, "a");
  const auto& y = twisting_arg(w, o.b, "b");
  if (x.dga != y.dga) throw InputError("twisting elements live in different dgas");
  if (x.truncation != y.truncation) throw InputError("twisting elements have different truncations");
  const auto& a = *w.dga(x.dga).dga;
  Report r;
  r.document = head("gauge", {{"a", x.name}, {"b", y.name}, {"truncation", x.truncation}, {"budget", o.budget}});
  const auto res = gauge_equivalent(a, {x.truncation, x.value}, {y.truncation, y.value}, o.budget);
  r.document["verdict"] = to_string(res.verdict);
  r.document["level"] = res.level;
  r.document["box"] = res.box;
  r.document["nodes"] = res.nodes;
  if (!res.certificate.empty()) r.document["certificate"] = res.certificate;
  if (res.witness) {
    r.document["witness"] = a.format(res.witness->p_prime);
    r.document["gauge"] = twisting_json(x.name + "~" + y.name, x.dga, "gauge", x.truncation, a, res.witness->p_prime);
  }
  switch (res.verdict) {
    case GaugeVerdict::equivalent: r.outcome = Outcome::computed; break;
    case GaugeVerdict::refuted: r.outcome = Outcome::failed; break;
    case GaugeVerdict::inconclusive: r.outcome = Outcome::inconclusive; break;
  }
  return r;
}

Report orbit(const Workspace& w, const Options& o) {
  const auto& x = twisting_arg(w, o.a, "a");
  if (!o.p) throw InputError("orbit needs --p naming a gauge element");
  const auto& p = w.twisting(*o.p);
  if (p.role != "gauge") throw InputError("'" + p.name + "' is not a gauge element");
  if (p.dga != x.dga || p.truncation != x.truncation) throw InputError("gauge element does not match --a");
  const auto& a = *w.dga(x.dga).dga;
  Report r;
  r.document = head("orbit", {{"a", x.name}, {"p", p.name}, {"truncation", x.truncation}});
  const GaugeElement g{p.truncation, p.value};
  const auto y = gauge_act(a, {x.truncation, x.value}, g);
  const bool twisting = is_twisting(a, y).passed;
  const bool relation = orbit_relation_holds(a, {x.truncation, x.value}, y, g);
  r.document["p_inverse"] = a.format(gauge_inverse(a, g));
  r.document["components"] = components(a, y.value, 2, y.truncation);
  r.document["is_twisting"] = twisting;
  r.document["orbit_relation"] = relation;
  r.document["twisting"] = twisting_json(x.name + "*" + p.name, x.dga, "twisting", y.truncation, a, y.value);
  const bool ok = twisting && relation;
  r.document["verdict"] = ok ? "computed" : "fail";
  r.outcome = ok ? Outcome::computed : Outcome::failed;
  return r;
}

Report tor_command(const Options& o) {
  if (!o.a || !o.b) throw InputError("tor needs --a and --b groups");
  FGAbelianGroup ga, gb;
  try {
    ga = FGAbelianGroup::parse(*o.a);
    gb = FGAbelianGroup::parse(*o.b);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  Report r;
  r.document = head("tor", {{"a", ga.to_string()}, {"b", gb.to_string()}});
  r.document["tor"] = tor(ga, gb).to_string();
  r.document["verdict"] = "computed";
  return r;
}

Report hypotheses(const Workspace& w, const Options& o) {
  const auto& h = pick(w.hypotheses, o.hypotheses, "hypotheses", "hypotheses instance");
  Report r;
  r.document = head("hypotheses", {{"hypotheses", h.name}, {"m", h.instance.m}});
  const auto rep = check_hypotheses(h.instance);
  r.document["condition"] = rep.condition;
  Json degrees = Json::array();
  for (const auto& d : rep.degrees) {
    degrees.push_back({{"i", d.degree},
                       {"checked", d.checked},
                       {"injective", d.injective},
                       {"cokernel", d.cokernel.to_string()},
                       {"H^{i+1}", d.cohomology.to_string()},
                       {"tor", d.tor.to_string()},
                       {"passed", d.passed},
                       {"note", d.note}});
  }
  r.document["degrees"] = degrees;
  if (rep.failed_degree) r.document["failed_degree"] = *rep.failed_degree;
  r.document["verdict"] = verdict_word(rep.passed);
  r.outcome = rep.passed ? Outcome::computed : Outcome::failed;
  return r;
}

Report d_x(const Workspace& w, const Options& o) {
  const auto& d = pick<DgaEntry>(w.dgas, o.dga, "dga", "dga",
                                 [](const DgaEntry& e) { return e.kind == "d-x"; });
  const auto& a = *d.dga;
  Report r;
  r.document = head("d-x", {{"dga", d.name}});
  r.document["kind"] = d.kind;
  r.document["dimension"] = a.dimension();
  Json ranks = Json::array();
  for (const auto& b : a.bidegrees()) ranks.push_back({{"bidegree", to_string(b)}, {"rank", a.rank(b)}});
  r.document["ranks"] = ranks;
  const auto check = check_dga(a, 20000);
  r.document["dga_laws"] = check.passed;
  r.document["exhaustive"] = check.exhaustive;
  if (!check.passed) r.document["failure"] = check.failure;
  r.document["verdict"] = check.passed ? "computed" : "fail";
  r.outcome = check.passed ? Outcome::computed : Outcome::failed;
  return r;
}

// UTF-8 code points, for column alignment
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured()) return v.dump();
    }
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + cell(x);
    return out;
  }
  return v.dump();
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
  }
  return true;
}

void render_table(std::ostringstream& os, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> wd;
  for (const auto& c : cols) wd.push_back(width(c));
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      wd[i] = std::max(wd[i], width(row.contains(cols[i]) ? cell(row[cols[i]]) : ""));
    }
  }
  auto line = [&](const std::vector<std::string>& items) {
    std::string out = " ";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += " " + items[i];
      if (i + 1 < items.size()) out += std::string(wd[i] - width(items[i]) + 1, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  };
  line(cols);
  for (const auto& row : rows) {
    std::vector<std::string> items;
    for (const auto& c : cols) items.push_back(row.contains(c) ? cell(row[c]) : "");
    line(items);
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"resolve", "certify", "permutohedron", "boundary",
                                              "rh-map", "twisting-check", "gauge", "orbit",
                                              "tor", "hypotheses", "d-x"};
  return names;
}

Report run_command(const Workspace& w, const std::string& command, const Options& opts) {
  try {
    if (command == "permutohedron") return permutohedron(opts);
    if (command == "resolve") return resolve(w, opts);
    if (command == "certify") return certify(w, opts);
    if (command == "boundary") return boundary(w, opts);
    if (command == "rh-map") return rh_map(w, opts);
    if (command == "twisting-check") return twisting_check(w, opts);
    if (command == "gauge") return gauge(w, opts);
    if (command == "orbit") return orbit(w, opts);
    if (command == "tor") return tor_command(opts);
    if (command == "hypotheses") return hypotheses(w, opts);
    if (command == "d-x") return d_x(w, opts);
  } catch (const DomainError& e) {
    throw InputError(command + ": " + e.what());
  }
  throw InputError("unknown command '" + command + "'");
}

std::string render_machine(const Report& r) { return r.document.dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  const Json& doc = r.document;
  os << "command: " << cell(doc["command"]) << "\n";
  std::string params;
  for (const auto& [k, v] : doc["parameters"].items()) params += (params.empty() ? "" : " ") + k + "=" + cell(v);
  os << "parameters: " << params << "\n";
  os << "verdict: " << cell(doc["verdict"]) << "\n";
  for (const auto& [k, v] : doc.items()) {
    if (k == "command" || k == "parameters" || k == "verdict") continue;
    if (is_table(v)) {
      os << k << ":\n";
      render_table(os, v);
    } else if (v.is_object()) {
      os << k << ": " << v.dump() << "\n";
    } else {
      os << k << ": " << cell(v) << "\n";
    }
  }
  return os.str();
}

}  // namespace hirsch::cli
