#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hirsch/cli.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

using namespace hirsch;
using namespace hirsch::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string& sample() {
  static const std::string text = read_file(std::string(HIRSCH_TEST_DATA) + "/data/workspace.json");
  return text;
}

Report run(const std::string& command, Options o = {}) { return run_command(parse_input(sample()), command, o); }

std::string input_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

int tool(const std::string& args) {
  const std::string cmd = std::string(HIRSCH_TOOL) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse the sample workspace") {
  const auto w = parse_input(sample());
  CHECK(w.cgas.size() == 2);
  CHECK(w.dgas.size() == 3);
  CHECK(w.twistings.size() == 6);
  CHECK(w.homs.size() == 2);
  CHECK(w.hypotheses.size() == 3);
  CHECK(w.dga("circle").kind == "d-x");
  CHECK_THROWS_AS((void)w.cga("nope"), InputError);
}

TEST_CASE("serialization reaches its canonical form in one pass") {
  const Json once = serialize(parse_input(sample()));
  const Json twice = serialize(parse_input(once.dump()));
  CHECK(once == twice);
  CHECK(once.dump() == twice.dump());
  // terms are combined and ordered
  const std::string messy = R"({"dgas": [{"name": "A", "basis": [{"name": "1", "bidegree": [0, 0]}, {"name": "v", "bidegree": [2, -1]}],
    "unit": [[1, "1"]], "products": [{"left": "1", "right": "1", "value": [[1, "1"]]}, {"left": "1", "right": "v", "value": [[1, "v"]]},
    {"left": "v", "right": "1", "value": [[2, "v"], [-1, "v"]]}]}],
    "twistings": [{"name": "t", "dga": "A", "truncation": 2, "value": [[1, "v"], [2, "v"]]}]})";
  const Json canon = serialize(parse_input(messy));
  CHECK(canon["twistings"][0]["value"] == Json::parse(R"([[3, "v"]])"));
  CHECK(canon["dgas"][0]["products"][2]["value"] == Json::parse(R"([[1, "v"]])"));
  CHECK(serialize(parse_input(canon.dump())) == canon);
}

TEST_CASE("input diagnostics") {
  const auto odd = input_error("{\"cgas\": [\n  {\"name\": \"Q\", \"generators\": [{\"name\": \"x\", \"degree\": 3}], \"m\": 4}\n]}");
  CHECK(odd.find("cga 'Q' (line 2)") != std::string::npos);
  CHECK(odd.find("m-relation-free") != std::string::npos);

  const auto dup = input_error(R"({"cgas": [{"name": "Q", "generators": []}], "hypotheses": [{"name": "Q", "m": 2}]})");
  CHECK(dup.find("duplicate name") != std::string::npos);

  const auto syntax = input_error("{\n  \"cgas\": [\n    {\"name\" \"Q\"}\n  ]\n}");
  CHECK(syntax.find("line 3, column") != std::string::npos);

  CHECK(input_error(R"({"cga": []})").find("unknown top-level key 'cga'") != std::string::npos);
  CHECK(input_error(R"({"cgas": [{"generators": []}]})").find("needs a string name") != std::string::npos);

  // a twisting element must satisfy the twisting equations
  Json doc = Json::parse(sample());
  doc["twistings"][2]["role"] = "twisting";
  const auto bad = input_error(doc.dump(2));
  CHECK(bad.find("twisting 'half'") != std::string::npos);
  CHECK(bad.find("not a twisting element") != std::string::npos);

  // wrong bidegree of a gauge component
  doc = Json::parse(sample());
  doc["twistings"][5]["value"] = Json::parse(R"([[1, "y"]])");
  CHECK(input_error(doc.dump()).find("twisting 'pu'") != std::string::npos);

  // tensor factors must be listed first
  doc = Json::parse(sample());
  doc["dgas"].insert(doc["dgas"].begin(), Json{{"name", "T"}, {"kind", "tensor"}, {"left", "W"}, {"right", "W"}});
  CHECK(input_error(doc.dump()).find("listed earlier") != std::string::npos);

  // d must square to zero
  doc = Json::parse(sample());
  doc["dgas"][1]["basis"].push_back(Json::parse(R"({"name": "q", "bidegree": [2, -1]})"));
  doc["dgas"][1]["d"] = Json::parse(R"({"u": [[1, "q"]]})");
  CHECK(input_error(doc.dump()).find("dga 'W'") != std::string::npos);

  // an image of the wrong degree
  doc = Json::parse(sample());
  doc["homs"][1]["images"]["x"] = Json::parse(R"([[1, ["x", "y"]]])");
  CHECK(input_error(doc.dump()).find("hom 'swap'") != std::string::npos);

  // Hurewicz matrices must respect torsion
  doc = Json::parse(sample());
  doc["hypotheses"][2]["hurewicz"]["2"] = Json::parse(R"({"source": "Z/2", "target": "Z", "matrix": [[1]]})");
  CHECK(input_error(doc.dump()).find("hypotheses 'custom'") != std::string::npos);
}

TEST_CASE("permutohedron command") {
  Options o;
  o.n = 3;
  const auto r = run("permutohedron", o);
  CHECK(r.outcome == Outcome::computed);
  CHECK(r.document["f_vector"] == Json::parse("[6, 6, 1]"));
  std::set<std::string> edges, vertices, top;
  for (const auto& c : r.document["cells"]) {
    const auto label = c["label"].get<std::string>();
    (c["dim"] == 2 ? top : c["dim"] == 1 ? edges : vertices).insert(label);
  }
  CHECK(top == std::set<std::string>{"a⌣₁b⌣₁c"});
  CHECK(edges == std::set<std::string>{"(a⌣₁b)c", "c(a⌣₁b)", "a(b⌣₁c)", "b(a⌣₁c)", "(a⌣₁c)b", "(b⌣₁c)a"});
  CHECK(vertices == std::set<std::string>{"abc", "acb", "bac", "bca", "cab", "cba"});
  CHECK(r.document["boundary_matches_cup1"] == true);
  CHECK(r.document["homology"] == Json::parse(R"(["Z", "0", "0"])"));
  CHECK_THROWS_AS(run("permutohedron"), InputError);
  o.n = 9;
  CHECK_THROWS_AS(run("permutohedron", o), InputError);
}

TEST_CASE("resolve and certify") {
  Options o;
  o.cga = "P2";
  o.m = 6;
  const auto r = run("resolve", o);
  std::vector<std::string> gens;
  for (const auto& g : r.document["generators"]) gens.push_back(g["generator"]);
  CHECK(gens == std::vector<std::string>{"x", "y", "x⌣₁y"});
  CHECK(r.document["generators"][2]["d"] == "xy - yx");
  CHECK(r.document["generators"][2]["bidegree"] == "(-1,4)");
  o.m.reset();
  CHECK_THROWS_AS(run("resolve", o), InputError);  // no range for a polynomial algebra

  Options c;
  c.cga = "P3";
  const auto cert = run("certify", c);
  CHECK(cert.outcome == Outcome::computed);
  CHECK(cert.document["verdict"] == "pass");
  CHECK(cert.document["degrees"].size() == 9);

  Options b;
  b.cga = "P3";
  b.bundle = "c,a";
  const auto bd = run("boundary", b);
  CHECK(bd.document["bundle"] == "-a⌣₁c");
  CHECK(bd.document["boundary"] == "-ac + ca");
  Options bn;
  bn.n = 4;
  const auto top = run("boundary", bn);
  CHECK(top.document["terms"] == 14);
  CHECK(top.document["facets"].size() == 14);
}

TEST_CASE("rh-map") {
  Options o;
  o.hom = "null";
  const auto r = run("rh-map", o);
  CHECK(r.document["zero_map"] == true);
  CHECK(r.document["chain_map"] == true);
  o.hom = "swap";
  const auto s = run("rh-map", o);
  CHECK(s.document["images"][2]["image"] == "-x⌣₁y");
}

TEST_CASE("twisting commands") {
  Options o;
  o.a = "half";
  const auto t = run("twisting-check", o);
  CHECK(t.outcome == Outcome::failed);
  CHECK(t.document["failed_level"] == 3);

  o.a = "a";
  o.b = "b";
  const auto refuted = run("gauge", o);
  CHECK(refuted.outcome == Outcome::failed);
  CHECK(refuted.document["certificate"] == "b^2 - a^2 = -4 x is not a coboundary");

  o.a = "zero";
  o.b = "wy";
  CHECK(run("gauge", o).outcome == Outcome::inconclusive);
  o.b = "a";
  CHECK_THROWS_AS(run("gauge", o), InputError);  // different dgas
  o.b = "half";
  CHECK_THROWS_AS(run("gauge", o), InputError);  // not validated

  Options p;
  p.a = "wy";
  p.p = "pu";
  const auto orb = run("orbit", p);
  CHECK(orb.outcome == Outcome::computed);
  CHECK(orb.document["p_inverse"] == "1 - u");
  CHECK(orb.document["orbit_relation"] == true);
}

TEST_CASE("orbit and gauge agree on D(X; H) instances") {
  std::mt19937_64 rng(11);
  int equivalent = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = SimplicialComplex::generated_by({{0, 1}, {1, 2}, {0, 2}});
    const std::vector<FGAbelianGroup> h{FGAbelianGroup::free(1), fixtures::random_group(rng)};
    const auto dx = build_DX(x, h);
    const int n = 3;
    const auto a = fixtures::random_twisting(rng, *dx, n);
    const auto g = fixtures::random_gauge(rng, *dx, n, 1);
    auto value = [&](const DgaElement& v) {
      Json out = Json::array();
      for (Index i = 0; i < v.size(); ++i) {
        if (!v(i).is_zero()) out.push_back(Json::array({v(i).to_long(), dx->basis(i).name}));
      }
      return out;
    };
    Json doc{{"dgas", Json::array({{{"name", "D"}, {"kind", "d-x"}, {"simplices", Json::parse("[[0,1],[1,2],[0,2]]")},
                                    {"groups", Json::array({h[0].to_string(), h[1].to_string()})}}})},
             {"twistings", Json::array({{{"name", "a"}, {"dga", "D"}, {"truncation", n}, {"value", value(a.value)}},
                                        {{"name", "p"}, {"dga", "D"}, {"role", "gauge"}, {"truncation", n},
                                         {"value", value(g.p_prime)}}})}};
    Options o;
    o.a = "a";
    o.p = "p";
    const auto orb = run_command(parse_input(doc.dump()), "orbit", o);
    REQUIRE(orb.outcome == Outcome::computed);
    Json b = orb.document["twisting"];
    b["name"] = "b";
    doc["twistings"].push_back(b);
    Options q;
    q.a = "a";
    q.b = "b";
    q.budget = 1;
    const auto res = run_command(parse_input(doc.dump()), "gauge", q);
    CHECK(res.outcome != Outcome::failed);
    if (res.outcome == Outcome::computed) ++equivalent;
  }
  CHECK(equivalent > 0);
}

TEST_CASE("tor and hypotheses") {
  Options o;
  o.a = "Z/4";
  o.b = "Z/6";
  CHECK(run("tor", o).document["tor"] == "Z/2");
  o.b = "Z/q";
  CHECK_THROWS_AS(run("tor", o), InputError);

  Options h;
  h.hypotheses = "U3";
  CHECK(run("hypotheses", h).outcome == Outcome::computed);
  h.hypotheses = "U3bad";
  const auto bad = run("hypotheses", h);
  CHECK(bad.outcome == Outcome::failed);
  CHECK(bad.document["failed_degree"] == 5);
  CHECK_THROWS_AS(run("hypotheses"), InputError);  // three instances, none named
}

TEST_CASE("d-x") {
  const auto r = run("d-x");
  CHECK(r.document["dga_laws"] == true);
  CHECK(r.document["dimension"] == parse_input(sample()).dga("circle").dga->dimension());
}

TEST_CASE("reports are byte-stable") {
  Options o;
  o.n = 4;
  CHECK(render_machine(run("permutohedron", o)) == render_machine(run("permutohedron", o)));
  CHECK(render_text(run("permutohedron", o)) == render_text(run("permutohedron", o)));
  CHECK_THROWS_AS(run("frobnicate"), InputError);
}

TEST_CASE("exit codes") {
  const std::string in = std::string("--input ") + HIRSCH_TEST_DATA + "/data/workspace.json ";
  CHECK(tool("--command permutohedron --n 3") == 0);
  CHECK(tool(in + "--command hypotheses --hypotheses U3bad") == 1);
  CHECK(tool(in + "--command gauge --a zero --b wy --budget 1") == 3);
  CHECK(tool(in + "--command gauge --a a --b b --format machine") == 1);
  CHECK(tool("--command tor --a Z/4") == 2);
  CHECK(tool("--command nonsense") == 2);
  CHECK(tool("--input /nonexistent --command tor --a Z --b Z") == 2);
}
