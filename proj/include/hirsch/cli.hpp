#pragma once

#include "hirsch/dga.hpp"
#include "hirsch/groups.hpp"
#include "hirsch/resolution.hpp"
#include "hirsch/twisting.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirsch::cli {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid input; exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CgaEntry {
  std::string name;
  CgaPresentation presentation;
};

/// How a dga entry was described; kept for serialization.
struct DgaEntry {
  std::string name;
  std::string kind;  // "table", "cochains", "tensor", "d-x"
  Json description;  // canonical form of the entry
  DgaPtr dga;
};

struct TwistingEntry {
  std::string name;
  std::string dga;
  std::string role;  // "twisting" or "gauge"
  int truncation = 2;
  DgaElement value;
};

struct HomEntry {
  std::string name;
  std::string source;
  std::string target;
  int range = 0;
  std::map<std::string, TensorElement> images;
};

struct HypothesisEntry {
  std::string name;
  std::optional<int> unitary;  // U(n) shortcut
  HypothesisInstance instance;
};

/// Every stored object passed its validation when it was added.
struct Workspace {
  std::vector<CgaEntry> cgas;
  std::vector<DgaEntry> dgas;
  std::vector<TwistingEntry> twistings;
  std::vector<HomEntry> homs;
  std::vector<HypothesisEntry> hypotheses;

  [[nodiscard]] const CgaEntry& cga(const std::string& name) const;
  [[nodiscard]] const DgaEntry& dga(const std::string& name) const;
  [[nodiscard]] const TwistingEntry& twisting(const std::string& name) const;
  [[nodiscard]] const HomEntry& hom(const std::string& name) const;
  [[nodiscard]] const HypothesisEntry& hypothesis(const std::string& name) const;
};

/// Throws InputError with "line L, column C" for syntax errors and with the
/// object name and its line for validation failures.
Workspace parse_input(const std::string& text);

/// Canonical document; parse_input(serialize(w)) serializes identically.
Json serialize(const Workspace& w);

struct Options {
  std::optional<int> n;
  std::optional<std::string> cga;
  std::optional<int> m;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> p;
  std::optional<std::string> hom;
  std::optional<std::string> dga;
  std::optional<std::string> hypotheses;
  std::optional<std::string> bundle;  // "x,y,z"
  std::optional<int> truncation;
  int budget = 2;
};

enum class Outcome { computed = 0, failed = 1, input_error = 2, inconclusive = 3 };

struct Report {
  Outcome outcome = Outcome::computed;
  Json document;  // command, parameters, verdict, sections
};

const std::vector<std::string>& command_names();

/// Throws InputError for unknown commands, missing flags and unknown objects.
Report run_command(const Workspace& w, const std::string& command, const Options& opts);

/// Machine format: the report document, pretty-printed.
std::string render_machine(const Report& r);
/// Text format: header lines and aligned tables.
std::string render_text(const Report& r);

}  // namespace hirsch::cli
