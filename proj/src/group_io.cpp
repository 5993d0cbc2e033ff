#include "xdeg/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "xdeg/error.hpp"
#include "xdeg/family.hpp"

namespace xdeg {

std::vector<int> parse_cycles(const std::string& text, int degree) {
  if (degree < 1) fail(errc::bad_input, "permutation degree must be positive");
  std::vector<int> image(degree);
  for (int i = 0; i < degree; ++i) image[i] = i;
  std::vector<char> moved((std::size_t)degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(errc::bad_input, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit((unsigned char)text[i]))
        fail(errc::bad_input, "expected point in cycle notation: " + text);
      int pt = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        pt = pt * 10 + (text[i++] - '0');
      if (pt < 1 || pt > degree)
        fail(errc::bad_input, "cycle point out of range 1.." + std::to_string(degree));
      if (moved[pt - 1]) fail(errc::bad_input, "point repeated across cycles: " + text);
      moved[pt - 1] = 1;
      cycle.push_back(pt - 1);
      skip_ws();
    }
    if (i >= text.size()) fail(errc::bad_input, "unclosed cycle: " + text);
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return image;
}

FiniteGroup group_from_json_text(const std::string& text, const GroupValidation& gv) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::bad_input, std::string("group file parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail(errc::bad_input, "group file needs a \"kind\" string");
  std::string kind = doc["kind"].get<std::string>();
  std::string label = doc.value("label", kind);
  try {
    if (kind == "family") {
      if (!doc.contains("spec") || !doc["spec"].is_string())
        fail(errc::bad_input, "family group file needs a \"spec\" string");
      FiniteGroup g = group_from_family(doc["spec"].get<std::string>(), gv);
      if (doc.contains("label")) g.label = label;
      return g;
    }
    if (kind == "cayley") {
      if (!doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("table"))
        fail(errc::bad_input, "cayley group file needs \"n\" and \"table\"");
      int n = doc["n"].get<int>();
      auto raw = doc["table"].get<std::vector<std::vector<int>>>();
      if ((int)raw.size() != n) fail(errc::bad_input, "cayley table must have n rows");
      return group_from_table(raw, label, gv);
    }
    if (kind == "perm") {
      if (!doc.contains("degree") || !doc["degree"].is_number_integer() || !doc.contains("gens"))
        fail(errc::bad_input, "perm group file needs \"degree\" and \"gens\"");
      int degree = doc["degree"].get<int>();
      std::vector<std::vector<int>> gens;
      for (const auto& entry : doc["gens"]) {
        if (!entry.is_string()) fail(errc::bad_input, "perm gens must be cycle strings");
        gens.push_back(parse_cycles(entry.get<std::string>(), degree));
      }
      return group_from_permutations(degree, gens, label, gv);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_input, std::string("group file field: ") + e.what());
  }
  fail(errc::bad_input, "unknown group kind: " + kind);
}

FiniteGroup load_group_arg(const std::string& arg, const GroupValidation& gv) {
  if (arg.rfind("family:", 0) == 0) return group_from_family(arg.substr(7), gv);
  std::ifstream in(arg);
  if (!in) fail(errc::bad_input, "cannot open group file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json_text(buf.str(), gv);
}

}  // namespace xdeg
