#include "xdeg/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xdeg/corpus.hpp"
#include "xdeg/degrees.hpp"
#include "xdeg/error.hpp"
#include "xdeg/group_io.hpp"
#include "xdeg/rational.hpp"
#include "xdeg/tensor.hpp"
#include "xdeg/tower.hpp"

namespace xdeg {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t env_max_cosets() {
  const char* v = std::getenv("XDEG_MAX_COSETS");
  if (!v) return 0;
  std::string s(v);
  std::size_t pos = 0;
  long long parsed = 0;
  try {
    parsed = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(errc::bad_input, "XDEG_MAX_COSETS must be a positive integer");
  }
  if (pos != s.size() || parsed <= 0)
    fail(errc::bad_input, "XDEG_MAX_COSETS must be a positive integer");
  return parsed;
}

struct CommonArgs {
  int max_order = 20000;
  std::int64_t max_cosets = 0;

  GroupValidation validation() const {
    GroupValidation gv;
    gv.order_cap = max_order;
    return gv;
  }
  TensorOptions tensor() const {
    TensorOptions t;
    t.max_cosets = max_cosets > 0 ? max_cosets : env_max_cosets();
    return t;
  }
};

void add_common(CLI::App* sub, CommonArgs& c) {
  sub->add_option("--max-order", c.max_order, "group order cap for validation")
      ->capture_default_str();
  sub->add_option("--max-cosets", c.max_cosets,
                  "coset enumeration cap (0 = default; XDEG_MAX_COSETS overrides the default)");
}

void put_rat(ojson& o, const std::string& key, const Rational& q) {
  o[key] = rat_str(q);
  o[key + "_decimal"] = rat_decimal(q, 12);
}

ojson invariants_json(const AbelianInvariants& inv) {
  ojson a = ojson::array();
  for (long long d : inv) a.push_back(d);
  return a;
}

std::string invariants_str(const AbelianInvariants& inv) {
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(inv[i]);
  }
  return s + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

// ---- degree ----

struct DegreeArgs {
  std::string group;
  bool exterior = false;
  bool json = false;
  CommonArgs common;
};

int cmd_degree(const DegreeArgs& a, std::ostream& out) {
  FiniteGroup g = load_group_arg(a.group, a.common.validation());
  Rational d = commutativity_degree(g);
  ojson doc;
  doc["label"] = g.label;
  doc["order"] = g.n;
  doc["p_group"] = is_prime_power(g.n);
  put_rat(doc, "d", d);
  if (a.exterior) {
    ExteriorSquare e = exterior_square(g, a.common.tensor());
    put_rat(doc, "d_wedge", exterior_degree(g, e));
    doc["multiplier"] = invariants_json(e.multiplier);
    doc["z_order"] = (std::int64_t)center(g).members.size();
    Subgroup zw = exterior_center(g, e);
    doc["z_wedge_order"] = (std::int64_t)zw.members.size();
    doc["capable"] = zw.members.size() == 1;
  }
  if (a.json) {
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "group " << g.label << " (order " << g.n << ")\n";
  out << "d = " << rat_str(d) << " (" << rat_decimal(d) << ")\n";
  if (a.exterior) {
    out << "d_wedge = " << doc["d_wedge"].get<std::string>() << " ("
        << doc["d_wedge_decimal"].get<std::string>() << ")\n";
    out << "multiplier = " << doc["multiplier"].dump() << "\n";
    out << "z_order = " << doc["z_order"].get<std::int64_t>()
        << ", z_wedge_order = " << doc["z_wedge_order"].get<std::int64_t>()
        << ", capable = " << (doc["capable"].get<bool>() ? "true" : "false") << "\n";
  }
  return 0;
}

// ---- tensor ----

struct TensorArgs {
  std::string group;
  bool json = false;
  CommonArgs common;
};

int cmd_tensor(const TensorArgs& a, std::ostream& out) {
  TensorOptions topts = a.common.tensor();
  FiniteGroup g = load_group_arg(a.group, a.common.validation());
  ExteriorSquare e = exterior_square(g, topts);
  std::vector<std::int32_t> comms;
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = 0; y < g.n; ++y) comms.push_back(g.comm(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  std::int64_t derived = (std::int64_t)subgroup_closure(g, comms).size();
  ojson doc;
  doc["label"] = g.label;
  doc["order"] = g.n;
  doc["derived_order"] = derived;
  doc["exterior_order"] = e.w.n;
  doc["multiplier"] = invariants_json(e.multiplier);
  doc["multiplier_order"] = (std::int64_t)e.mult_members.size();
  doc["wedge_size_identity"] = (std::int64_t)e.w.n == derived * (std::int64_t)e.mult_members.size();
  doc["via_full_pair_group"] = e.via_nu;
  if (g.n <= topts.tensor_order_cap) {
    TensorSquare ts = tensor_square(g, topts);
    doc["tensor_order"] = ts.tensor.n;
    doc["nabla_order"] = (std::int64_t)ts.nabla.size();
    doc["nu_order"] = ts.nu_order;
  } else {
    doc["tensor_order"] = nullptr;
    doc["nabla_order"] = nullptr;
    doc["nu_order"] = nullptr;
  }
  if (a.json) {
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "group " << g.label << " (order " << g.n << ")\n";
  out << "derived_order = " << derived << "\n";
  out << "exterior_order = " << e.w.n << ", multiplier = " << invariants_str(e.multiplier)
      << ", wedge_size_identity = "
      << (doc["wedge_size_identity"].get<bool>() ? "true" : "false") << "\n";
  if (!doc["tensor_order"].is_null())
    out << "tensor_order = " << doc["tensor_order"].get<std::int64_t>()
        << ", nabla_order = " << doc["nabla_order"].get<std::int64_t>()
        << ", nu_order = " << doc["nu_order"].get<std::int64_t>() << "\n";
  else
    out << "tensor square skipped (order above tensor cap)\n";
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::string corpus_name;
  std::string group;
  bool json = false;
  bool csv = false;
  bool identities = false;
  long long samples = 1000;
  std::uint64_t seed = 0;
  CommonArgs common;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.group.empty() == a.corpus_name.empty())
    fail(errc::bad_input, "verify needs exactly one of --group or --corpus");
  if (!a.corpus_name.empty() && a.corpus_name != "default")
    fail(errc::bad_input, "unknown corpus: " + a.corpus_name);
  TensorOptions topts = a.common.tensor();
  std::vector<FiniteGroup> groups;
  if (!a.group.empty())
    groups.push_back(load_group_arg(a.group, a.common.validation()));
  else
    groups = corpus(a.common.validation());

  bool all_hold = true;
  ojson jgroups = ojson::array();
  std::string csv_rows;
  std::string text;
  for (const FiniteGroup& g : groups) {
    DegreeReport rep = degree_report(g, topts);
    bool group_ok = rep.all_applicable_hold();
    ojson jg;
    jg["label"] = rep.label;
    jg["order"] = rep.order;
    jg["p_group"] = rep.p_group;
    jg["p"] = rep.p;
    put_rat(jg, "d", rep.d);
    put_rat(jg, "d_wedge", rep.d_wedge);
    jg["multiplier"] = invariants_json(rep.multiplier);
    jg["z_order"] = rep.z_order;
    jg["z_wedge_order"] = rep.z_wedge_order;
    jg["capable"] = rep.capable;
    ojson jrecords = ojson::array();
    for (const TheoremCheck& c : rep.checks) {
      ojson jc;
      jc["id"] = c.id;
      jc["statement"] = c.statement;
      jc["applicable"] = c.applicable;
      jc["holds"] = c.holds;
      put_rat(jc, "lhs", c.lhs);
      put_rat(jc, "rhs", c.rhs);
      jc["note"] = c.note;
      jrecords.push_back(jc);
      csv_rows += csv_field(rep.label) + "," + c.id + "," + csv_field(rat_str(c.lhs)) + "," +
                  csv_field(rat_str(c.rhs)) + "," + (c.holds ? "true" : "false") + "\n";
    }
    jg["records"] = jrecords;
    if (a.identities) {
      IdentityReport ir = check_brown_identities(g, a.samples, a.seed, topts);
      group_ok = group_ok && ir.all_hold();
      ojson ji;
      ji["exhaustive"] = ir.exhaustive;
      ji["checked"] = ir.checked;
      ji["failed"] = ir.failed;
      ji["all_hold"] = ir.all_hold();
      jg["identities"] = ji;
    }
    jg["all_hold"] = group_ok;
    jgroups.push_back(jg);
    all_hold = all_hold && group_ok;

    text += rep.label + " (order " + std::to_string(rep.order) + "): d = " + rat_str(rep.d) +
            ", d_wedge = " + rat_str(rep.d_wedge) + (group_ok ? " ... ok" : " ... FAIL") + "\n";
    for (const TheoremCheck& c : rep.checks)
      if (c.applicable && !c.holds)
        text += "  record " + c.id + " violated: lhs " + rat_str(c.lhs) + " rhs " +
                rat_str(c.rhs) + " (" + c.statement + ")\n";
  }

  if (a.json) {
    ojson doc;
    doc["seed"] = a.seed;
    doc["group_count"] = (std::int64_t)groups.size();
    doc["groups"] = jgroups;
    doc["all_hold"] = all_hold;
    out << doc.dump(2) << "\n";
  } else if (a.csv) {
    out << "group,record,lhs,rhs,holds\n" << csv_rows;
  } else {
    out << text;
    out << (all_hold ? "all applicable records hold\n" : "RECORD VIOLATIONS FOUND\n");
  }
  return all_hold ? 0 : 1;
}

// ---- tower ----

struct TowerArgs {
  std::string family;
  int depth = 0;
  std::string kind = "exterior";
  std::string claimed;
  std::string tol = "1/50";
  int max_level_order = 0;
  bool json = false;
  CommonArgs common;
};

int cmd_tower(const TowerArgs& a, std::ostream& out) {
  if (a.kind != "exterior" && a.kind != "commutativity")
    fail(errc::bad_input, "tower --kind must be exterior or commutativity");
  DegreeKind kind = a.kind == "exterior" ? DegreeKind::exterior : DegreeKind::commutativity;
  Tower t = build_tower(a.family, a.depth, a.common.validation());
  TowerOptions topts;
  topts.max_level_order = a.max_level_order;
  topts.tensor = a.common.tensor();

  ojson doc;
  doc["family"] = a.family;
  doc["depth"] = a.depth;
  doc["kind"] = a.kind;
  bool pass = true;
  LimitEstimate est;
  Rational claimed, tol, gap;
  if (!a.claimed.empty()) {
    if (kind != DegreeKind::exterior)
      fail(errc::bad_input, "--claimed applies to the exterior kind only");
    claimed = rat_parse(a.claimed);
    tol = rat_parse(a.tol);
    LimitReport rep = check_limit(t, claimed, tol, topts);
    est = rep.estimate;
    gap = rep.gap;
    pass = rep.pass;
  } else {
    est = tower_degree_sequence(t, kind, topts);
  }
  ojson orders = ojson::array(), seq = ojson::array(), seq_dec = ojson::array();
  for (std::int64_t n : est.orders) orders.push_back(n);
  for (const Rational& x : est.sequence) {
    seq.push_back(rat_str(x));
    seq_dec.push_back(rat_decimal(x));
  }
  doc["orders"] = orders;
  doc["sequence"] = seq;
  doc["sequence_decimal"] = seq_dec;
  put_rat(doc, "extrapolated", est.extrapolated);
  doc["monotone"] = est.monotone;
  doc["truncated"] = est.truncated;
  if (!a.claimed.empty()) {
    put_rat(doc, "claimed", claimed);
    doc["tol"] = rat_str(tol);
    put_rat(doc, "gap", gap);
    doc["pass"] = pass;
  }

  if (a.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "tower " << a.family << " depth " << a.depth << " (" << a.kind << ")\n";
    for (std::size_t i = 0; i < est.sequence.size(); ++i)
      out << "  order " << est.orders[i] << ": " << rat_str(est.sequence[i]) << " ("
          << rat_decimal(est.sequence[i]) << ")\n";
    if (est.truncated) out << "  (levels above the order cap not evaluated)\n";
    out << "extrapolated = " << rat_str(est.extrapolated) << " ("
        << rat_decimal(est.extrapolated) << "), "
        << (est.monotone ? "nonincreasing" : "NOT nonincreasing") << "\n";
    if (!a.claimed.empty()) {
      if (pass)
        out << "consistent with claimed value " << rat_str(claimed) << " (gap "
            << rat_str(gap) << " <= tol " << rat_str(tol) << ")\n";
      else
        out << "NOT consistent with claimed value " << rat_str(claimed) << " (gap "
            << rat_str(gap) << " > tol " << rat_str(tol) << ")\n";
    }
  }
  return pass ? 0 : 1;
}

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::order_cap_exceeded:
    case errc::enumeration_limit_exceeded:
    case errc::subgroup_enumeration_cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact commutativity and exterior degrees of finite groups and p-group towers"};
  app.require_subcommand(1);

  DegreeArgs da;
  CLI::App* degree = app.add_subcommand("degree", "degrees of one group");
  degree->add_option("--group", da.group, "family:<desc> or JSON group file")->required();
  degree->add_flag("--exterior", da.exterior, "also compute the exterior degree");
  degree->add_flag("--json", da.json, "JSON output");
  add_common(degree, da.common);

  TensorArgs ta;
  CLI::App* tensor = app.add_subcommand("tensor", "tensor and exterior square invariants");
  tensor->add_option("--group", ta.group, "family:<desc> or JSON group file")->required();
  tensor->add_flag("--json", ta.json, "JSON output");
  add_common(tensor, ta.common);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run the theorem record suite");
  verify->add_option("--corpus", va.corpus_name, "built-in corpus name (default)");
  verify->add_option("--group", va.group, "family:<desc> or JSON group file");
  CLI::Option* vjson = verify->add_flag("--json", va.json, "JSON output");
  verify->add_flag("--csv", va.csv, "CSV output (group,record,lhs,rhs,holds)")->excludes(vjson);
  verify->add_flag("--identities", va.identities, "also check the pair identities");
  verify->add_option("--samples", va.samples, "sampled tuples per identity check")
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "seed for sampled checks")->capture_default_str();
  add_common(verify, va.common);

  TowerArgs wa;
  CLI::App* tower = app.add_subcommand("tower", "degree sequence along a quotient tower");
  tower->add_option("--family", wa.family, "Zp:p=.. | Ct:p=..,t=.. | Dsemi:r=..")->required();
  tower->add_option("--depth", wa.depth, "number of levels")->required();
  tower->add_option("--kind", wa.kind, "exterior | commutativity")->capture_default_str();
  tower->add_option("--claimed", wa.claimed, "claimed limit a/b; enables the consistency gate");
  tower->add_option("--tol", wa.tol, "gate tolerance a/b")->capture_default_str();
  tower->add_option("--max-level-order", wa.max_level_order,
                    "skip levels above this order (0 = family default)");
  tower->add_flag("--json", wa.json, "JSON output");
  add_common(tower, wa.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (degree->parsed()) return cmd_degree(da, out);
    if (tensor->parsed()) return cmd_tensor(ta, out);
    if (verify->parsed()) return cmd_verify(va, out);
    return cmd_tower(wa, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace xdeg
