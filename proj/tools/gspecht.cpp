// gspecht command line: tableaux, char, branch, verify.
// Exit status: 0 pass, 1 verification failure, 2 usage or resource error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gspecht/characters.hpp"
#include "gspecht/combinatorics.hpp"
#include "gspecht/parallel.hpp"
#include "gspecht/report.hpp"
#include "gspecht/suites.hpp"

using namespace gspecht;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int e = 2;
  std::optional<std::uint64_t> p;
  std::string charge_text;
  int level = 0;
  std::string mu_text;
  bool mu_given = false;
  int dmin = 0;
  int dmax = -1;
  std::vector<std::string> suites;
  std::string format;  // empty: the command's default
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
  std::size_t max_dim = HeckeAlgebra::default_max_dim;
  int random_charges = 0;
  int assoc_trials = 100;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t stop = text.find(',', pos);
    if (stop == std::string::npos) stop = text.size();
    std::string item = text.substr(pos, stop - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (item.empty() || used != item.size())
      throw UsageError(std::string(what) + " '" + text + "': expected an integer at position " + std::to_string(pos));
    out.push_back(v);
    pos = stop + 1;
  }
  return out;
}

std::string seq(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// Level and charge from --charge / --level, falling back to the number of
// components written in mu, then to 1.  Charge defaults to zeros.
std::vector<int> resolve_charge(const RunConfig& c) {
  auto charge = parse_ints(c.charge_text, "--charge");
  int level = c.level;
  if (!charge.empty()) {
    if (level > 0 && level != static_cast<int>(charge.size()))
      throw UsageError("--level " + std::to_string(level) + " disagrees with a charge of length " + std::to_string(charge.size()));
    return charge;
  }
  if (level <= 0 && c.mu_given) level = parse_multipartition(c.mu_text).level();
  if (level <= 0) level = 1;
  return std::vector<int>(static_cast<std::size_t>(level), 0);
}

AlgebraParams resolve_params(const RunConfig& c, bool need_field) {
  if (c.e == 1 || c.e < 0) throw UsageError("e=" + std::to_string(c.e) + " is not allowed: xi must not be 1 (use e=0 or e>=2)");
  if (c.e == 0) {
    if (need_field) throw UsageError("e=0 is only available for combinatorics (tableaux, char, branch, --suite combinatorics)");
    if (c.p) throw UsageError("--p makes no sense with e=0");
  }
  auto charge = resolve_charge(c);
  if (c.e == 0) return AlgebraParams::combinatorial(0, charge);
  return AlgebraParams::make(FieldSpec::prime_field(c.p.value_or(default_prime(c.e)), c.e), charge);
}

Multipartition resolve_mu(const RunConfig& c, const AlgebraParams& params) {
  if (!c.mu_given) throw UsageError("--mu is required");
  return parse_multipartition(c.mu_text, params.level());
}

Json header(const std::string& command, const AlgebraParams& params) {
  Json j = params_json(params);
  j["schema"] = report_schema;
  j["command"] = command;
  return j;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ResourceError("cannot write " + c.out);
  f << text;
}

int cmd_tableaux(const RunConfig& c) {
  auto params = resolve_params(c, false);
  auto mu = resolve_mu(c, params);
  auto ts = standard_tableaux(mu);
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "id\tfilling\tresidues\tdeg\tcodeg\tlength\tword\n";
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& t = ts[k];
    auto res = residue_sequence(t, params);
    auto word = canonical_reduced_word(w_of_tableau(t));
    int deg = degree(t, params), codeg = codegree(t, params), len = tableau_length(t);
    rows.push_back({{"id", k + 1}, {"filling", t.to_string()}, {"residues", res}, {"deg", deg}, {"codeg", codeg},
                    {"length", len}, {"word", word}});
    tsv << k + 1 << '\t' << t.to_string() << '\t' << seq(res) << '\t' << deg << '\t' << codeg << '\t' << len << '\t'
        << seq(word) << '\n';
  }
  if (c.format == "json") {
    Json j = header("tableaux", params);
    j["mu"] = mu.to_string();
    j["rows"] = std::move(rows);
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, tsv.str());
  }
  return exit_pass;
}

int cmd_char(const RunConfig& c) {
  auto params = resolve_params(c, false);
  auto mu = resolve_mu(c, params);
  auto ch = graded_character(mu, params);
  if (c.format == "json") {
    Json j = header("char", params);
    j["mu"] = mu.to_string();
    j["character"] = character_json(ch);
    j["total"] = character_total(ch);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream tsv;
    tsv << "weight\tpoly\n";
    for (auto& [i, p] : ch) tsv << seq(i) << '\t' << p.to_string() << '\n';
    tsv << "total\t" << character_total(ch) << '\n';
    emit(c, tsv.str());
  }
  return exit_pass;
}

int cmd_branch(const RunConfig& c) {
  auto params = resolve_params(c, false);
  auto mu = resolve_mu(c, params);
  auto table = branching_table(mu, params);
  auto check = check_branching_identity(mu, params);
  if (c.format == "json") {
    Json j = header("branch", params);
    j["mu"] = mu.to_string();
    Json rows = Json::array();
    for (std::size_t m = 0; m < table.size(); ++m)
      rows.push_back({{"m", m + 1}, {"node", to_json(table[m].node)}, {"shape", table[m].shape.to_string()},
                      {"shift", table[m].shift}});
    j["sections"] = std::move(rows);
    j["identity"] = to_json(check);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream tsv;
    tsv << "m\tnode\tshape\tshift\n";
    for (std::size_t m = 0; m < table.size(); ++m)
      tsv << m + 1 << '\t' << table[m].node.to_string() << '\t' << table[m].shape.to_string() << '\t' << table[m].shift
          << '\n';
    tsv << "# character identity\t" << (check.ok ? "PASS" : "FAIL") << '\n';
    emit(c, tsv.str());
  }
  return check.ok ? exit_pass : exit_fail;
}

// Flattens check objects into TSV rows: scope, name, ok, instances, detail.
void flatten(const Json& j, const std::string& scope, std::ostringstream& out) {
  if (j.is_object() && j.contains("ok") && j.contains("name")) {
    out << scope << '\t' << j["name"].get<std::string>() << '\t' << (j["ok"].get<bool>() ? "PASS" : "FAIL") << '\t'
        << j.value("instances", 0) << '\t' << j["detail"].get<std::string>() << '\n';
    return;
  }
  if (j.is_array()) {
    for (auto& v : j) flatten(v, scope, out);
  } else if (j.is_object()) {
    std::string here = scope;
    if (j.contains("mu")) here += " mu=" + j["mu"].get<std::string>();
    if (j.contains("d") && !j.contains("mu")) here += " d=" + std::to_string(j["d"].get<int>());
    if (j.contains("checks") && j.contains("charge")) here += " charge=" + j["charge"].dump();
    for (auto& [k, v] : j.items())
      if (v.is_array() || v.is_object()) flatten(v, here, out);
  }
}

int cmd_verify(const RunConfig& c) {
  std::vector<std::string> names = c.suites;
  if (names.empty()) names = {"all"};
  SuiteSelection sel;
  bool comb = false;
  for (auto& n : names) {
    if (n == "all") {
      sel = {true, true, true, true};
      comb = true;
    } else if (n == "combinatorics") comb = true;
    else if (n == "hecke") sel.hecke = true;
    else if (n == "specht") sel.specht = true;
    else if (n == "klr") sel.klr = true;
    else if (n == "branching") sel.branching = true;
    else throw UsageError("unknown suite '" + n + "'");
  }
  if (c.dmax < 0) throw UsageError("--dmax is required for verify");
  if (c.dmin > c.dmax) throw UsageError("--dmin exceeds --dmax");
  if (c.e == 0 && sel.any()) {
    if (std::find(names.begin(), names.end(), "all") == names.end())
      throw UsageError("e=0 is only available for the combinatorics suite");
    sel = {};  // "all" at e=0 means everything that exists there
  }
  auto params = resolve_params(c, sel.any());
  const unsigned threads = resolve_threads(c.threads);

  Json report = header("verify", params);
  report["seed"] = c.seed;
  report["dmin"] = c.dmin;
  report["dmax"] = c.dmax;
  report["suites"] = names;
  int status = exit_pass;
  try {
    if (comb) {
      std::vector<std::vector<int>> charges{params.charge};
      if (c.random_charges > 0) {
        auto more = random_charges(c.e, params.level(), c.random_charges, c.seed);
        charges.insert(charges.end(), more.begin(), more.end());
      }
      int bruhat = std::min(c.dmax, params.level() <= 2 ? 5 : 4);
      report["combinatorics"] = run_combinatorics(c.e, charges, c.dmax, threads, bruhat);
    }
    if (sel.any()) {
      AlgebraRunOptions o;
      o.suites = sel;
      o.seed = c.seed;
      o.max_dim = c.max_dim;
      o.threads = threads;
      o.assoc_trials = c.assoc_trials;
      report["algebra"] = Json::array();
      for (int d = c.dmin; d <= c.dmax; ++d) report["algebra"].push_back(run_algebra_point(params, d, o));
    }
  } catch (const ResourceError& e) {
    report["error"] = e.what();
    status = exit_usage;
  }
  report["ok"] = all_ok(report) && status == exit_pass;
  if (status == exit_pass && !report["ok"].get<bool>()) status = exit_fail;

  std::string text;
  if (c.format == "json") {
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream tsv;
    tsv << "scope\tname\tstatus\tinstances\tdetail\n";
    flatten(report, "", tsv);
    text = tsv.str();
  }
  if (!c.out.empty()) {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ResourceError("cannot write " + c.out);
    f << text;
  } else {
    std::cout << text;
  }
  if (report.contains("error")) std::cerr << "gspecht: " << report["error"].get<std::string>() << " (partial report)\n";
  std::cerr << "verify: " << (status == exit_pass ? "PASS" : "FAIL") << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gspecht: graded Specht modules of cyclotomic Hecke algebras"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--e", c.e, "quantum characteristic (0 or >= 2)");
    sub->add_option("--p", c.p, "prime with e | p-1 (default: smallest such p >= 5)");
    sub->add_option("--charge", c.charge_text, "charge k_1,...,k_l");
    sub->add_option("--level", c.level, "level l (default: length of the charge)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", c.out, "write output to this file");
  };
  auto with_mu = [&](CLI::App* sub) {
    common(sub);
    sub->add_option_function<std::string>("--mu", [&](const std::string& s) {
      c.mu_text = s;
      c.mu_given = true;
    }, "multipartition, e.g. 3,1|_|4,2 (empty string: the empty multipartition)")->expected(0, 1)->default_str("");
  };

  auto* tab = app.add_subcommand("tableaux", "standard tableaux with residues, degrees and reduced words");
  with_mu(tab);
  auto* chr = app.add_subcommand("char", "graded character of S(mu)");
  with_mu(chr);
  auto* br = app.add_subcommand("branch", "graded branching table of S(mu)");
  with_mu(br);
  auto* ver = app.add_subcommand("verify", "run verification suites");
  common(ver);
  ver->add_option("--dmin", c.dmin, "smallest d for the algebra suites");
  ver->add_option("--dmax", c.dmax, "largest d");
  ver->add_option("--suite", c.suites, "combinatorics, hecke, specht, klr, branching or all")->delimiter(',');
  ver->add_option("--seed", c.seed, "seed for random checks");
  ver->add_option("--threads", c.threads, "worker threads (0: all cores; GSPECHT_THREADS overrides)");
  ver->add_option("--max-dim", c.max_dim, "refuse Hecke algebras of larger dimension");
  ver->add_option("--random-charges", c.random_charges, "extra seeded random charges for combinatorics");
  ver->add_option("--assoc-trials", c.assoc_trials, "random associativity trials per algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (c.format.empty()) c.format = (tab->parsed() || br->parsed()) ? "tsv" : "json";
    if (tab->parsed()) return cmd_tableaux(c);
    if (chr->parsed()) return cmd_char(c);
    if (br->parsed()) return cmd_branch(c);
    return cmd_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "gspecht: usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParameterError& e) {
    std::cerr << "gspecht: usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const ResourceError& e) {
    std::cerr << "gspecht: resource: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "gspecht: error: " << e.what() << '\n';
    return exit_fail;
  }
}
