// resolvent_lab: command-line front end for the resolvent-energy toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "resolvent/bigint.hpp"
#include "resolvent/charpoly.hpp"
#include "resolvent/closed_forms.hpp"
#include "resolvent/error.hpp"
#include "resolvent/families.hpp"
#include "resolvent/graph6.hpp"
#include "resolvent/spectra.hpp"
#include "resolvent/verify.hpp"

using namespace resolvent;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
};

struct Range {
  int lo = 0;
  int hi = 0;
  bool set = false;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw parse_error("bad n-range", used);
    } else {
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw parse_error("bad n-range", used);
      const std::string tail = text.substr(dots + 2);
      r.hi = std::stoi(tail, &used);
      if (used != tail.size()) throw parse_error("bad n-range", dots + 2 + used);
    }
  } catch (const std::logic_error&) {
    throw parse_error("expected A..B, got '" + text + "'", 0);
  }
  if (r.lo > r.hi) throw invalid_parameter("empty n-range " + text);
  r.set = true;
  return r;
}

struct Input {
  std::string label;
  Graph graph;
  std::optional<FamilyId> family;
};

Input parse_input(const std::string& text) {
  const bool family_like = text.starts_with("family:");
  if (family_like) {
    const FamilyId id = parse_family_spec(text);
    return {text, build_family(id), id};
  }
  return {text, graph6_decode(text), std::nullopt};
}

/// Graph arguments, or graph6 lines from stdin for "-".
std::vector<Input> collect_inputs(const std::vector<std::string>& args) {
  std::vector<Input> out;
  for (const auto& a : args) {
    if (a == "-") {
      for (Graph& g : read_graph6_lines(std::cin)) out.push_back({graph6_encode(g), std::move(g), std::nullopt});
    } else {
      out.push_back(parse_input(a));
    }
  }
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + c.out + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + c.out + "'");
}

std::string residual_text(double r) {
  if (r < 1e-9) return "residual<1e-9";
  std::ostringstream s;
  s.precision(3);
  s << "residual=" << r;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_er(const Common& c, const std::vector<std::string>& args) {
  json rows = json::array();
  std::string text;
  for (const auto& in : collect_inputs(args)) {
    const BigRational exact = er_exact(in.graph);
    const double residual = std::abs(er_spectral(in.graph) - to_double(exact));
    if (c.format == "json") {
      rows.push_back({{"input", in.label},
                      {"er_exact", to_string(exact)},
                      {"er_decimal", to_decimal(exact)},
                      {"residual", residual}});
    } else {
      text += to_string(exact) + "  " + to_decimal(exact) + "  " + residual_text(residual) + "\n";
    }
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : text);
  return 0;
}

int cmd_charpoly(const Common& c, const std::vector<std::string>& args, const std::string& method) {
  json rows = json::array();
  std::string text;
  for (const auto& in : collect_inputs(args)) {
    const IntPolynomial p = method == "deletion" ? charpoly_by_deletion(in.graph, 0) : charpoly(in.graph);
    json row{{"input", in.label}, {"charpoly", to_string(p)}};
    std::string line = to_string(p);
    if (in.family && published_core(in.family->tag, in.family->z_index)) {
      const IntPolynomial pub = family_charpoly(*in.family);
      row["published"] = to_string(pub);
      row["published_match"] = pub == p;
      line += "  published_match=" + std::string(pub == p ? "true" : "false");
    }
    rows.push_back(std::move(row));
    text += line + "\n";
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : text);
  return 0;
}

int cmd_moments(const Common& c, const std::vector<std::string>& args, int kmax) {
  json rows = json::array();
  std::string text = "input,k,M_k\n";
  for (const auto& in : collect_inputs(args)) {
    const auto m = spectral_moments(in.graph, kmax);
    json values = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) {
      values.push_back(m[k].str());
      text += csv_field(in.label) + "," + std::to_string(k) + "," + m[k].str() + "\n";
    }
    rows.push_back({{"input", in.label}, {"moments", std::move(values)}});
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : text);
  return 0;
}

FamilyId family_at(const std::string& name, int n) {
  const std::string spec = (name.starts_with("family:") ? name : "family:" + name) + ":" + std::to_string(n);
  return parse_family_spec(spec);
}

int cmd_compare(const Common& c, const std::vector<std::string>& names, Range range) {
  if (names.size() < 2) throw invalid_parameter("compare needs at least two family names");
  std::vector<const DocumentedPair*> pairs;
  for (std::size_t i = 1; i < names.size(); ++i) {
    const FamilyId a = family_at(names[0], 9), b = family_at(names[i], 9);
    const DocumentedPair* p = find_documented_pair(a, b);
    if (!p) {
      std::string listing;
      for (const auto& d : documented_pairs()) listing += (listing.empty() ? "" : ", ") + d.id;
      throw invalid_parameter("no documented quotient for " + names[0] + " vs " + names[i] +
                              "; documented pairs: " + listing);
    }
    pairs.push_back(p);
  }
  if (!range.set) range = {5, 10, true};

  bool all_match = true;
  json rows = json::array();
  std::string text = "pair,n,er_first,er_second,difference,published,formula_match,positive\n";
  for (const auto* p : pairs) {
    for (int n = std::max(range.lo, p->min_order); n <= range.hi; ++n) {
      const FamilyId a = p->first(n), b = p->second(n);
      const BigRational ea = er_exact(build_family(a)), eb = er_exact(build_family(b));
      const BigRational diff = ea - eb, pub = p->quotient(n);
      const bool match = diff == pub, positive = diff > 0;
      all_match = all_match && match && positive;
      rows.push_back({{"pair", p->id},
                      {"n", n},
                      {"er_first", to_string(ea)},
                      {"er_second", to_string(eb)},
                      {"difference", to_string(diff)},
                      {"published", to_string(pub)},
                      {"formula_match", match},
                      {"positive", positive}});
      text += p->id + "," + std::to_string(n) + "," + to_string(ea) + "," + to_string(eb) + "," + to_string(diff) +
              "," + to_string(pub) + "," + (match ? "true" : "false") + "," + (positive ? "true" : "false") + "\n";
    }
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : text);
  return all_match ? 0 : 1;
}

int cmd_enumerate(const Common& c, int n, int cyc, const std::string& graphs_out, bool timing) {
  EnumerationCache cache(c.jobs);
  const EnumerationReport r = enumeration_report(n, cyc, cache);
  if (!graphs_out.empty()) {
    std::ofstream f(graphs_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + graphs_out + "'");
    for (const auto& s : cache.get(n, cyc)) f << s.code << '\n';
    if (!f) throw std::runtime_error("write failed for '" + graphs_out + "'");
  }
  json j{{"n", r.n}, {"c", r.c}, {"count", r.count}, {"argmax_er", r.argmax_er}, {"argmin_er", r.argmin_er}};
  j["argmax_er_bipartite"] = r.argmax_er_bipartite ? json(*r.argmax_er_bipartite) : json(nullptr);
  if (timing) j["elapsed"] = r.elapsed;
  std::cerr << "enumerated " << r.count << " classes in " << r.elapsed << " s\n";
  if (c.format == "csv") {
    emit(c, "n,c,count,argmax_er,argmin_er,argmax_er_bipartite\n" + std::to_string(r.n) + "," + std::to_string(r.c) +
                "," + std::to_string(r.count) + "," + csv_field(r.argmax_er) + "," + csv_field(r.argmin_er) + "," +
                csv_field(r.argmax_er_bipartite.value_or("")) + "\n");
  } else {
    emit(c, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& claim, Range range, const ClaimOptions& opt) {
  std::vector<const ClaimInfo*> claims;
  if (claim == "all") {
    for (const auto& info : claim_registry()) claims.push_back(&info);
  } else if (const ClaimInfo* info = find_claim(claim)) {
    claims.push_back(info);
  } else {
    std::cerr << "error: unknown claim '" << claim << "'\nregistry: " << registry_listing() << "\n";
    return 2;
  }

  EnumerationCache cache(c.jobs);
  std::vector<VerificationResult> results;
  for (const auto* info : claims) {
    const int lo = range.set ? range.lo : info->default_lo, hi = range.set ? range.hi : info->default_hi;
    auto part = run_claim(info->id, lo, hi, opt, cache);
    results.insert(results.end(), part.begin(), part.end());
  }

  bool ok = true;
  json rows = json::array();
  std::string text = "claim_id,params,status,witness,detail,paper_ref\n";
  for (const auto& r : results) {
    ok = ok && r.passed();
    rows.push_back({{"claim_id", r.claim_id},
                    {"params", r.params},
                    {"status", to_string(r.status)},
                    {"witness", r.witness},
                    {"detail", r.detail},
                    {"paper_ref", r.paper_ref}});
    text += csv_field(r.claim_id) + "," + csv_field(r.params) + "," + to_string(r.status) + "," + csv_field(r.witness) +
            "," + csv_field(r.detail) + "," + csv_field(r.paper_ref) + "\n";
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : text);
  return ok ? 0 : 1;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("RESOLVENT_LAB_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolvent energy of graphs: exact values, closed forms and claim verification"};
  app.require_subcommand(1);

  Common common;
  common.jobs = default_jobs();
  std::string range_text;
  int kmax = 30;
  auto add_common = [&](CLI::App* sub, bool with_range) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "Write the report to PATH instead of stdout");
    sub->add_option("--jobs", common.jobs, "Worker threads (default: $RESOLVENT_LAB_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    if (with_range) sub->add_option("--n-range", range_text, "Inclusive order range A..B");
  };

  std::vector<std::string> graphs;
  auto* er = app.add_subcommand("er", "Exact and decimal resolvent energy");
  er->add_option("graphs", graphs, "graph6 text, family:NAME:n, or - for graph6 lines on stdin")->required();
  add_common(er, false);

  std::string method = "flm";
  auto* cp = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  cp->add_option("graphs", graphs, "graph6 text, family:NAME:n, or -")->required();
  cp->add_option("--method", method, "flm (Faddeev-LeVerrier) or deletion")
      ->check(CLI::IsMember({"flm", "deletion"}));
  add_common(cp, false);

  auto* mo = app.add_subcommand("moments", "Exact spectral moments M_0..M_K");
  mo->add_option("graphs", graphs, "graph6 text, family:NAME:n, or -")->required();
  mo->add_option("--kmax", kmax, "Largest moment order")->check(CLI::NonNegativeNumber);
  add_common(mo, false);

  std::vector<std::string> families;
  auto* cmp = app.add_subcommand("compare", "ER differences against the published quotients");
  cmp->add_option("families", families, "First family, then one or more to compare against (e.g. Z1 Z2 Z3)")
      ->required();
  add_common(cmp, true);

  int en_n = 0, en_c = 1;
  std::string graphs_out;
  bool timing = false;
  auto* en = app.add_subcommand("enumerate", "Connected graphs with cyclomatic number c, one per class");
  en->add_option("--n", en_n, "Order")->required();
  en->add_option("--c", en_c, "Cyclomatic number (1..3)")->required();
  en->add_option("--graphs", graphs_out, "Write sorted canonical graph6 lines to PATH");
  en->add_flag("--timing", timing, "Include elapsed seconds in the report");
  add_common(en, false);

  std::string claim;
  std::vector<std::string> kv;
  auto* ve = app.add_subcommand("verify", "Run a registry claim (or all) and report JSON records");
  ve->add_option("claim", claim, "Claim id or 'all'")->required();
  ve->add_option("--kmax", kmax, "Largest moment order for the lemmas");
  ve->add_option("--option", kv, "Claim option key=value (kmax, n)");
  add_common(ve, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Range range;
    if (!range_text.empty()) range = parse_range(range_text);
    if (app.got_subcommand(er)) return cmd_er(common, graphs);
    if (app.got_subcommand(cp)) return cmd_charpoly(common, graphs, method);
    if (app.got_subcommand(mo)) return cmd_moments(common, graphs, kmax);
    if (app.got_subcommand(cmp)) return cmd_compare(common, families, range);
    if (app.got_subcommand(en)) {
      if (!en->count("--format")) common.format = "json";
      return cmd_enumerate(common, en_n, en_c, graphs_out, timing);
    }
    if (app.got_subcommand(ve)) {
      if (!ve->count("--format")) common.format = "json";
      ClaimOptions opt;
      opt.kmax = kmax;
      opt.jobs = common.jobs;
      for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value in --option", 0);
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (key == "kmax") opt.kmax = value;
        else if (key == "n") opt.asymptotic_n = value;
        else throw invalid_parameter("unknown option '" + key + "' (expected kmax or n)");
      }
      return cmd_verify(common, claim, range, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
