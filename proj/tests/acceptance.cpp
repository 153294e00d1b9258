// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Each criterion also has a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "resolvent/verify.hpp"

using namespace resolvent;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    ok = false;
    notes.push_back("FAIL: " + why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<Graph> enumerated(int n_max) {
  std::vector<Graph> out;
  for (int n = 3; n <= n_max; ++n)
    for (int c = 1; c <= 3; ++c)
      if (n - 1 + c <= n * (n - 1) / 2)
        for (Graph& g : enumerate_connected(n, c, 4)) out.push_back(std::move(g));
  return out;
}

std::vector<FamilyId> thetas_up_to(int max_order) {
  std::vector<FamilyId> out;
  for (int p = 1; p <= max_order; ++p)
    for (int q = p; p + q <= max_order; ++q)
      for (int l = q; p + q + l - 1 <= max_order; ++l) {
        if (p == 1 && q == 1) continue;
        if (p + q + l - 1 >= 5) out.push_back(FamilyId::theta(p, q, l));
      }
  return out;
}

void report_results(Outcome& o, const std::vector<VerificationResult>& rs) {
  std::size_t passed = 0;
  for (const auto& r : rs) {
    if (r.passed()) ++passed;
    else o.fail(r.claim_id + " " + r.params + ": " + r.detail + (r.witness.empty() ? "" : " witness " + r.witness));
  }
  if (!rs.empty()) o.note(rs.front().claim_id + ": " + std::to_string(passed) + "/" + std::to_string(rs.size()) + " records pass");
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  std::size_t count = 0;
  auto check = [&](const Graph& g, const std::string& label) {
    const double r = std::abs(er_spectral(g) - to_double(er_exact(g)));
    worst = std::max(worst, r);
    ++count;
    if (r > 1e-9) o.fail(label + " residual " + std::to_string(r));
  };
  for (int n = 5; n <= 30; ++n)
    for (const FamilyId& id : families_at(n)) check(build_family(id), to_string(id));
  for (const FamilyId& id : thetas_up_to(30)) check(build_family(id), to_string(id));
  for (const Graph& g : enumerated(8)) check(g, graph6_encode(g));
  std::ostringstream s;
  s << count << " graphs, max |spectral - exact| = " << worst;
  o.note(s.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  report_results(o, verify_charpoly_identities(5, 40));
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& pair : documented_pairs()) {
    const int lo = std::max(5, pair.min_order), hi = 40;
    bool published_ok = true, positive = true;
    for (int n = lo; n <= hi; ++n) {
      const BigRational gap = er_difference(pair.first(n), pair.second(n));
      if (gap != pair.quotient(n)) published_ok = false;
      if (gap <= 0) positive = false;
    }
    if (published_ok && positive) {
      o.note(pair.id + " n=" + std::to_string(lo) + ".." + std::to_string(hi) + ": published quotient exact, positive");
      continue;
    }
    if (!positive) {
      o.fail(pair.id + ": difference not positive");
      continue;
    }
    const RecomputedQuotient rq = recompute_quotient(pair, lo, hi);
    const std::string line = pair.id + ": published quotient differs at " +
                             std::to_string(rq.mismatched_orders.size()) + " orders; recomputed numerator " +
                             to_string(rq.numerator) + " over n*g_A(n)*g_B(n)";
    if (rq.consistent && rq.positive) {
      o.note(line + " (consistent, positive)");
    } else {
      o.fail(line + (rq.consistent ? "" : " INCONSISTENT") + (rq.positive ? "" : " NOT POSITIVE"));
    }
  }
  return o;
}

Outcome criterion4(EnumerationCache& cache) {
  Outcome o;
  report_results(o, verify_unicyclic_max(4, 9, cache));
  report_results(o, verify_unicyclic_min(5, 9, cache));
  report_results(o, verify_bicyclic_max(5, 8, cache));
  report_results(o, verify_tricyclic_max(5, 8, cache));
  return o;
}

Outcome criterion5(EnumerationCache& cache) {
  Outcome o;
  for (const char* id : {"lem-2.1", "lem-2.4", "lem-3.1", "lem-4.1"}) report_results(o, verify_moment_lemmas(id, 5, 7, 30, cache));
  return o;
}

Outcome criterion6() {
  Outcome o;
  report_results(o, verify_root_claims());
  return o;
}

Outcome criterion7() {
  Outcome o;
  report_results(o, verify_gap_asymptotic(5, 200, 100));
  return o;
}

Outcome criterion8(EnumerationCache& cache) {
  Outcome o;
  std::vector<const Graph*> pool;
  for (int c = 1; c <= 3; ++c)
    for (const auto& s : cache.get(8, c)) pool.push_back(&s.graph);
  std::mt19937_64 rng(20240601);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(20);
  double worst_slack = 1e300;
  for (const Graph* g : pool) {
    const double ref = er_spectral(*g);
    for (int k : {10, 50, 300}) {
      const SeriesResult r = er_series(*g, k);
      const double err = std::abs(r.value - ref);
      worst_slack = std::min(worst_slack, r.tail_bound + 1e-9 - err);
      if (err > r.tail_bound + 1e-9) o.fail(graph6_encode(*g) + " K=" + std::to_string(k));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "20 graphs x 3 truncations; min slack %.3g", worst_slack);
  o.note(buf);
  return o;
}

Outcome criterion9() {
  Outcome o;
  int good = 0;
  for (int n = 5; n <= 50; ++n) {
    const Graph c = cycle_graph(n), s = build_family(FamilyId::cycle_star(n));
    const long bc = b2_coefficient(c), bs = b2_coefficient(s);
    const long fc = static_cast<long>(n) * (n - 3) / 2, fs = static_cast<long>(n - 3) * (n - 4) / 2 + 2L * n - 7;
    const auto un = static_cast<std::size_t>(n);
    const std::string tag = std::to_string(n);
    bool ok = true;
    if (bc != fc) ok = false, o.fail("b2(C_" + tag + ")=" + std::to_string(bc) + ", formula " + std::to_string(fc));
    if (bs != fs)
      ok = false, o.fail("b2(C_" + tag + "*)=" + std::to_string(bs) + ", formula " + std::to_string(fs) +
                          (quadrilateral_count(s) ? " (C_" + tag + "* contains a quadrilateral)" : ""));
    if (charpoly(c).coeff(un - 4) != bc) ok = false, o.fail("charpoly coefficient of C_" + tag);
    if (charpoly(s).coeff(un - 4) != bs) ok = false, o.fail("charpoly coefficient of C_" + tag + "*");
    good += ok ? 1 : 0;
  }
  o.note(std::to_string(good) + " of 46 orders in 5..50 satisfy both formulas and the coefficient identity");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::ostringstream counts;
  for (int n = 3; n <= 7; ++n)
    for (int c = 1; c <= 3; ++c) {
      const int m = n - 1 + c;
      if (m > n * (n - 1) / 2) continue;
      const oracle::NaiveClasses classes(n, m);
      const auto graphs = enumerate_connected(n, c, 4);
      std::set<int> hit;
      for (const Graph& g : graphs) {
        const int id = classes.classify(g);
        if (id < 0 || !hit.insert(id).second) o.fail("class collision at n=" + std::to_string(n));
      }
      if (static_cast<int>(graphs.size()) != classes.count)
        o.fail("n=" + std::to_string(n) + " c=" + std::to_string(c) + ": " + std::to_string(graphs.size()) +
               " vs oracle " + std::to_string(classes.count));
      counts << " (" << n << "," << c << ")=" << graphs.size();
    }
  std::size_t round_trips = 0;
  for (int n = 3; n <= 9; ++n)
    for (int c = 1; c <= 3; ++c)
      if (n - 1 + c <= n * (n - 1) / 2)
        for (const Graph& g : enumerate_connected(n, c, 4)) {
          ++round_trips;
          if (graph6_decode(graph6_encode(g)) != g) o.fail("round trip " + graph6_encode(g));
        }
  o.note("counts" + counts.str());
  o.note(std::to_string(round_trips) + " graph6 round trips (n<=9)");
  return o;
}

}  // namespace

int main() {
  EnumerationCache cache(4);
  struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cross-method agreement |er_spectral - er_exact| <= 1e-9", 120, criterion1},
      {2, "closed-form identities, n=5..40", 60, criterion2},
      {3, "difference quotients exact and positive, n=5..40", 60, criterion3},
      {4, "extremal graphs by enumeration", 600, [&] { return criterion4(cache); }},
      {5, "moment-dominance lemmas, n=5..7, kmax=30", 300, [&] { return criterion5(cache); }},
      {6, "Sturm root certificates", 10, criterion6},
      {7, "C_n vs C_n* gap, n=5..200, asymptotic -4/n^5", 120, criterion7},
      {8, "series truncation bound at n=8", 30, [&] { return criterion8(cache); }},
      {9, "b2 formulas for C_n and C_n*, n=5..50", 10, criterion9},
      {10, "enumeration vs naive oracle, graph6 round trip", 180, criterion10},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.fail("runtime " + std::to_string(secs) + " s exceeds budget");
    char head[256];
    std::snprintf(head, sizeof head, "%s criterion %2d: %s (%.2f s)", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    std::cout << head << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << "\n";
  return failed == 0 ? 0 : 1;
}
