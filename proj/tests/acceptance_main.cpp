// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Each criterion pins its own trial counts, degree bounds and tolerances;
// every check is exact (zero counterexamples allowed).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wzt/harness.hpp"
#include "wzt/instances.hpp"
#include "wzt/permutation.hpp"

namespace {

using wzt::Permutation;

struct Criterion {
  int id;
  std::string text;
  std::function<bool(std::string&)> run;
};

// Independent strand-doubling model (duplicated from the unit tests on
// purpose; the acceptance oracle must not share code with the library path
// it validates).
Permutation strand_double_oracle(const Permutation& g, int k) {
  const int n = g.degree();
  const int gk = g(k);
  std::vector<int> im(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n + 1; ++m) {
    int source = m <= k ? m : (m == k + 1 ? k : m - 1);
    int value;
    if (source == k) {
      value = (m == k) ? gk : gk + 1;
    } else {
      int img = g(source);
      value = img < gk ? img : img + 1;
    }
    im[static_cast<size_t>(m) - 1] = value;
  }
  return Permutation(std::move(im));
}

wzt::Report run(const std::string& instance, const std::string& suite, int trials,
                int max_degree, int size_bound, std::uint64_t seed) {
  wzt::TrialConfig cfg;
  cfg.instance = instance;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.max_degree = max_degree;
  cfg.size_bound = size_bound;
  cfg.seed = seed;
  return wzt::run_suite(cfg);
}

// Requires the named properties to exist with zero failures and a healthy
// number of executed (non-skipped) trials; appends details to `why`
// otherwise.
bool require_clean(const wzt::Report& report, const std::vector<std::string>& names,
                   std::string& why) {
  bool ok = true;
  for (const std::string& name : names) {
    auto it = std::find_if(report.properties.begin(), report.properties.end(),
                           [&](const wzt::PropertyResult& p) { return p.name == name; });
    if (it == report.properties.end()) {
      why += " [missing property " + name + "]";
      ok = false;
      continue;
    }
    if (it->failed != 0) {
      why += " [" + name + ": fail=" + std::to_string(it->failed) + " e.g. " +
             it->first_counterexample + "]";
      ok = false;
    }
    // Exhaustive sweeps are not trials-scaled; everything else must have
    // executed most of its trials (positivity sampling may skip a few).
    bool exhaustive = name.find("exhaustive") != std::string::npos;
    long minimum = exhaustive ? 1 : report.config.trials / 2;
    if (it->passed < minimum) {
      why += " [" + name + ": only " + std::to_string(it->passed) + " of " +
             std::to_string(report.config.trials) + " trials ran]";
      ok = false;
    }
  }
  return ok;
}

bool criterion_axioms(std::string& why) {
  bool ok = true;
  for (const char* instance : {"bv", "bf", "v", "f", "dirpow"}) {
    wzt::Report report = run(instance, "axioms", 1000, 7, 20, 1001);
    std::vector<std::string> names{"axiom1-product", "axiom2-commutation",
                                   "axiom3-projection"};
    if (std::string(instance) == "v" || std::string(instance) == "f")
      names.push_back("axioms-exhaustive(n<=4)");
    if (!require_clean(report, names, why)) {
      why += " [instance " + std::string(instance) + "]";
      ok = false;
    }
  }
  return ok;
}

bool criterion_sigma_oracle(std::string& why) {
  long cases = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
    do {
      Permutation g(im);
      for (int k = 1; k <= n; ++k) {
        ++cases;
        if (!(wzt::sigma_expand(g, k) == strand_double_oracle(g, k))) {
          why = "mismatch at g=" + g.to_text() + " k=" + std::to_string(k);
          return false;
        }
      }
    } while (std::next_permutation(im.begin(), im.end()));
  }
  why = std::to_string(cases) + " cases";
  return true;
}

bool criterion_dehornoy(std::string& why) {
  wzt::Report order = run("bv", "braid", 500, 6, 20, 1003);
  bool ok = require_clean(order,
                          {"sign-trichotomy", "dehornoy-transitive",
                           "dehornoy-left-invariant"},
                          why);
  wzt::Report reduction = run("bv", "braid", 1000, 6, 20, 1004);
  ok = require_clean(reduction, {"handle-reduction-sound"}, why) && ok;
  return ok;
}

bool criterion_compatibility(std::string& why) {
  wzt::Report braid = run("bv", "braid", 500, 6, 20, 1005);
  bool ok = require_clean(braid, {"positivity-stable-under-cloning"}, why);
  wzt::Report pure = run("bf", "comb", 300, 5, 20, 1006);
  ok = require_clean(pure, {"purebraid-positivity-under-cloning"}, why) && ok;
  return ok;
}

bool criterion_positive_cone(std::string& why) {
  wzt::Report bv = run("bv", "order", 500, 4, 10, 1007);
  bool ok = require_clean(bv, {"cone-product-closure", "compare-left-invariant"}, why);
  wzt::Report bf = run("bf", "order", 500, 4, 8, 1008);
  ok = require_clean(bf, {"compare-right-invariant", "compare-left-invariant"}, why) && ok;
  wzt::Report dp = run("dirpow", "order", 500, 5, 10, 1009);
  ok = require_clean(dp, {"compare-right-invariant", "compare-left-invariant"}, why) && ok;
  return ok;
}

bool criterion_combing(std::string& why) {
  wzt::Report report = run("bf", "comb", 300, 5, 20, 1010);
  return require_clean(report, {"comb-recomposition"}, why);
}

bool criterion_magnus(std::string& why) {
  wzt::Report pairs = run("bf", "magnus", 1000, 4, 20, 1011);
  bool ok = require_clean(pairs,
                          {"magnus-bi-invariant", "magnus-total-antisymmetric",
                           "magnus-transitive"},
                          why);
  wzt::Report mult = run("bf", "magnus", 300, 4, 20, 1012);
  ok = require_clean(mult, {"magnus-expand-multiplicative"}, why) && ok;
  return ok;
}

bool criterion_group_laws(std::string& why) {
  bool ok = true;
  for (const char* instance : {"f", "v", "bv", "bf", "dirpow"}) {
    wzt::Report laws = run(instance, "engine", 500, 6, 10, 1013);
    if (!require_clean(laws, {"group-laws"}, why)) {
      why += " [instance " + std::string(instance) + "]";
      ok = false;
    }
    wzt::Report expansions = run(instance, "engine", 200, 6, 10, 1014);
    if (!require_clean(expansions, {"expansion-equivalence"}, why)) {
      why += " [instance " + std::string(instance) + "]";
      ok = false;
    }
  }
  return ok;
}

bool criterion_structure_maps(std::string& why) {
  wzt::Report bv = run("bv", "engine", 300, 4, 8, 1015);
  bool ok = require_clean(bv, {"projection-homomorphism"}, why);
  for (const char* instance : {"bf", "dirpow"}) {
    wzt::Report semi = run(instance, "engine", 300, 4, 8, 1016);
    if (!require_clean(semi, {"semidirect-factorization"}, why)) {
      why += " [instance " + std::string(instance) + "]";
      ok = false;
    }
  }
  for (const char* instance : {"f", "bf", "dirpow"}) {
    wzt::Report conj = run(instance, "engine", 200, 4, 8, 1017);
    if (!require_clean(conj, {"tree-subgroup-conjugacy"}, why)) {
      why += " [instance " + std::string(instance) + "]";
      ok = false;
    }
  }
  return ok;
}

bool criterion_determinism(std::string& why) {
  for (const char* instance : {"bv", "bf"}) {
    wzt::Report a = run(instance, "all", 60, 4, 8, 4242);
    wzt::Report b = run(instance, "all", 60, 4, 8, 4242);
    if (a.render_text() != b.render_text() || a.render_json() != b.render_json()) {
      why = std::string("reports differ for instance ") + instance;
      return false;
    }
    if (!a.all_passed()) {
      why = std::string("suite failure on instance ") + instance;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "cloning axioms: 1000 trials/instance (n<=7, len<=20), exhaustive v,f (n<=4)",
       criterion_axioms},
      {2, "strand-doubling expansion equals the independent model, all g in S_n, n<=5",
       criterion_sigma_oracle},
      {3, "Dehornoy order: trichotomy/transitivity/left-invariance (500), reduction sound (1000)",
       criterion_dehornoy},
      {4, "cloning keeps positives positive: braid words (500), pure braids (300, n<=5)",
       criterion_compatibility},
      {5, "positive cone: closure+left-invariance in BV (500); right-invariance in BF, dirpow (500)",
       criterion_positive_cone},
      {6, "Artin combing recomposes: 300 random pure braids (n<=5, len<=20)",
       criterion_combing},
      {7, "Magnus order: invariance/totality on 1000 pairs (rank<=4, len<=20), multiplicativity (300)",
       criterion_magnus},
      {8, "group laws in the tree-diagram engine: 500 triples + 200 expansion checks per instance",
       criterion_group_laws},
      {9, "structure maps: projection hom (300), semidirect factorization (300), conjugacy (200)",
       criterion_structure_maps},
      {10, "determinism: fixed seed gives byte-identical reports", criterion_determinism},
  };

  int failures = 0;
  auto total_start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s %s (%.1fs)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.text.c_str(),
                seconds, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  std::printf("%d/10 criteria passed (%.1fs total)\n", 10 - failures, total);
  return failures == 0 ? 0 : 1;
}
