// Command-line front end: count tables as CSV, graded-ring and chart
// reports as JSON, randomized identity suites, and the bundled
// verification profiles. Reports are deterministic for a fixed seed and
// config; only the elapsed_ms fields vary between runs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinlm/identities.hpp"
#include "spinlm/localmodel.hpp"
#include "spinlm/random.hpp"
#include "spinlm/repthy.hpp"
#include "spinlm/rings.hpp"

using nlohmann::ordered_json;
using namespace spinlm;

namespace {

constexpr const char* kToolVersion = "1.0.0";

const QQ Q;

// ---- report plumbing ----

struct Record {
  std::string name;
  ordered_json params;
  ordered_json expected;
  ordered_json actual;
  bool pass = false;
  long elapsed_ms = 0;
};

struct Report {
  std::string command;
  ordered_json config;
  std::vector<Record> records;
  bool budget_hit = false;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Runs one check; a budget overrun is recorded and remembered so the whole
// command can exit with the partial-report code.
template <class Fn>
bool add_record(Report& rep, const std::string& name, ordered_json params,
                Fn&& fn) {
  Record rec;
  rec.name = name;
  rec.params = std::move(params);
  Timer t;
  try {
    fn(rec);
  } catch (const budget_error& e) {
    rec.actual = std::string("budget exceeded: ") + e.what();
    rec.pass = false;
    rep.budget_hit = true;
  }
  rec.elapsed_ms = t.ms();
  rep.records.push_back(std::move(rec));
  return !rep.budget_hit;
}

int emit_report(const Report& rep, const std::string& out_path) {
  bool overall = !rep.budget_hit;
  ordered_json recs = ordered_json::array();
  for (const Record& r : rep.records) {
    overall = overall && r.pass;
    recs.push_back(ordered_json{{"name", r.name},
                                {"params", r.params},
                                {"expected", r.expected},
                                {"actual", r.actual},
                                {"pass", r.pass},
                                {"elapsed_ms", r.elapsed_ms}});
  }
  ordered_json doc{{"tool", "spinlm"},
                   {"version", kToolVersion},
                   {"command", rep.command},
                   {"config", rep.config},
                   {"records", recs},
                   {"overall_pass", overall}};
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
    std::cout << "report written to " << out_path << ": "
              << (overall ? "pass" : "fail") << "\n";
  }
  if (rep.budget_hit) return 3;
  return overall ? 0 : 1;
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  f << text;
  std::cout << "table written to " << out_path << "\n";
  return 0;
}

// ---- shared option state ----

struct Options {
  int N = 2;
  int n = 0, i = 0;  // 0,0 means "the built-in chart list"
  std::string variant = "naive";
  std::string field = "Q";
  int max_degree = -1;  // command-specific default when negative
  long budget_monomials = 0;
  uint64_t seed = kDefaultSeed;
  std::string out;
  std::string profile = "desk";
  std::string lambda;
};

Variant parse_variant(const std::string& s) {
  if (s == "naive") return Variant::naive;
  if (s == "plus") return Variant::plus;
  if (s == "minus") return Variant::minus;
  throw CLI::ValidationError("--variant", "must be naive, plus or minus");
}

// Field spec is "Q" or "Fp:<odd prime>"; the environment variable
// SPINLM_BUDGET, when set, overrides the monomial budget cap.
uint32_t parse_field_prime(const std::string& s) {
  if (s == "Q") return 0;
  if (s.rfind("Fp:", 0) == 0) {
    try {
      unsigned long p = std::stoul(s.substr(3));
      GFp probe(static_cast<uint32_t>(p));  // validates odd prime
      return probe.p;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--field", "bad modulus in " + s);
    }
  }
  throw CLI::ValidationError("--field", "must be Q or Fp:<p>");
}

Budget budget_from(const Options& opt, int default_degree) {
  Budget b;
  b.max_degree = opt.max_degree >= 0 ? opt.max_degree : default_degree;
  if (opt.budget_monomials > 0) b.max_monomials = opt.budget_monomials;
  if (const char* env = std::getenv("SPINLM_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_monomials = v;
  }
  return b;
}

Partition parse_lambda(const std::string& s) {
  Partition out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    out.push_back(std::atoi(part.c_str()));
  if (!is_valid_partition(out) || out.empty())
    throw CLI::ValidationError("--lambda", "not a partition: " + s);
  return out;
}

std::string lambda_str(const Partition& p) {
  std::string s;
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p[k]);
  }
  return s;
}

void attach_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--N", opt.N, "matrix size");
  cmd->add_option("--n", opt.n, "chart parameter n");
  cmd->add_option("--i", opt.i, "chart parameter i");
  cmd->add_option("--variant", opt.variant, "naive, plus or minus");
  cmd->add_option("--field", opt.field, "Q or Fp:<p>");
  cmd->add_option("--max-degree", opt.max_degree, "top graded degree");
  cmd->add_option("--budget-monomials", opt.budget_monomials,
                  "ambient monomial cap per slice");
  cmd->add_option("--seed", opt.seed, "seed for randomized checks");
  cmd->add_option("--out", opt.out, "write the report to this path");
  cmd->add_option("--profile", opt.profile, "smoke or desk");
  cmd->add_option("--lambda", opt.lambda, "partition, e.g. 2,1");
}

// ---- tableaux count ----

int run_tableaux_count(const Options& opt) {
  int cells = opt.max_degree >= 0 ? opt.max_degree : 4;
  std::vector<Partition> shapes;
  if (!opt.lambda.empty()) {
    shapes.push_back(parse_lambda(opt.lambda));
  } else {
    for (int s = 1; s <= cells; ++s)
      for (const Partition& p : partitions_of(s)) shapes.push_back(p);
  }
  std::string csv = "N,lambda,count_GL,count_ON,count_SON\n";
  for (const Partition& p : shapes) {
    long gl = static_cast<long>(enumerate_gl_standard(p, opt.N).size());
    long on = static_cast<long>(enumerate_on_standard(p, opt.N).size());
    std::string son;  // defined only for even N
    if (opt.N % 2 == 0)
      son = std::to_string(enumerate_so_standard(p, opt.N).size());
    csv += std::to_string(opt.N) + ",\"" + lambda_str(p) + "\"," +
           std::to_string(gl) + "," + std::to_string(on) + "," + son + "\n";
  }
  return emit_text(csv, opt.out);
}

// ---- ring dims / ring verify ----

template <class F>
void ring_dims_records(const F& field, const Options& opt, Report& rep) {
  int dmax = opt.max_degree >= 0 ? opt.max_degree : 5;
  GradedRing<F> ring(field, IdealSpec{opt.N, MatrixForm::J, parse_variant(opt.variant)},
                     budget_from(opt, 5));
  std::string dims_line = "dims";
  for (int d = 0; d <= dmax; ++d) {
    bool cont = add_record(
        rep, "graded slice",
        ordered_json{{"N", opt.N}, {"variant", opt.variant},
                     {"field", field.name()}, {"degree", d}},
        [&](Record& rec) {
          long mono = ring.monomial_count(d);
          long rank = ring.ideal_rank(d);
          long dim = ring.quotient_dim(d);
          rec.expected = ordered_json{{"dim", mono - rank}};
          rec.actual = ordered_json{{"monomials", mono}, {"ideal_rank", rank},
                                    {"dim", dim}};
          rec.pass = (dim == mono - rank);
          dims_line += (d == 0 ? " " : ",") + std::to_string(dim);
        });
    if (!cont) return;
  }
  std::cout << dims_line << "\n";
}

template <class F>
void ring_verify_records(const F& field, const Options& opt, Report& rep) {
  int dmax = opt.max_degree >= 0 ? opt.max_degree : 3;
  add_record(rep, "standard pair basis",
             ordered_json{{"N", opt.N}, {"variant", opt.variant},
                          {"field", field.name()}, {"max_degree", dmax}},
             [&](Record& rec) {
               auto verdicts = verify_standard_basis(
                   field, opt.N, parse_variant(opt.variant), dmax,
                   budget_from(opt, std::max(dmax, 5)));
               ordered_json vs = ordered_json::array();
               bool all = true;
               for (const BasisVerdict& v : verdicts) {
                 all = all && v.pass;
                 vs.push_back(ordered_json{{"degree", v.degree},
                                           {"standard_count", v.standard_count},
                                           {"quotient_dim", v.quotient_dim},
                                           {"independent", v.independent},
                                           {"pass", v.pass}});
               }
               rec.expected = "counts match dims, rows independent";
               rec.actual = vs;
               rec.pass = all;
             });
}

template <class Fn>
int with_field(const Options& opt, Fn&& fn) {
  uint32_t p = parse_field_prime(opt.field);
  if (p == 0) {
    fn(Q);
  } else {
    GFp F(p);
    fn(F);
  }
  return 0;
}

// ---- chart verify ----

ordered_json chart_object(int n, int i) {
  ChartConfig cfg{n, i};
  bool lm2 = derive_lm2(cfg).ok;
  bool lm3 = derive_lm3(cfg).ok;
  bool wedge = verify_prop_wedge(cfg).ok &&
               wedge_lattice_basis(cfg, +1).ok && wedge_lattice_basis(cfg, -1).ok;
  bool sign = verify_prop_sign(cfg).ok;
  bool pres = true;
  long free_vars = static_cast<long>(n - 2 * i) * (n + 2 * i - 1) / 2;
  if (i >= 1) {
    // All three quotient variants must match the chart equations.
    for (Variant v : {Variant::naive, Variant::plus, Variant::minus}) {
      auto p = build_chart_presentation(cfg, v);
      pres = pres && p.ok;
      free_vars = p.free_count;
    }
  }
  return ordered_json{{"lm2_ok", lm2},           {"lm3_ok", lm3},
                      {"wedge_ok", wedge},       {"sign_ok", sign},
                      {"presentation_match", pres}, {"free_vars", free_vars}};
}

void chart_records(const Options& opt, Report& rep) {
  std::vector<std::pair<int, int>> configs;
  if (opt.n > 0)
    configs.emplace_back(opt.n, opt.i);
  else
    configs = {{2, 1}, {3, 1}, {4, 1}, {4, 2}};
  for (auto [n, i] : configs) {
    validate_chart(ChartConfig{n, i});
    add_record(rep, "chart", ordered_json{{"n", n}, {"i", i}},
               [&, n = n, i = i](Record& rec) {
                 ordered_json actual = chart_object(n, i);
                 ordered_json expected = actual;
                 for (auto& [k, v] : expected.items())
                   if (v.is_boolean()) v = true;
                 expected["free_vars"] =
                     static_cast<long>(n - 2 * i) * (n + 2 * i - 1) / 2;
                 rec.expected = expected;
                 rec.actual = actual;
                 rec.pass = (expected == actual);
               });
  }
}

// ---- identities run ----

template <class F>
bool identity_round(const F& field, Rng& rng, const char* family) {
  std::string fam(family);
  if (fam == "laplace") {
    int d = static_cast<int>(rng.uniform(1, 6));
    auto A = random_matrix(field, rng, d, d);
    int k = static_cast<int>(rng.uniform(0, d));
    const auto& pool = subsets_of(d, k);
    return check_laplace(field, A,
                         pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)]);
  }
  if (fam == "product") {
    int m = static_cast<int>(rng.uniform(1, 6));
    int inner = static_cast<int>(rng.uniform(1, 6));
    int c = static_cast<int>(rng.uniform(1, 6));
    auto A = random_matrix(field, rng, m, inner);
    auto B = random_matrix(field, rng, inner, c);
    int k = static_cast<int>(rng.uniform(1, std::min(m, c)));
    const auto& rows = subsets_of(m, k);
    const auto& cols = subsets_of(c, k);
    return check_binet_cauchy(
        field, A, B, rows[rng.uniform(0, static_cast<long>(rows.size()) - 1)],
        cols[rng.uniform(0, static_cast<long>(cols.size()) - 1)]);
  }
  int d = static_cast<int>(rng.uniform(2, 6));
  auto A = random_invertible(field, rng, d);
  int p = static_cast<int>(rng.uniform(1, d));
  const auto& pool = subsets_of(d, p);
  return check_jacobi(field, A,
                      pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)],
                      pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)])
      .ok();
}

template <class F>
void identity_records(const F& field, const Options& opt, Report& rep, int rounds) {
  int fi = 0;
  for (const char* family : {"laplace", "product", "inverse-minors"}) {
    ++fi;
    add_record(rep, std::string("identity: ") + family,
               ordered_json{{"field", field.name()}, {"rounds", rounds},
                            {"seed", opt.seed}},
               [&](Record& rec) {
                 Rng rng(opt.seed + static_cast<uint64_t>(fi) * 1000 +
                         field.characteristic());
                 int good = 0;
                 for (int r = 0; r < rounds; ++r)
                   if (identity_round(field, rng, family)) ++good;
                 rec.expected = rounds;
                 rec.actual = good;
                 rec.pass = (good == rounds);
               });
  }
}

// ---- repn table ----

int run_repn_table(const Options& opt) {
  int cells = opt.max_degree >= 0 ? opt.max_degree : 4;
  std::string csv = "N,lambda,dim_M,dim_O,count_ON_standard,match\n";
  for (const RepnRow& row : repn_table(opt.N, cells))
    csv += std::to_string(row.N) + ",\"" + lambda_str(row.lambda) + "\"," +
           std::to_string(row.dim_M) + "," + std::to_string(row.dim_O) + "," +
           std::to_string(row.count_ON) + "," + (row.match ? "1" : "0") + "\n";
  return emit_text(csv, opt.out);
}

// ---- verify-all ----

void verify_all_records(const Options& opt, Report& rep, bool desk) {
  // Spin quotient dimensions at size 2.
  const std::vector<long> two_line{1, 2, 2, 2, 2, 2};
  int dmax2 = desk ? 5 : 3;
  for (Variant v : {Variant::plus, Variant::minus}) {
    std::string vs = (v == Variant::plus) ? "plus" : "minus";
    add_record(rep, "size-2 spin dims",
               ordered_json{{"variant", vs}, {"field", "Q"}},
               [&](Record& rec) {
                 GradedRing<QQ> r(Q, IdealSpec{2, MatrixForm::J, v});
                 std::vector<long> dims;
                 for (int d = 0; d <= dmax2; ++d) dims.push_back(r.quotient_dim(d));
                 rec.expected = std::vector<long>(two_line.begin(),
                                                  two_line.begin() + dmax2 + 1);
                 rec.actual = dims;
                 rec.pass = (rec.expected == rec.actual);
               });
    if (desk) {
      for (uint32_t p : {3u, 5u}) {
        add_record(rep, "size-2 spin dims",
                   ordered_json{{"variant", vs}, {"field", "Fp:" + std::to_string(p)}},
                   [&](Record& rec) {
                     GFp F(p);
                     GradedRing<GFp> r(F, IdealSpec{2, MatrixForm::J, v});
                     std::vector<long> dims;
                     for (int d = 0; d <= 5; ++d) dims.push_back(r.quotient_dim(d));
                     rec.expected = two_line;
                     rec.actual = dims;
                     rec.pass = (rec.expected == rec.actual);
                   });
      }
    }
  }

  // Exhaustive sign and window combinatorics.
  int nmax = desk ? 6 : 4;
  add_record(rep, "subset sign closed form", ordered_json{{"n_max", nmax}},
             [&](Record& rec) {
               long cases = 0, bad = 0;
               for (int n = 1; n <= nmax; ++n)
                 for (const Subset& S : subsets_of(2 * n, n)) {
                   ++cases;
                   if (sign_sigma(S, n) != sign_sigma_formula(S, n)) ++bad;
                 }
               rec.expected = ordered_json{{"mismatches", 0}};
               rec.actual = ordered_json{{"cases", cases}, {"mismatches", bad}};
               rec.pass = (bad == 0);
             });
  add_record(rep, "depth comparison window rule", ordered_json{{"n_max", nmax}},
             [&](Record& rec) {
               long cases = 0, bad = 0;
               for (int n = 1; n <= nmax; ++n)
                 for (int i = 0; i <= n; ++i)
                   for (const Subset& S : subsets_of(2 * n, n)) {
                     ++cases;
                     DComparison r = d_comparison_predicate(S, n, i);
                     if ((r.cmp <= 0) != r.window_rule) ++bad;
                   }
               rec.expected = ordered_json{{"mismatches", 0}};
               rec.actual = ordered_json{{"cases", cases}, {"mismatches", bad}};
               rec.pass = (bad == 0);
             });

  // Randomized determinant identities.
  int rounds = desk ? 100 : 10;
  identity_records(Q, opt, rep, rounds);
  if (desk) {
    GFp F5(5), F7(7);
    identity_records(F5, opt, rep, rounds);
    identity_records(F7, opt, rep, rounds);
  }

  // Standard pair bases against quotient dimensions.
  struct Job { int N; Variant v; const char* vs; int dmax; };
  std::vector<Job> jobs;
  if (desk)
    jobs = {{2, Variant::naive, "naive", 5}, {2, Variant::plus, "plus", 5},
            {2, Variant::minus, "minus", 5}, {3, Variant::naive, "naive", 4},
            {4, Variant::naive, "naive", 3}, {4, Variant::plus, "plus", 3},
            {4, Variant::minus, "minus", 3}};
  else
    jobs = {{2, Variant::naive, "naive", 3}, {2, Variant::plus, "plus", 3},
            {2, Variant::minus, "minus", 3}};
  auto basis_record = [&](auto field, const Job& job) {
    add_record(rep, "standard pair basis",
               ordered_json{{"N", job.N}, {"variant", job.vs},
                            {"field", field.name()}, {"max_degree", job.dmax}},
               [&](Record& rec) {
                 auto verdicts = verify_standard_basis(field, job.N, job.v, job.dmax);
                 bool all = true;
                 for (const BasisVerdict& v : verdicts) all = all && v.pass;
                 rec.expected = "counts match dims, rows independent";
                 rec.actual = all ? "verified" : "failed";
                 rec.pass = all;
               });
  };
  for (const Job& job : jobs) basis_record(Q, job);
  if (desk) {
    GFp F3(3);
    for (const Job& job : jobs) basis_record(F3, job);
  }

  if (desk) {
    // Mirrored-row sums in the plain ideal, full admissible census.
    add_record(rep, "mirrored-row sums in the plain ideal", ordered_json{},
               [&](Record& rec) {
                 long cases = 0, bad = 0;
                 for (int N : {2, 3, 4}) {
                   GradedRing<QQ> ring(Q, IdealSpec{N, MatrixForm::J, Variant::naive});
                   for (int s = 1; s <= 4; ++s)
                     for (const Partition& shape : partitions_of(s))
                       for (int a = 1; a <= 2; ++a)
                         for (int k = 0; k <= N / 2; ++k)
                           for (const Subset& C : subsets_of(N / 2, k)) {
                             try {
                               if (!verify_L_lemma(ring, shape, C, a)) ++bad;
                               ++cases;
                             } catch (const std::invalid_argument&) {
                             }
                           }
                 }
                 rec.expected = ordered_json{{"cases", 8}, {"failures", 0}};
                 rec.actual = ordered_json{{"cases", cases}, {"failures", bad}};
                 rec.pass = (cases == 8 && bad == 0);
               });
  }

  // Module dimensions against standard counts.
  std::vector<int> repn_sizes = desk ? std::vector<int>{2, 3, 4} : std::vector<int>{2};
  int repn_cells = desk ? 4 : 3;
  for (int N : repn_sizes) {
    add_record(rep, "module dims match standard counts",
               ordered_json{{"N", N}, {"max_cells", repn_cells}},
               [&](Record& rec) {
                 long rows = 0, bad = 0;
                 for (const RepnRow& row : repn_table(N, repn_cells)) {
                   ++rows;
                   if (!row.match) ++bad;
                 }
                 rec.expected = ordered_json{{"mismatches", 0}};
                 rec.actual = ordered_json{{"rows", rows}, {"mismatches", bad}};
                 rec.pass = (bad == 0);
               });
  }

  if (desk) {
    // Special orthogonal substitutions fix the spin ideals.
    auto so_record = [&](auto field, int N, int dmax, uint64_t salt) {
      add_record(rep, "special orthogonal invariance",
                 ordered_json{{"N", N}, {"field", field.name()},
                              {"elements", 20}, {"seed", opt.seed}},
                 [&](Record& rec) {
                   Rng rng(opt.seed + salt);
                   int good = 0;
                   for (int repn = 0; repn < 20; ++repn) {
                     auto g = so_cayley_element(field, rng, N);
                     bool ok = verify_so_invariance(field, N, Variant::plus, g, dmax) &&
                               verify_so_invariance(field, N, Variant::minus, g, dmax);
                     if (ok) ++good;
                   }
                   rec.expected = 20;
                   rec.actual = good;
                   rec.pass = (good == 20);
                 });
    };
    GFp F5(5);
    so_record(Q, 2, 3, 2);
    so_record(F5, 2, 3, 102);
    so_record(Q, 4, 2, 4);
    so_record(F5, 4, 2, 104);

    // Non-zero-divisor at size 4.
    add_record(rep, "central minor multiplies injectively",
               ordered_json{{"N", 4}, {"max_degree", 3}}, [&](Record& rec) {
                 bool ok = verify_nzd_f(Q, 3);
                 rec.expected = true;
                 rec.actual = ok;
                 rec.pass = ok;
               });
  }

  // Chart derivations.
  std::vector<std::pair<int, int>> configs =
      desk ? std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {4, 2}}
           : std::vector<std::pair<int, int>>{{2, 1}};
  for (auto [n, i] : configs) {
    add_record(rep, "chart", ordered_json{{"n", n}, {"i", i}},
               [&, n = n, i = i](Record& rec) {
                 ordered_json actual = chart_object(n, i);
                 ordered_json expected = actual;
                 for (auto& [k, v] : expected.items())
                   if (v.is_boolean()) v = true;
                 expected["free_vars"] =
                     static_cast<long>(n - 2 * i) * (n + 2 * i - 1) / 2;
                 rec.expected = expected;
                 rec.actual = actual;
                 rec.pass = (expected == actual);
               });
  }

  if (desk) {
    // Pairing-form change of basis and dimension agreement.
    add_record(rep, "pairing form equivalence", ordered_json{}, [&](Record& rec) {
      bool conj = true;
      for (int N = 2; N <= 6; ++N) {
        auto J = j_pattern(N), H = h_pattern(N), C = c_pattern(N);
        for (int a = 0; a < N; ++a)
          for (int b = 0; b < N; ++b) {
            int v = 0;
            for (int r = 0; r < N; ++r)
              for (int s = 0; s < N; ++s) v += C[r][a] * J[r][s] * C[s][b];
            conj = conj && (v == H[a][b]);
          }
      }
      bool dims = true;
      auto agree = [&](int N, Variant v) {
        GradedRing<QQ> rj(Q, IdealSpec{N, MatrixForm::J, v});
        GradedRing<QQ> rh(Q, IdealSpec{N, MatrixForm::H, v});
        for (int d = 0; d <= 3; ++d)
          if (rj.quotient_dim(d) != rh.quotient_dim(d)) return false;
        return true;
      };
      for (int N : {2, 3, 4}) dims = dims && agree(N, Variant::naive);
      for (int N : {2, 4})
        for (Variant v : {Variant::plus, Variant::minus}) dims = dims && agree(N, v);
      rec.expected = ordered_json{{"conjugation", true}, {"dims_agree", true}};
      rec.actual = ordered_json{{"conjugation", conj}, {"dims_agree", dims}};
      rec.pass = conj && dims;
    });

    // Characteristic comparison: discrepancies are findings, not failures.
    for (const Job& job : jobs) {
      add_record(rep, "characteristic comparison",
                 ordered_json{{"N", job.N}, {"variant", job.vs},
                              {"primes", {3, 5, 7}}, {"max_degree", job.dmax}},
                 [&](Record& rec) {
                   auto cp = compare_char_p(job.N, job.v, {3, 5, 7}, job.dmax);
                   rec.expected = "report completed";
                   rec.actual = ordered_json{{"consistent", cp.consistent},
                                             {"findings", cp.discrepancies}};
                   rec.pass = true;
                 });
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for spin lattice-model rings"};
  app.require_subcommand(1);
  Options opt;

  auto* tab = app.add_subcommand("tableaux", "tableau count tables");
  auto* tab_count = tab->add_subcommand("count", "CSV of standard counts");
  attach_common(tab_count, opt);
  tab->require_subcommand(1);

  auto* ring = app.add_subcommand("ring", "graded quotient reports");
  auto* ring_dims = ring->add_subcommand("dims", "per-degree dimensions");
  auto* ring_verify = ring->add_subcommand("verify", "standard basis verdicts");
  attach_common(ring_dims, opt);
  attach_common(ring_verify, opt);
  ring->require_subcommand(1);

  auto* repn = app.add_subcommand("repn", "module dimension tables");
  auto* repn_table_cmd = repn->add_subcommand("table", "CSV of module dims");
  attach_common(repn_table_cmd, opt);
  repn->require_subcommand(1);

  auto* chart = app.add_subcommand("chart", "chart derivation reports");
  auto* chart_verify = chart->add_subcommand("verify", "per-chart verdict JSON");
  attach_common(chart_verify, opt);
  chart->require_subcommand(1);

  auto* ident = app.add_subcommand("identities", "determinant identity suites");
  auto* ident_run = ident->add_subcommand("run", "randomized instances");
  attach_common(ident_run, opt);
  ident->require_subcommand(1);

  auto* vall = app.add_subcommand("verify-all", "bundled verification profile");
  attach_common(vall, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (tab_count->parsed()) return run_tableaux_count(opt);
    if (repn_table_cmd->parsed()) return run_repn_table(opt);

    Report rep;
    rep.config = ordered_json{{"N", opt.N},
                              {"variant", opt.variant},
                              {"field", opt.field},
                              {"max_degree", opt.max_degree},
                              {"seed", opt.seed},
                              {"profile", opt.profile}};
    if (ring_dims->parsed()) {
      rep.command = "ring dims";
      with_field(opt, [&](auto field) { ring_dims_records(field, opt, rep); });
    } else if (ring_verify->parsed()) {
      rep.command = "ring verify";
      with_field(opt, [&](auto field) { ring_verify_records(field, opt, rep); });
    } else if (chart_verify->parsed()) {
      rep.command = "chart verify";
      rep.config = ordered_json{{"n", opt.n}, {"i", opt.i}};
      chart_records(opt, rep);
    } else if (ident_run->parsed()) {
      rep.command = "identities run";
      with_field(opt, [&](auto field) { identity_records(field, opt, rep, 100); });
    } else if (vall->parsed()) {
      rep.command = "verify-all";
      if (opt.profile != "smoke" && opt.profile != "desk")
        throw CLI::ValidationError("--profile", "must be smoke or desk");
      verify_all_records(opt, rep, opt.profile == "desk");
    } else {
      std::cerr << "no subcommand\n";
      return 2;
    }
    return emit_report(rep, opt.out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
