#include "multsub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <algorithm>
#include <numeric>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multsub/constants.hpp"
#include "multsub/ekstats.hpp"
#include "multsub/errors.hpp"
#include "multsub/extremal.hpp"
#include "multsub/multgroup.hpp"
#include "multsub/pgroup.hpp"
#include "multsub/polyops.hpp"
#include "multsub/sieve.hpp"

namespace multsub::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  unsigned threads = 0;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 20240601;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string which_name(Which w) { return w == Which::G ? "G" : "I"; }

Which parse_which(const std::string& s) {
  if (s == "G") return Which::G;
  if (s == "I") return Which::I;
  throw invalid_argument("--which must be G or I");
}

std::uint32_t table_bound(double x) {
  if (!(x >= 2) || x > 4.0e9) throw invalid_argument("bound must lie in [2, 4e9]");
  return static_cast<std::uint32_t>(std::floor(x));
}

json record_json(const ExtremalRecord& r) {
  return json{{"n", r.n},
              {"which", which_name(r.which)},
              {"value", r.value},
              {"normalized", r.normalized},
              {"provenance", r.provenance == Provenance::scan ? "scan" : "construction"}};
}

json count_json(std::uint64_t n) {
  const auto f = factorize(n);
  const auto d = sylow_decomposition(f);
  json sylow = json::object();
  for (const auto& [p, alpha] : d) sylow[std::to_string(p)] = alpha.to_string();
  SubgroupCounter counter;
  return json{{"n", std::to_string(n)},
              {"phi", totient_factorization(f).value().get_str()},
              {"sylow", sylow},
              {"G", counter.count(d).get_str()},
              {"I", counter.isoclasses(d).get_str()}};
}

int do_count(const std::vector<std::uint64_t>& ns, std::uint64_t max, std::ostream& out) {
  if (ns.empty() && max == 0) throw invalid_argument("count needs integers or --max");
  for (auto n : ns) out << count_json(n).dump() << '\n';
  for (std::uint64_t n = 1; n <= max; ++n) out << count_json(n).dump() << '\n';
  return kExitOk;
}

int do_scan(std::uint32_t N, const RunConfig& cfg, std::ostream& out) {
  if (N < 2) throw invalid_argument("scan needs --max >= 2");
  const auto table = FunctionTable::build(N);
  const auto counts = log_counts_table(N, table, cfg.threads);
  out << "n,phi,omega_phi,bigomega_phi,logG,logI\n";
  std::string line;
  for (std::uint32_t n = 2; n <= N; ++n) {
    line = std::to_string(n);
    line += ',' + std::to_string(table.totient(n));
    line += ',' + std::to_string(table.omega_phi(n));
    line += ',' + std::to_string(table.bigomega_phi(n));
    line += ',' + fixed6(counts[n].log_G);
    line += ',' + fixed6(counts[n].log_I);
    line += '\n';
    out << line;
  }
  return kExitOk;
}

int do_distribution(double x, const std::string& which_s, double A, double C,
                    std::uint64_t prime_limit, const std::string& samples_path,
                    const RunConfig& cfg, std::ostream& out) {
  const Which which = parse_which(which_s);
  if (which == Which::G && (A <= 0 || C <= 0)) {
    const auto a0 = compute_A0(prime_limit);
    if (A <= 0) A = a0.value + std::numbers::ln2 / 2;
    if (C <= 0) C = assemble_C(a0, compute_B(prime_limit).derived).value;
  }
  const auto table = FunctionTable::build(table_bound(x));
  std::vector<double> samples;
  const auto r = distribution_report(x, which, table, A, C, samples_path.empty() ? nullptr : &samples,
                                     cfg.threads);
  json moments = json::object();
  for (const auto& [h, v] : r.empirical_moments) moments[std::to_string(h)] = v;
  out << json{{"x", r.x},
              {"which", which_name(r.which)},
              {"sample_count", r.sample_count},
              {"empirical_moments", moments},
              {"ks_distance", r.ks_distance},
              {"normalization",
               {{"mean_coefficient", r.mean_coefficient},
                {"variance_coefficient", r.variance_coefficient}}}}
             .dump(2)
      << '\n';
  if (!samples_path.empty()) {
    std::ofstream csv(samples_path);
    if (!csv) throw error("cannot write " + samples_path);
    csv << "z\n";
    for (double z : samples) csv << fixed6(z) << '\n';
  }
  return kExitOk;
}

int do_moments(double x, const std::vector<unsigned>& hs, double C, std::uint64_t prime_limit,
               const RunConfig& cfg, std::ostream& out) {
  if (C <= 0) C = compute_C(prime_limit).value;
  const auto table = FunctionTable::build(table_bound(x));
  out << "h,x,M_h,normalized\n";
  char buf[160];
  for (const auto& row : moments(hs, x, table, C, cfg.threads)) {
    std::snprintf(buf, sizeof buf, "%u,%.0f,%.12e,%.12e\n", row.h, row.x, row.value, row.normalized);
    out << buf;
  }
  return kExitOk;
}

int do_constants(std::uint64_t P, double X, std::ostream& out) {
  const auto a0 = compute_A0(P);
  const auto b = compute_B(P);
  const auto c = assemble_C(a0, b.derived);
  json j{{"prime_limit", P},
         {"A0", a0.value},
         {"A", a0.value + std::numbers::ln2 / 2},
         {"B", b.derived.value},
         {"C", c.value},
         {"tails", {{"A0", a0.tail_bound}, {"A", a0.tail_bound}, {"B", b.derived.tail_bound}, {"C", c.tail_bound}}},
         {"B_printed_vs_derived_delta", b.printed_minus_derived},
         {"B_corrected_closed_form", b.corrected_closed_form},
         {"B_max_relative_term_delta", b.max_relative_term_delta}};
  if (X > 0) {
    const auto s = infinite_sum_checks(P, X, X <= 2e4);
    json inf{{"X", s.X}, {"prime_powers", s.prime_power_count}, {"single_sum", s.single_sum},
             {"single_minus_A0", s.single_sum - s.A0}};
    if (s.double_sum) {
      inf["double_sum"] = *s.double_sum;
      inf["double_minus_4A0sq_plus_B"] = *s.double_sum - s.four_A0_sq_plus_B;
    }
    j["infinite_sums"] = inf;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// Oracle and structural cross-checks for n <= max; failures are listed and
// turn the exit code to 1.
int do_verify(std::uint64_t max, std::uint64_t oracle_cap, const RunConfig& cfg, std::ostream& out) {
  if (max < 1) throw invalid_argument("verify needs --max >= 1");
  json failures = json::array();
  auto fail = [&](const std::string& what, std::uint64_t n) {
    if (failures.size() < 50) failures.push_back(json{{"check", what}, {"n", std::to_string(n)}});
  };
  std::uint64_t oracle_checked = 0;
  const auto table = FunctionTable::build(static_cast<std::uint32_t>(std::max<std::uint64_t>(max, 2)));
  for (std::uint64_t n = 1; n <= max; ++n) {
    const auto f = factorize(n, &table);
    const auto d = sylow_decomposition(f, &table);
    if (d != sylow_decomposition_crt(f, &table)) fail("sylow_crt", n);
    const mpz_class lambda = carmichael(f);
    mpz_class prod = 1, pk, rest;
    for (const auto& [p, alpha] : d) {
      mpz_ui_pow_ui(pk.get_mpz_t(), p, alpha.weight());
      prod *= pk;
      const mpz_class pz(p);
      if (lambda_p(f, p) != mpz_remove(rest.get_mpz_t(), lambda.get_mpz_t(), pz.get_mpz_t()))
        fail("lambda_p", n);
    }
    if (prod != totient_factorization(f).value()) fail("sum_of_parts", n);
    if (table.totient(static_cast<std::uint32_t>(n)) != prod) fail("sieve_totient", n);
    if (table.totient(static_cast<std::uint32_t>(n)) <= oracle_cap) {
      ++oracle_checked;
      const auto subgroups = enumerate_subgroups_oracle(n, oracle_cap);
      if (count_subgroups(f, &table) != subgroups.size()) fail("G_oracle", n);
      if (count_subgroup_isoclasses(f, &table) != classify_isoclasses_oracle(n, oracle_cap))
        fail("I_oracle", n);
    }
  }

  // Section 4 combinatorics at the sizes where h! enumeration is the algorithm.
  std::size_t polyops_failures = 0;
  for (unsigned k : {2u, 4u, 6u}) {
    std::map<TwoToOneMap, unsigned> fibers;
    Permutation sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1u);
    do ++fibers[psi(sigma)];
    while (std::next_permutation(sigma.begin(), sigma.end()));
    const auto all = enumerate_two_to_one(k);
    bool ok = fibers.size() == all.size();
    for (const auto& [tau, c] : fibers) ok = ok && c == (1u << (k / 2));
    if (!ok) ++polyops_failures;
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (unsigned h : {2u, 4u}) {
    for (unsigned l = 0; l <= 3; ++l) {
      std::vector<mpq_class> r(l + 1);
      for (auto& v : r) v = coef(rng);
      if (phi_h(expand_linear_power(r, h), h) != quadratic_form_power(r, h / 2)) ++polyops_failures;
    }
  }
  if (polyops_failures) fail("polyops", polyops_failures);

  const bool ok = failures.empty();
  out << json{{"max", max},
              {"oracle_cap", oracle_cap},
              {"oracle_checked", oracle_checked},
              {"passed", ok},
              {"failures", failures}}
             .dump(2)
      << '\n';
  return ok ? kExitOk : kExitFailure;
}

int do_extremal_scan(std::uint32_t N, const std::string& which_s, const RunConfig& cfg, std::ostream& out) {
  const auto table = FunctionTable::build(std::max<std::uint32_t>(N, 2));
  out << record_json(scan_max(N, parse_which(which_s), table, cfg.threads)).dump(2) << '\n';
  return kExitOk;
}

int do_extremal_construct(double x, const std::string& which_s, double bv, std::uint64_t cap,
                          std::ostream& out) {
  if (parse_which(which_s) == Which::G) {
    const auto c = construct_G_extremal(x, bv);
    json primes = json::array();
    for (auto q : c.primes) primes.push_back(q);
    json j = record_json(c.record);
    j["construction"] = {{"x", c.x},
                         {"bv_exponent", c.bv_exponent},
                         {"V", c.V},
                         {"Q", c.Q},
                         {"p", c.p},
                         {"primes", primes},
                         {"omega_p", c.omega_p},
                         {"lambda_p", c.lambda_p},
                         {"claimed_lower_bound", c.claimed_lower_bound},
                         {"below_x", c.below_x},
                         {"bound_holds", c.bound_holds}};
    out << j.dump(2) << '\n';
    return c.below_x && c.bound_holds ? kExitOk : kExitFailure;
  }
  const auto c = construct_I_extremal(x, cap);
  json j = record_json(c.record);
  j["construction"] = {{"x", c.x},
                       {"U", c.U},
                       {"m", std::to_string(c.m)},
                       {"pi_U", c.pi_U},
                       {"k", std::to_string(c.k)},
                       {"q", std::to_string(c.q)},
                       {"omega_phi_q", c.omega_phi_q},
                       {"I", c.I.get_str()},
                       {"below_x", c.below_x},
                       {"omega_claim_holds", c.omega_claim_holds},
                       {"lower_bound_holds", c.lower_bound_holds}};
  out << j.dump(2) << '\n';
  return c.below_x && c.omega_claim_holds && c.lower_bound_holds ? kExitOk : kExitFailure;
}

int do_extremal_bounds(std::uint32_t N, double slack, const RunConfig& cfg, std::ostream& out) {
  const auto table = FunctionTable::build(std::max<std::uint32_t>(N, 2));
  const auto r = upper_bound_check(N, table, slack, cfg.threads);
  out << json{{"N", r.N},
              {"slack", r.slack},
              {"max_log_G", r.max_log_G},
              {"argmax_G", std::to_string(r.argmax_G)},
              {"G_bound", r.G_bound},
              {"G_ok", r.G_ok},
              {"I_violations", r.I_violations},
              {"min_I_margin", r.min_I_margin},
              {"partition_violations", r.partition_violations},
              {"passed", r.passed()}}
             .dump(2)
      << '\n';
  return r.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup counts of (Z/nZ)^x and their statistics", "multsub"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (default: MULTSUB_THREADS or all cores)");
  app.add_option("--output,-o", cfg.output, "Write results to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  std::vector<std::uint64_t> count_ns;
  std::uint64_t count_max = 0;
  auto* count = app.add_subcommand("count", "G(n), I(n) and Sylow types as JSON lines");
  count->add_option("n", count_ns, "Integers to report")->check(CLI::PositiveNumber);
  count->add_option("--max", count_max, "Also report every n in 1..max");

  std::uint32_t scan_max_n = 0;
  auto* scan = app.add_subcommand("scan", "CSV of phi, omega(phi), Omega(phi), log G, log I for 2..N");
  scan->add_option("--max", scan_max_n, "Upper bound N")->required();

  double dist_x = 0, dist_A = 0, dist_C = 0;
  std::string dist_which = "G", dist_samples;
  std::uint64_t dist_plimit = 1'000'000;
  auto* dist = app.add_subcommand("distribution", "Standardized log G or log I against the normal law");
  dist->add_option("--x", dist_x, "Sample bound")->required();
  dist->add_option("--which", dist_which, "G or I")->check(CLI::IsMember({"G", "I"}));
  dist->add_option("--A", dist_A, "Mean coefficient (default: computed A)");
  dist->add_option("--C", dist_C, "Variance coefficient (default: computed C)");
  dist->add_option("--prime-limit", dist_plimit, "Prime limit for computed constants");
  dist->add_option("--samples", dist_samples, "Write normalized samples as CSV");

  double mom_x = 0, mom_C = 0;
  std::vector<unsigned> mom_h{1, 2, 3};
  std::uint64_t mom_plimit = 1'000'000;
  auto* mom = app.add_subcommand("moments", "M_h(x) and its normalization as CSV");
  mom->add_option("--x", mom_x, "Bound x")->required();
  mom->add_option("--orders", mom_h, "Moment orders h, comma separated (1..8)")->delimiter(',');
  mom->add_option("--C", mom_C, "Variance constant (default: computed C)");
  mom->add_option("--prime-limit", mom_plimit, "Prime limit for the computed C");

  std::uint64_t const_plimit = 10'000'000;
  double const_X = 0;
  auto* consts = app.add_subcommand("constants", "A0, A, B, C with tail bounds");
  consts->add_option("--prime-limit", const_plimit, "Largest prime summed");
  consts->add_option("--X", const_X, "Also evaluate the prime-power sums up to X");

  std::uint64_t verify_max = 300, verify_cap = kDefaultOracleCap;
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against brute-force oracles");
  verify->add_option("--max", verify_max, "Check every n in 1..max");
  verify->add_option("--oracle-cap", verify_cap, "Largest phi(n) given to the closure oracle");

  auto* ext = app.add_subcommand("extremal", "Maximal-order scans, constructions and bounds");
  ext->require_subcommand(1);
  std::uint32_t ext_max = 0;
  std::string ext_which = "G";
  auto* ext_scan = ext->add_subcommand("scan", "argmax of log G or log I over 3..N");
  ext_scan->add_option("--max", ext_max, "Upper bound N")->required();
  ext_scan->add_option("--which", ext_which, "G or I")->check(CLI::IsMember({"G", "I"}));
  double ext_x = 0, ext_bv = 0;
  std::uint64_t ext_cap = kDefaultCandidateCap;
  auto* ext_con = ext->add_subcommand("construct", "Lower-bound constructions");
  ext_con->add_option("--x", ext_x, "Target size x")->required();
  ext_con->add_option("--which", ext_which, "G or I")->check(CLI::IsMember({"G", "I"}));
  ext_con->add_option("--bv-exponent", ext_bv, "Exponent b in V and Q");
  ext_con->add_option("--candidate-cap", ext_cap, "Candidates tried in the prime search");
  double ext_slack = kPinnedSlack;
  auto* ext_bounds = ext->add_subcommand("bounds", "Upper-bound checks for every n <= N");
  ext_bounds->add_option("--max", ext_max, "Upper bound N")->required();
  ext_bounds->add_option("--slack", ext_slack, "Slack s on the log G bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file = std::make_unique<std::ofstream>(cfg.output);
    if (!*file) {
      err << "multsub: cannot write " << cfg.output << '\n';
      return kExitFailure;
    }
    sink = file.get();
  }

  try {
    if (*count) return do_count(count_ns, count_max, *sink);
    if (*scan) return do_scan(scan_max_n, cfg, *sink);
    if (*dist) return do_distribution(dist_x, dist_which, dist_A, dist_C, dist_plimit, dist_samples, cfg, *sink);
    if (*mom) return do_moments(mom_x, mom_h, mom_C, mom_plimit, cfg, *sink);
    if (*consts) return do_constants(const_plimit, const_X, *sink);
    if (*verify) return do_verify(verify_max, verify_cap, cfg, *sink);
    if (*ext_scan) return do_extremal_scan(ext_max, ext_which, cfg, *sink);
    if (*ext_con) return do_extremal_construct(ext_x, ext_which, ext_bv, ext_cap, *sink);
    if (*ext_bounds) return do_extremal_bounds(ext_max, ext_slack, cfg, *sink);
  } catch (const std::invalid_argument& e) {
    err << "multsub: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "multsub: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace multsub::cli
