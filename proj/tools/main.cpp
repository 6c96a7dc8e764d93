#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sylver/campaign.hpp"
#include "sylver/convert.hpp"
#include "sylver/parse.hpp"
#include "sylver/random.hpp"
#include "sylver/render.hpp"
#include "sylver/stability.hpp"
#include "sylver/verify.hpp"

namespace {

using namespace sylver;

struct VerifyOptions {
  std::string identity;
  std::string nodes_text;
  int n = 0;
  int d = 0;
  int m = 0;
  int k = 0;
  std::string a_text = "1";
  std::string field = "rational";
  std::uint64_t prime = kDefaultPrime;
  bool has_nodes = false;
  bool has_n = false;
  bool has_d = false;
  bool has_m = false;
  bool has_k = false;
  bool pretty = false;
};

FieldConfig make_field(const std::string& name, std::uint64_t p) {
  if (name == "rational") return FieldConfig::rational();
  if (name == "prime") return FieldConfig::prime(p);
  if (name == "float64") return FieldConfig::float64();
  throw std::invalid_argument("unknown field '" + name + "' (rational, prime, float64)");
}

void emit(const IdentityReport& rep, bool pretty) {
  std::cout << (pretty ? to_pretty_line(rep) : to_json_line(rep)) << "\n";
}

int exit_code_of(const IdentityReport& rep) {
  if (rep.pass.has_value() && !*rep.pass) return 1;
  return 0;
}

int require_param(const VerifyOptions& o, bool present, const char* flag) {
  if (!present)
    throw std::invalid_argument("identity '" + o.identity + "' requires " + flag);
  return 0;
}

template <FieldElement K>
CheckOutcome<K> dispatch_verify(IdentityId id, const VerifyOptions& o, const NodeSet<K>& ns,
                                const K& a) {
  switch (id) {
    case IdentityId::euler:
      require_param(o, o.has_d, "--d");
      return verify_euler(ns, o.d);
    case IdentityId::sylvester:
      require_param(o, o.has_d, "--d");
      return verify_sylvester(ns, o.d);
    case IdentityId::extended_euler:
      require_param(o, o.has_d, "--d");
      require_param(o, o.has_m, "--m");
      return verify_extended_euler(ns, o.d, o.m);
    case IdentityId::extended_sylvester:
      require_param(o, o.has_d, "--d");
      return extended_sylvester_check(ns, o.d);
    case IdentityId::f2:
      return verify_f2(ns, a);
    case IdentityId::newton:
      require_param(o, o.has_d, "--d");
      return verify_newton_relation(ns, o.d);
    case IdentityId::egf: {
      const int k = o.has_k ? o.k : static_cast<int>(ns.size()) + 10;
      return egf_truncated_check(ns, k);
    }
    default:
      throw std::logic_error("dispatch_verify: unhandled identity");
  }
}

template <FieldElement K, class Map>
int run_verify_typed(IdentityId id, const VerifyOptions& o, const std::vector<Rational>& nodes,
                     const Rational& a, const Map& map) {
  std::vector<K> xs;
  xs.reserve(nodes.size());
  for (const Rational& r : nodes) xs.push_back(map(r));
  const NodeSet<K> ns(xs);
  const CheckOutcome<K> out = dispatch_verify(id, o, ns, map(a));
  IdentityReport rep = to_report(out);
  rep.params.emplace_back("nodes", render_node_list(ns.nodes()));
  emit(rep, o.pretty);
  return exit_code_of(rep);
}

int do_verify(const VerifyOptions& o) {
  const auto id = parse_identity(o.identity);
  if (!id) throw std::invalid_argument("unknown identity '" + o.identity + "'");
  const FieldConfig field = make_field(o.field, o.prime);

  if (*id == IdentityId::dilcher) {
    if (field.kind != FieldKind::rational)
      throw std::invalid_argument("dilcher is verified over the rationals");
    require_param(o, o.has_n, "--n");
    require_param(o, o.has_d, "--d");
    const IdentityReport rep = to_report(dilcher_check(o.n, o.d));
    emit(rep, o.pretty);
    return exit_code_of(rep);
  }

  std::vector<Rational> nodes;
  if (o.has_nodes) {
    nodes = parse_rational_list(o.nodes_text);
  } else if (o.has_n) {
    if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
    for (int i = 1; i <= o.n; ++i) nodes.emplace_back(i);
  } else {
    throw std::invalid_argument("provide nodes via --nodes or a node count via --n");
  }
  const Rational a = parse_rational(o.a_text);

  switch (field.kind) {
    case FieldKind::rational:
      return run_verify_typed<Rational>(*id, o, nodes, a, [](const Rational& r) { return r; });
    case FieldKind::prime:
      return run_verify_typed<PrimeFieldElement>(
          *id, o, nodes, a, [&](const Rational& r) { return to_prime_field(r, field.p); });
    case FieldKind::float64:
      return run_verify_typed<double>(*id, o, nodes, a,
                                      [](const Rational& r) { return double_from_rational(r); });
  }
  throw std::logic_error("do_verify: unhandled field kind");
}

struct CampaignOptions {
  CampaignConfig cfg;
  std::string n_range_text = "2..8";
  std::string d_range_text = "0..40";
  std::string field = "prime";
  std::uint64_t prime = kDefaultPrime;
  bool pretty = false;
};

int do_campaign(CampaignOptions& o) {
  o.cfg.n_range = parse_int_range(o.n_range_text);
  o.cfg.d_range = parse_int_range(o.d_range_text);
  o.cfg.field = make_field(o.field, o.prime);
  const CampaignResult res = run_campaign(o.cfg);
  for (const TrialFailure& f : res.failures)
    std::cout << (o.pretty ? campaign_failure_pretty_line(f, o.cfg.seed)
                           : campaign_failure_json_line(f, o.cfg.seed))
              << "\n";
  std::cout << (o.pretty ? campaign_summary_pretty_line(o.cfg, res)
                         : campaign_summary_json_line(o.cfg, res))
            << "\n";
  return res.failed == 0 ? 0 : 1;
}

struct TableOptions {
  int n_max = 10;
  int d_max = 4;
  bool pretty = false;
};

int do_dilcher_table(const TableOptions& o) {
  if (o.n_max < 1 || o.d_max < 1)
    throw std::invalid_argument("dilcher-table needs n-max >= 1 and d-max >= 1");
  std::uint64_t mismatches = 0;
  for (int n = 1; n <= o.n_max; ++n) {
    for (int d = 1; d <= o.d_max; ++d) {
      const IdentityReport rep = to_report(dilcher_check(n, d));
      if (!rep.pass.value_or(false)) ++mismatches;
      emit(rep, o.pretty);
    }
  }
  const auto cells = static_cast<std::uint64_t>(o.n_max) * static_cast<std::uint64_t>(o.d_max);
  if (o.pretty)
    std::cout << "dilcher-table cells=" << cells << " mismatches=" << mismatches << "\n";
  else
    std::cout << "{\"type\":\"dilcher_summary\",\"cells\":" << cells
              << ",\"mismatches\":" << mismatches << "}\n";
  return mismatches == 0 ? 0 : 1;
}

struct BenchOptions {
  std::string n_list = "2,4,6";
  std::string d_list = "5,10,20";
  std::string spread_list = "1,0.001,1e-06";
  int trials = 10;
  std::uint64_t seed = 0;
  bool pretty = false;
};

int do_bench_stability(const BenchOptions& o) {
  if (o.trials < 1) throw std::invalid_argument("bench-stability needs at least one trial");
  const std::vector<int> ns = parse_int_list(o.n_list);
  const std::vector<int> ds = parse_int_list(o.d_list);
  const std::vector<double> spreads = parse_double_list(o.spread_list);
  std::uint64_t cell = 0;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("bench-stability needs n >= 2");
    for (int d : ds) {
      for (double spread : spreads) {
        ++cell;
        if (d < n - 1) continue;  // no h-value to compare at this degree
        Rng rng(trial_seed(o.seed, cell));
        std::vector<StabilityRecord> records;
        records.reserve(static_cast<std::size_t>(o.trials));
        for (int t = 0; t < o.trials; ++t) {
          const std::vector<double> nodes =
              sample_spread_nodes(rng, static_cast<std::size_t>(n), spread);
          records.push_back(run_stability_trial(nodes, d));
          std::cout << (o.pretty ? to_pretty_line(records.back())
                                 : to_json_line(records.back()))
                    << "\n";
        }
        const StabilitySummary summary = summarize_stability(records, spread);
        std::cout << (o.pretty ? to_pretty_line(summary) : to_json_line(summary)) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sylver: exact and modular verification of weighted power sum identities"};
  app.require_subcommand(0, 1);
  bool list_identities = false;
  app.add_flag("--list-identities", list_identities, "print the known identity names and exit");

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "check one identity instance");
  verify->add_option("--identity", vo.identity, "identity name (see --list-identities)")
      ->required();
  auto* nodes_opt = verify->add_option("--nodes", vo.nodes_text,
                                       "comma separated rational nodes, e.g. 1,3/2,-2");
  auto* n_opt = verify->add_option("--n", vo.n, "node count; nodes default to 1..n");
  auto* d_opt = verify->add_option("--d", vo.d, "degree parameter");
  auto* m_opt = verify->add_option("--m", vo.m, "elementary symmetric order (extended_euler)");
  auto* k_opt = verify->add_option("--k", vo.k, "series truncation order (egf, default n+10)");
  verify->add_option("--a", vo.a_text, "scalar parameter for f2 (default 1)");
  verify->add_option("--field", vo.field, "rational, prime, or float64 (default rational)");
  verify->add_option("--prime", vo.prime, "modulus for --field prime (default 2^61-1)");
  verify->add_flag("--pretty", vo.pretty, "human-readable output instead of json lines");

  CampaignOptions co;
  CLI::App* campaign = app.add_subcommand("campaign", "randomized verification campaign");
  campaign->add_option("--identity", co.cfg.identity, "identity name")->required();
  campaign->add_option("--trials", co.cfg.trials, "number of random instances (default 100)");
  campaign->add_option("--seed", co.cfg.seed, "master seed (default 0)");
  campaign->add_option("--n-range", co.n_range_text, "node count range LO..HI (default 2..8)");
  campaign->add_option("--d-range", co.d_range_text, "degree range LO..HI (default 0..40)");
  campaign->add_option("--field", co.field, "rational or prime (default prime)");
  campaign->add_option("--prime", co.prime, "modulus for --field prime (default 2^61-1)");
  campaign->add_option("--threads", co.cfg.threads, "worker threads (default 1)");
  campaign->add_flag("--pretty", co.pretty, "human-readable output instead of json lines");

  TableOptions to;
  CLI::App* table = app.add_subcommand("dilcher-table", "verify a table of dilcher instances");
  table->add_option("--n-max", to.n_max, "largest n (default 10)");
  table->add_option("--d-max", to.d_max, "largest d (default 4)");
  table->add_flag("--pretty", to.pretty, "human-readable output instead of json lines");

  BenchOptions bo;
  CLI::App* bench = app.add_subcommand("bench-stability", "float64 vs exact error sweep");
  bench->add_option("--n-list", bo.n_list, "node counts (default 2,4,6)");
  bench->add_option("--d-list", bo.d_list, "degrees (default 5,10,20)");
  bench->add_option("--spread-list", bo.spread_list, "node spreads (default 1,0.001,1e-06)");
  bench->add_option("--trials", bo.trials, "trials per cell (default 10)");
  bench->add_option("--seed", bo.seed, "master seed (default 0)");
  bench->add_flag("--pretty", bo.pretty, "human-readable output instead of json lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_identities) {
      for (const std::string& name : identity_names()) std::cout << name << "\n";
      return 0;
    }
    vo.has_nodes = nodes_opt->count() > 0;
    vo.has_n = n_opt->count() > 0;
    vo.has_d = d_opt->count() > 0;
    vo.has_m = m_opt->count() > 0;
    vo.has_k = k_opt->count() > 0;
    if (verify->parsed()) return do_verify(vo);
    if (campaign->parsed()) return do_campaign(co);
    if (table->parsed()) return do_dilcher_table(to);
    if (bench->parsed()) return do_bench_stability(bo);
    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
