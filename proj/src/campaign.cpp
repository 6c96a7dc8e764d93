#include "sylver/campaign.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sylver/random.hpp"
#include "sylver/verify.hpp"

namespace sylver {

namespace {

constexpr std::pair<const char*, IdentityId> kIdentityTable[] = {
    {"euler", IdentityId::euler},
    {"sylvester", IdentityId::sylvester},
    {"extended_euler", IdentityId::extended_euler},
    {"extended_sylvester", IdentityId::extended_sylvester},
    {"f2", IdentityId::f2},
    {"newton", IdentityId::newton},
    {"egf", IdentityId::egf},
    {"dilcher", IdentityId::dilcher},
};

struct RationalDraw {
  std::vector<Rational> nodes(Rng& rng, std::size_t n) const {
    return sample_distinct_rational_nodes(rng, n);
  }
  Rational scalar(Rng& rng) const { return Rational(rng.range(-9, 9), rng.range(1, 9)); }
};

struct PrimeDraw {
  std::uint64_t p;
  std::vector<PrimeFieldElement> nodes(Rng& rng, std::size_t n) const {
    return sample_distinct_prime_nodes(rng, n, p);
  }
  PrimeFieldElement scalar(Rng& rng) const { return PrimeFieldElement(rng.below(p), p); }
};

template <FieldElement K, class Draw>
IdentityReport run_one(IdentityId id, const CampaignConfig& cfg, std::uint64_t index,
                       const Draw& draw) {
  Rng rng(trial_seed(cfg.seed, index));
  const int n = static_cast<int>(rng.range(cfg.n_range.lo, cfg.n_range.hi));
  const std::int64_t d_lo = cfg.d_range.lo;
  const std::int64_t d_hi = cfg.d_range.hi;

  if (id == IdentityId::dilcher) {
    const int d =
        static_cast<int>(rng.range(std::max<std::int64_t>(1, d_lo), std::max<std::int64_t>(1, d_hi)));
    return to_report(dilcher_check(n, d));
  }

  const std::vector<K> xs = draw.nodes(rng, static_cast<std::size_t>(n));
  const NodeSet<K> ns(xs);
  CheckOutcome<K> out = [&] {
    switch (id) {
      case IdentityId::euler:
        return verify_euler(ns, static_cast<int>(rng.range(0, n - 1)));
      case IdentityId::sylvester:
        return verify_sylvester(ns, static_cast<int>(rng.range(d_lo, d_hi)));
      case IdentityId::extended_euler: {
        const int d = static_cast<int>(rng.range(0, n - 1));
        const int m = static_cast<int>(rng.range(0, n - 1));
        return verify_extended_euler(ns, d, m);
      }
      case IdentityId::extended_sylvester:
        return extended_sylvester_check(
            ns, static_cast<int>(std::max<std::int64_t>(n, rng.range(d_lo, d_hi))));
      case IdentityId::f2:
        return verify_f2(ns, draw.scalar(rng));
      case IdentityId::newton:
        return verify_newton_relation(
            ns, static_cast<int>(rng.range(std::max<std::int64_t>(1, d_lo),
                                           std::max<std::int64_t>(1, d_hi))));
      case IdentityId::egf:
        return egf_truncated_check(
            ns, static_cast<int>(std::max<std::int64_t>(n - 1, rng.range(d_lo, d_hi))));
      default:
        throw std::logic_error("run_one: unhandled identity");
    }
  }();
  IdentityReport rep = to_report(out);
  rep.params.emplace_back("nodes", render_node_list(ns.nodes()));
  return rep;
}

}  // namespace

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [key, id] : kIdentityTable)
    if (name == key) return id;
  return std::nullopt;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [key, id] : kIdentityTable) out.emplace_back(key);
    return out;
  }();
  return names;
}

std::string to_string(const IntRange& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void validate(const CampaignConfig& cfg) {
  const auto id = parse_identity(cfg.identity);
  if (!id) throw std::invalid_argument("unknown identity: " + cfg.identity);
  if (cfg.trials == 0) throw std::invalid_argument("campaign needs at least one trial");
  if (cfg.threads == 0) throw std::invalid_argument("campaign needs at least one thread");
  if (cfg.n_range.lo < 2) throw std::invalid_argument("n_range must start at 2 or above");
  if (cfg.n_range.lo > cfg.n_range.hi) throw std::invalid_argument("n_range is empty");
  if (cfg.d_range.lo < 0) throw std::invalid_argument("d_range must start at 0 or above");
  if (cfg.d_range.lo > cfg.d_range.hi) throw std::invalid_argument("d_range is empty");
  if (cfg.field.kind == FieldKind::float64)
    throw std::invalid_argument("campaigns require an exact field (float64 has no pass verdict)");
  if (*id == IdentityId::dilcher && cfg.field.kind != FieldKind::rational)
    throw std::invalid_argument("dilcher campaigns run over the rationals");
  if (cfg.field.kind == FieldKind::prime) {
    if (cfg.field.p <= static_cast<std::uint64_t>(cfg.n_range.hi))
      throw std::invalid_argument("prime modulus must exceed the largest node count");
    const std::int64_t max_trunc = std::max(cfg.d_range.hi, cfg.n_range.hi - 1);
    if (*id == IdentityId::egf && cfg.field.p <= static_cast<std::uint64_t>(max_trunc))
      throw std::invalid_argument("prime modulus too small for the egf truncation order");
  }
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const IdentityId id = *parse_identity(cfg.identity);

  std::vector<IdentityReport> reports(cfg.trials);
  const auto worker_count =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, cfg.trials));
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto worker = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < cfg.trials; i += worker_count) {
        switch (cfg.field.kind) {
          case FieldKind::rational:
            reports[i] = run_one<Rational>(id, cfg, i, RationalDraw{});
            break;
          case FieldKind::prime:
            reports[i] = run_one<PrimeFieldElement>(id, cfg, i, PrimeDraw{cfg.field.p});
            break;
          default:
            throw std::logic_error("run_campaign: unhandled field kind");
        }
      }
    } catch (...) {
      const std::scoped_lock lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (worker_count == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(worker, w);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  CampaignResult result;
  result.trials = cfg.trials;
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    if (reports[i].pass.value_or(false)) {
      ++result.passed;
    } else {
      ++result.failed;
      result.failures.push_back({i, std::move(reports[i])});
    }
  }
  return result;
}

}  // namespace sylver
