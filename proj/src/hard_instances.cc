// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icx/hard_instances.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "icx/errors.h"

namespace icx {

namespace {

std::uint32_t RingMask(int k) { return (std::uint32_t{1} << k) - 1; }

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

// Next mask with the same popcount (Gosper).
std::uint32_t NextCombination(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

double Level1Value(int k) { return 1.0 / 40 + 1.0 / (80.0 * k); }
double Level2Value(int k) { return 1.0 / 40 + 1.0 / (40.0 * k); }

std::vector<Action> HardActions(int k) {
  std::vector<Action> actions = {
      {"bot", 0.0, 0.0}, {"g", 0.1, 1.0}, {"x", 0.01, 0.3}};
  for (int t = 1; t <= k; ++t) actions.push_back({std::to_string(t), 0.01, 0.2});
  return actions;
}

}  // namespace

bool IsPrime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

int DefaultRingSetSize(int k) { return (4 * k + 4) / 5; }

void HardParams::Validate() const {
  if (!IsPrime(k) || k <= 5) {
    throw InputError("hard family needs a prime k > 5");
  }
  if (k > kMaxActions - 3) throw InputError("hard family k too large");
  if ((4 * k) % 5 == 0) throw std::logic_error("4k/5 must not be integral");
  const int size = m();
  if (size < 1 || size >= k) {
    throw InputError("ring set size must lie in [1, k-1]");
  }
  if ((T & ~RingMask(k)) != 0 || std::popcount(T) != size) {
    throw InputError("T must be a size-m subset of the ring");
  }
}

HardParams HardParams::Random(int k, std::uint64_t seed,
                              std::optional<int> m_override) {
  HardParams params;
  params.k = k;
  params.m_override = m_override;
  std::mt19937_64 rng(seed);
  std::vector<int> ring(k);
  std::iota(ring.begin(), ring.end(), 0);
  std::shuffle(ring.begin(), ring.end(), rng);
  const int size = params.m();
  for (int t = 0; t < size && t < k; ++t) params.T |= std::uint32_t{1} << ring[t];
  params.Validate();
  return params;
}

std::uint32_t RotateRing(std::uint32_t set, int shift, int k) {
  shift = ((shift % k) + k) % k;
  if (shift == 0) return set;
  const std::uint32_t mask = RingMask(k);
  return ((set << shift) | (set >> (k - shift))) & mask;
}

std::uint32_t CanonicalRotation(std::uint32_t set, int k) {
  std::uint32_t best = set;
  for (int s = 1; s < k; ++s) best = std::min(best, RotateRing(set, s, k));
  return best;
}

std::vector<std::uint32_t> Cyclic(std::uint32_t T, int k) {
  std::set<std::uint32_t> shifts;
  for (int s = 0; s < k; ++s) shifts.insert(RotateRing(T, s, k));
  const int size = std::popcount(T);
  if (IsPrime(k) && size > 0 && size < k &&
      static_cast<int>(shifts.size()) != k) {
    throw std::logic_error("cyclic shifts of T are not distinct");
  }
  return {shifts.begin(), shifts.end()};
}

std::uint32_t RingPart(Subset s) { return s >> kHardFirstRing; }
Subset FromRing(std::uint32_t ring) { return ring << kHardFirstRing; }

// --- XosHardCost ------------------------------------------------------------

XosHardCost::XosHardCost(const HardParams& params) : params_(params) {
  params_.Validate();
  canonical_T_ = CanonicalRotation(params_.T, params_.k);
}

bool XosHardCost::IsCyclic(std::uint32_t ring) const {
  return std::popcount(ring) == params_.m() &&
         CanonicalRotation(ring, params_.k) == canonical_T_;
}

double XosHardCost::Value(Subset s) const {
  const int k = params_.k;
  double v = 0.0;
  if (Contains(s, kHardBot)) v += 1.0;
  if (Contains(s, kHardG)) v += 1.0;
  const std::uint32_t ring = RingPart(s);
  if (ring == 0 && !Contains(s, kHardX)) return v;
  v += 1.0 / 40;
  if (ring == 0) return v;
  const int level =
      std::popcount(ring) < params_.m() || IsCyclic(ring) ? 1 : 2;
  return v + level / (80.0 * k);
}

Subset XosHardCost::Demand(std::span<const double> prices) const {
  return DemandVT(params_, prices);
}

nlohmann::json XosHardCost::ToJson(std::span<const std::string> ids) const {
  return TableCost::Materialize(*this)->ToJson(ids);
}

Instance GenXosHard(const HardParams& params) {
  auto cost = std::make_shared<XosHardCost>(params);
  return Instance(HardActions(params.k), "bot", std::move(cost));
}

// --- Demand -----------------------------------------------------------------

namespace {

// Ring subsets of a fixed size in ascending price order (best first),
// returning the first one accepted by `keep` together with every accepted set
// whose price is within 1e-12 of it.
template <typename Keep>
std::vector<std::uint32_t> CheapestRingSets(const std::vector<int>& by_price,
                                            std::span<const double> prices,
                                            int size, Keep keep) {
  const int k = static_cast<int>(by_price.size());
  if (size < 1 || size > k) return {};
  // States are sets of positions in by_price.
  auto price_of = [&](std::uint32_t positions) {
    double sum = 0.0;
    for (int p = 0; p < k; ++p) {
      if (positions & (std::uint32_t{1} << p)) {
        sum += prices[kHardFirstRing + by_price[p]];
      }
    }
    return sum;
  };
  auto to_ring = [&](std::uint32_t positions) {
    std::uint32_t ring = 0;
    for (int p = 0; p < k; ++p) {
      if (positions & (std::uint32_t{1} << p)) {
        ring |= std::uint32_t{1} << by_price[p];
      }
    }
    return ring;
  };
  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::uint32_t> seen;
  const std::uint32_t start = (std::uint32_t{1} << size) - 1;
  frontier.push({price_of(start), start});
  seen.insert(start);
  std::vector<std::uint32_t> out;
  double found_price = 0.0;
  while (!frontier.empty()) {
    const auto [price, positions] = frontier.top();
    frontier.pop();
    if (!out.empty() && price > found_price + 1e-12) break;
    const std::uint32_t ring = to_ring(positions);
    if (keep(ring)) {
      if (out.empty()) found_price = price;
      out.push_back(ring);
    }
    // Successors move one chosen position to the next free one.
    for (int p = 0; p + 1 < k; ++p) {
      const std::uint32_t here = std::uint32_t{1} << p;
      const std::uint32_t next = here << 1;
      if ((positions & here) && !(positions & next)) {
        const std::uint32_t child = (positions & ~here) | next;
        if (seen.insert(child).second) {
          frontier.push({price_of(child), child});
        }
      }
    }
  }
  return out;
}

}  // namespace

Subset DemandVT(const HardParams& params, std::span<const double> prices) {
  const int k = params.k;
  const int n = k + 3;
  if (static_cast<int>(prices.size()) != n) {
    throw InputError("price vector has wrong length");
  }
  const XosHardCost cost(params);

  std::vector<int> by_price(k);
  std::iota(by_price.begin(), by_price.end(), 0);
  std::stable_sort(by_price.begin(), by_price.end(), [&](int a, int b) {
    return prices[kHardFirstRing + a] < prices[kHardFirstRing + b];
  });

  std::vector<Subset> core = {kEmptySet, Singleton(kHardX)};
  const int m = params.m();
  auto any = [](std::uint32_t) { return true; };
  auto non_cyclic = [&](std::uint32_t ring) { return !cost.IsCyclic(ring); };
  for (std::uint32_t r : CheapestRingSets(by_price, prices, 1, any)) {
    core.push_back(FromRing(r));
  }
  for (std::uint32_t r : CheapestRingSets(by_price, prices, m, non_cyclic)) {
    core.push_back(FromRing(r));
  }
  for (std::uint32_t r : CheapestRingSets(by_price, prices, m + 1, any)) {
    core.push_back(FromRing(r));
  }

  // bot and g are separable; trying all four combinations keeps the final
  // comparison identical to the exhaustive oracle's arithmetic.
  Subset best = kEmptySet;
  double best_u = 0.0;
  const Subset extras[] = {kEmptySet, Singleton(kHardBot), Singleton(kHardG),
                           Singleton(kHardBot) | Singleton(kHardG)};
  for (Subset c : core) {
    for (Subset e : extras) {
      const Subset s = c | e;
      const double u = cost.Value(s) - PriceOf(s, prices);
      if (BetterDemand(u, s, best_u, best)) {
        best_u = u;
        best = s;
      }
    }
  }
  return best;
}

// --- XOS certificate --------------------------------------------------------

XosCertificate::XosCertificate(const HardParams& params)
    : params_(params), cost_(params) {}

double XosCertificate::MaxClause(Subset s) const {
  const int k = params_.k;
  const int m = params_.m();
  double base = 0.0;
  if (Contains(s, kHardBot)) base += 1.0;
  if (Contains(s, kHardG)) base += 1.0;
  const std::uint32_t ring = RingPart(s);
  const int r = std::popcount(ring);

  double best = Contains(s, kHardX) ? 1.0 / 40 : 0.0;
  if (r == 0) return base + best;
  best = std::max(best, Level1Value(k));

  // Largest |R ∩ S'| / |S'| over eligible S' (|S'| >= m, S' not cyclic).
  double ratio = static_cast<double>(std::min(r, m + 1)) / (m + 1);
  if (r == m) {
    if (!cost_.IsCyclic(ring)) {
      ratio = 1.0;
    } else {
      // Non-cyclic m-sets one swap away from R.
      bool found = false;
      for (int a = 0; a < k && !found; ++a) {
        if (!(ring & (1u << a))) continue;
        for (int b = 0; b < k && !found; ++b) {
          if (ring & (1u << b)) continue;
          found = !cost_.IsCyclic((ring & ~(1u << a)) | (1u << b));
        }
      }
      if (found) ratio = std::max(ratio, (m - 1.0) / m);
    }
  } else if (r < m) {
    std::uint64_t cyclic_supersets = 0;
    for (std::uint32_t c : Cyclic(params_.T, k)) {
      if ((ring & ~c) == 0) ++cyclic_supersets;
    }
    if (Binomial(k - r, m - r) > cyclic_supersets) {
      ratio = std::max(ratio, static_cast<double>(r) / m);
    }
  }
  best = std::max(best, Level2Value(k) * ratio);
  return base + best;
}

std::vector<std::vector<double>> XosCertificate::ExplicitClauses() const {
  const int k = params_.k;
  const int m = params_.m();
  const int n = k + 3;
  if (k > 13) throw SizeLimitError("explicit certificate limited to k <= 13");
  std::vector<double> base(n, 0.0);
  base[kHardBot] = 1.0;
  base[kHardG] = 1.0;
  std::vector<std::vector<double>> clauses;
  clauses.push_back(base);
  clauses.back()[kHardX] = 1.0 / 40;
  for (int t = 0; t < k; ++t) {
    clauses.push_back(base);
    clauses.back()[kHardFirstRing + t] = Level1Value(k);
  }
  for (int size = m; size <= k; ++size) {
    std::uint32_t v = (std::uint32_t{1} << size) - 1;
    while (v <= RingMask(k)) {
      if (!cost_.IsCyclic(v)) {
        clauses.push_back(base);
        for (int t = 0; t < k; ++t) {
          if (v & (1u << t)) {
            clauses.back()[kHardFirstRing + t] = Level2Value(k) / size;
          }
        }
      }
      if (size == k) break;
      v = NextCombination(v);
    }
  }
  return clauses;
}

// --- Optimal scheme ---------------------------------------------------------

InspectionScheme UniqueOptimalScheme(const HardParams& params) {
  params.Validate();
  if (!params.default_m()) {
    throw InputError("optimal scheme needs the default ring-set size");
  }
  const int k = params.k;
  const double t = params.m();
  InspectionScheme scheme;
  scheme.suggested = kHardG;
  scheme.alpha = 0.1;
  const double x_only = 2.0 / 3 - k / (2 * t);
  if (x_only < 0.0) throw std::logic_error("negative mass on {x}");
  for (std::uint32_t c : Cyclic(params.T, k)) {
    scheme.distribution.push_back({FromRing(c) | Singleton(kHardX), 1 / (2 * t)});
  }
  scheme.distribution.push_back({Singleton(kHardX), x_only});
  scheme.distribution.push_back({kEmptySet, 1.0 / 3});
  scheme.distribution = Canonicalize(scheme.distribution);
  return scheme;
}

double UniqueOptimalUtility(const HardParams& params) {
  return 53.0 / 60 - 1.0 / (160.0 * params.m());
}

// --- Query experiment -------------------------------------------------------

QueryExperimentReport QueryExperiment(int k, int trials, std::uint64_t seed,
                                      std::optional<int> m_override) {
  if (trials < 1) throw InputError("trials must be >= 1");
  HardParams probe;
  probe.k = k;
  probe.m_override = m_override;
  const int m = probe.m();
  probe.T = (std::uint32_t{1} << m) - 1;
  probe.Validate();

  // One representative per rotation class of size-m ring subsets.
  std::vector<std::uint32_t> classes;
  for (std::uint32_t v = (std::uint32_t{1} << m) - 1; v <= RingMask(k);
       v = NextCombination(v)) {
    if (CanonicalRotation(v, k) == v) classes.push_back(v);
  }
  if (classes.size() * k != Binomial(k, m)) {
    throw std::logic_error("rotation classes are not all of size k");
  }

  QueryExperimentReport report;
  report.k = k;
  report.m = m;
  report.trials = trials;
  report.seed = seed;
  report.default_m = !m_override.has_value();
  report.num_classes = classes.size();
  report.analytic_mean = (static_cast<double>(classes.size()) + 1) / 2;
  report.asymptotic_bound = std::pow(1.25, k);
  report.counts.assign(trials, 0);

  const double cyclic_value = 1.0 / 40 + 1.0 / (80.0 * k);
  auto run_trial = [&](int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::vector<int> ring(k);
    std::iota(ring.begin(), ring.end(), 0);
    std::shuffle(ring.begin(), ring.end(), rng);
    HardParams params = probe;
    params.T = 0;
    for (int t = 0; t < m; ++t) params.T |= std::uint32_t{1} << ring[t];
    CountingOracle oracle(std::make_shared<XosHardCost>(params));

    std::vector<std::uint32_t> order = classes;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> shift(0, k - 1);
    for (std::uint32_t rep : order) {
      const std::uint32_t member = RotateRing(rep, shift(rng), k);
      if (oracle.Value(FromRing(member)) <= cyclic_value + 1e-15) break;
    }
    report.counts[trial] = oracle.value_queries();
  };

  const int workers = static_cast<int>(std::clamp(
      std::thread::hardware_concurrency(), 1u, 8u));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min(workers, trials); ++w) {
    pool.emplace_back([&] {
      for (int t = next++; t < trials; t = next++) run_trial(t);
    });
  }
  for (auto& th : pool) th.join();

  std::vector<std::uint64_t> sorted = report.counts;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (auto c : sorted) total += static_cast<double>(c);
  report.mean = total / trials;
  report.median = trials % 2 == 1
                      ? static_cast<double>(sorted[trials / 2])
                      : (sorted[trials / 2 - 1] + sorted[trials / 2]) / 2.0;
  report.max = sorted.back();
  return report;
}

// --- Gap family -------------------------------------------------------------

Instance GenGapInstance(int n) {
  if (n < 3 || n > kMaxActions) throw InputError("gap instance needs 3 <= n <= 30");
  const double scale = std::ldexp(1.0, n);
  std::vector<Action> actions = {{"bot", 0.0, 0.0}};
  for (int i = 1; i <= n - 1; ++i) {
    const double pow = std::ldexp(1.0, i + 1);
    actions.push_back({std::to_string(i), (pow - i - 1) / scale, pow / scale});
  }
  auto cost = std::make_shared<AdditiveCost>(std::vector<double>(n, n / scale));
  return Instance(std::move(actions), "bot", std::move(cost));
}

InspectionScheme GapReferenceScheme(const Instance& gap, int n) {
  const int top = gap.IndexOf(std::to_string(n - 1));
  InspectionScheme scheme;
  scheme.suggested = top;
  scheme.alpha = 1.0 - n / std::ldexp(1.0, n);
  scheme.distribution = Canonicalize({{kEmptySet, 0.5}, {Singleton(top), 0.5}});
  return scheme;
}

// --- Non-IC example ---------------------------------------------------------

NonIcExample GenNonIcExample() {
  std::vector<Action> actions = {
      {"bot", 0.0, 0.0}, {"1", 0.1, 0.4}, {"2", 0.5, 1.0}};
  auto cost =
      std::make_shared<AdditiveCost>(std::vector<double>{0.0, 0.3, 2.0});
  Instance inst(std::move(actions), "bot", std::move(cost));
  InspectionScheme scheme;
  scheme.suggested = 0;
  scheme.alpha = 1.0;
  scheme.distribution =
      Canonicalize({{Singleton(0), 0.5}, {Singleton(1), 0.25}, {kEmptySet, 0.25}});
  return {inst, scheme, 2, 0.425, 1.45 - 2 * std::sqrt(0.3)};
}

NonIcDeterministicCheck CheckDeterministicNonIc(const Instance& inst) {
  const int n = inst.size();
  if (n > 12) throw SizeLimitError("non-IC check limited to 12 actions");
  NonIcDeterministicCheck out;
  out.best_ic = -std::numeric_limits<double>::infinity();
  out.best_non_ic = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
      // Effective success probability of each action under (i, S).
      std::vector<double> eff(n);
      for (int j = 0; j < n; ++j) {
        const bool caught = j != i && (s & (Singleton(i) | Singleton(j)));
        eff[j] = caught ? 0.0 : inst.prob(j);
      }
      std::vector<double> alphas = {0.0, 1.0};
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (eff[a] == eff[b]) continue;
          const double alpha = (inst.cost(a) - inst.cost(b)) / (eff[a] - eff[b]);
          if (alpha > 0.0 && alpha < 1.0) alphas.push_back(alpha);
        }
      }
      for (double alpha : alphas) {
        const InspectionScheme scheme =
            InspectionScheme::Deterministic(i, alpha, s);
        ++out.schemes_checked;
        if (IsIncentiveCompatible(inst, scheme, kDefaultTol)) {
          out.best_ic =
              std::max(out.best_ic, PrincipalUtility(inst, scheme, i));
          continue;
        }
        const int j = PrincipalFavoredResponse(inst, scheme, kDefaultTol);
        const double u = PrincipalUtility(inst, scheme, j);
        if (u > out.best_non_ic) {
          out.best_non_ic = u;
          out.best_non_ic_scheme = scheme;
        }
      }
    }
  }
  return out;
}

// --- Intro example ----------------------------------------------------------

Instance GenIntroExample() {
  std::vector<Action> actions = {
      {"bot", 0.0, 0.1}, {"b", 0.1, 0.5}, {"g", 0.35, 1.0}};
  auto cost =
      std::make_shared<AdditiveCost>(std::vector<double>{1.0, 1.0, 0.1});
  return Instance(std::move(actions), "bot", std::move(cost));
}

}  // namespace icx
