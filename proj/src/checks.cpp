#include "sandwich/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "sandwich/bicyclic.hpp"
#include "sandwich/deformed.hpp"
#include "sandwich/finite_maps.hpp"
#include "sandwich/isn.hpp"
#include "sandwich/iso_oracle.hpp"
#include "sandwich/tn.hpp"
#include "sandwich/util.hpp"

namespace sandwich::checks {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// keeps the first counterexample reported by any worker
class FailureCollector {
 public:
  void record(const std::string& message) {
    if (!failed_.exchange(true)) {
      std::lock_guard<std::mutex> lock(mutex_);
      first_ = message;
    }
  }
  bool failed() const { return failed_.load(); }
  std::string first() const { return first_; }

 private:
  std::atomic<bool> failed_{false};
  std::mutex mutex_;
  std::string first_;
};

CheckResult finish(std::string id, std::string name, const FailureCollector& failures,
                   std::uint64_t instances, const Stopwatch& watch) {
  return CheckResult{std::move(id), std::move(name), !failures.failed(), instances,
                     failures.first(), watch.seconds()};
}

std::string status_name(IsoStatus s) {
  switch (s) {
    case IsoStatus::found: return "found";
    case IsoStatus::none: return "none";
    case IsoStatus::budget_exceeded: return "budget exceeded";
  }
  return "?";
}

FiniteTransformation random_transformation(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> point(1, n);
  std::vector<int> img(n);
  for (int& v : img) v = point(rng);
  return FiniteTransformation(std::move(img));
}

PartialInjection random_partial_injection(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank_dist(0, n);
  int r = rank_dist(rng);
  std::vector<int> points(n), values(n);
  for (int i = 0; i < n; ++i) points[i] = values[i] = i + 1;
  std::shuffle(points.begin(), points.end(), rng);
  std::shuffle(values.begin(), values.end(), rng);
  std::vector<int> img(n, PartialInjection::kUndefined);
  for (int i = 0; i < r; ++i) img[points[i] - 1] = values[i];
  return PartialInjection(std::move(img));
}

BicyclicElement random_bicyclic(std::int64_t max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> e(0, max_exp);
  return BicyclicElement(e(rng), e(rng));
}

CayleyTable relabel(const CayleyTable& t, const std::vector<int>& sigma) {
  int n = t.size();
  std::vector<std::string> labels(n);
  std::vector<std::int32_t> products(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) labels[sigma[i]] = t.labels()[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      products[static_cast<size_t>(sigma[i]) * n + sigma[j]] = sigma[t.product(i, j)];
  return CayleyTable(std::move(labels), std::move(products));
}

}  // namespace

CheckResult check_lemma1(int n, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_partial_injections(n, n);
  parallel_for(jobs, static_cast<int>(elements.size()), [&](int idx) {
    if (failures.failed()) return;
    const auto& alpha = elements[idx];
    auto table = build_deformed_table(alpha, n, false);
    auto table_idems = idempotents_of_table(table);
    std::uint64_t formula = idempotent_count_formula(alpha);
    if (table_idems.size() != formula) {
      failures.record("alpha=" + to_literal(alpha) + ": table has " +
                      std::to_string(table_idems.size()) + " idempotents, formula gives " +
                      std::to_string(formula));
      return;
    }
    std::set<std::string> brute;
    for (int i : table_idems) brute.insert(table.labels()[i]);
    std::set<std::string> constructed;
    for (const auto& e : enumerate_idempotents_isn(alpha)) {
      if (!(sandwich_product(e, alpha, e) == e)) {
        failures.record("alpha=" + to_literal(alpha) + ": constructed element " + to_literal(e) +
                        " is not idempotent");
        return;
      }
      constructed.insert(to_literal(e));
    }
    if (brute != constructed) {
      failures.record("alpha=" + to_literal(alpha) +
                      ": constructed idempotent set differs from the table scan");
    }
  });
  return finish("lemma1", "idempotent count of (IS_" + std::to_string(n) + ",*_a) is 2^rank(a)",
                failures, elements.size(), watch);
}

CheckResult check_theorem1_sufficiency(int n, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_partial_injections(n, n);
  int count = static_cast<int>(elements.size());

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (elements[i].rank() == elements[j].rank()) pairs.emplace_back(i, j);

  parallel_for(jobs, static_cast<int>(pairs.size()), [&](int idx) {
    if (failures.failed()) return;
    const auto& alpha = elements[pairs[idx].first];
    const auto& beta = elements[pairs[idx].second];
    auto pair_name = [&] { return "(" + to_literal(alpha) + "," + to_literal(beta) + ")"; };
    auto w = isn_witness(alpha, beta);
    if (!(compose(compose(w.tau.as_partial_injection(), alpha), w.pi.as_partial_injection()) ==
          beta)) {
      failures.record(pair_name() + ": witness identity beta = tau.alpha.pi fails");
      return;
    }
    std::vector<PartialInjection> images;
    images.reserve(count);
    for (const auto& xi : elements) images.push_back(isn_iso_map(w, xi));
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != elements) {
      failures.record(pair_name() + ": induced map is not a bijection");
      return;
    }
    for (int i = 0; i < count && !failures.failed(); ++i)
      for (int j = 0; j < count; ++j) {
        if (!(isn_iso_map(w, sandwich_product(elements[i], alpha, elements[j])) ==
              sandwich_product(images[i], beta, images[j]))) {
          failures.record(pair_name() + ": homomorphism fails at (" + to_literal(elements[i]) +
                          "," + to_literal(elements[j]) + ")");
          return;
        }
      }
  });
  return finish("thm1-sufficiency",
                "same-rank pairs of IS_" + std::to_string(n) + " carry verified isomorphisms",
                failures, pairs.size(), watch);
}

CheckResult check_theorem1_necessity(int n, int oracle_samples, std::uint64_t seed, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_partial_injections(n, n);
  int count = static_cast<int>(elements.size());

  // brute-force idempotent count per sandwich element
  std::vector<std::uint64_t> idem_counts(count);
  std::vector<CayleyTable> tables;
  tables.reserve(count);
  for (const auto& alpha : elements) tables.push_back(build_deformed_table(alpha, n, false));
  parallel_for(jobs, count, [&](int i) {
    idem_counts[i] = idempotents_of_table(tables[i]).size();
  });

  std::uint64_t cross_rank_pairs = 0;
  for (int i = 0; i < count && !failures.failed(); ++i)
    for (int j = 0; j < count; ++j) {
      if (elements[i].rank() == elements[j].rank()) continue;
      ++cross_rank_pairs;
      if (idem_counts[i] == idem_counts[j]) {
        failures.record("(" + to_literal(elements[i]) + "," + to_literal(elements[j]) +
                        "): different ranks but equal idempotent counts");
        break;
      }
    }

  // sampled cross-rank pairs must be refuted by the search oracle
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, count - 1);
  std::vector<std::pair<int, int>> samples;
  while (static_cast<int>(samples.size()) < oracle_samples) {
    int i = pick(rng), j = pick(rng);
    if (elements[i].rank() != elements[j].rank()) samples.emplace_back(i, j);
  }
  parallel_for(jobs, static_cast<int>(samples.size()), [&](int s) {
    if (failures.failed()) return;
    auto [i, j] = samples[s];
    auto result = find_isomorphism(tables[i], tables[j]);
    if (result.status != IsoStatus::none) {
      failures.record("oracle returned '" + status_name(result.status) + "' for cross-rank pair (" +
                      to_literal(elements[i]) + "," + to_literal(elements[j]) + ")");
    }
  });

  return finish("thm1-necessity",
                "cross-rank pairs of IS_" + std::to_string(n) +
                    " are separated by idempotent counts and refuted by the oracle",
                failures, cross_rank_pairs + samples.size(), watch);
}

CheckResult check_isn_classification(int n) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_partial_injections(n, n);
  std::set<int> ranks;
  for (const auto& alpha : elements) ranks.insert(alpha.rank());
  if (ranks.size() != isn_class_count(n)) {
    failures.record("IS_" + std::to_string(n) + " yields " + std::to_string(ranks.size()) +
                    " classes, expected " + std::to_string(isn_class_count(n)));
  }
  return finish("isn-classes",
                "IS_" + std::to_string(n) + " splits into n+1 = " +
                    std::to_string(isn_class_count(n)) + " classes",
                failures, elements.size(), watch);
}

CheckResult check_lemma2_eq1(int n, bool include_definition_check, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_transformations(n, n);
  parallel_for(jobs, static_cast<int>(elements.size()), [&](int idx) {
    if (failures.failed()) return;
    const auto& a = elements[idx];
    auto partition = sim_a_classes(a, n);
    auto kernel = kernel_partition(a);

    std::uint64_t mass = 0;
    for (size_t c = 0; c < partition.keys.size(); ++c) {
      std::uint64_t actual = partition.classes[c].size();
      std::uint64_t predicted = predicted_class_size(kernel, partition.keys[c]);
      mass += actual;
      if (actual != predicted) {
        failures.record("a=" + to_literal(a) + ", key=" + to_literal(partition.keys[c]) +
                        ": class size " + std::to_string(actual) + " != predicted product " +
                        std::to_string(predicted));
        return;
      }
    }
    std::uint64_t expected_classes = checked_pow(a.image_size(), n);
    if (partition.keys.size() != expected_classes || mass != checked_pow(n, n)) {
      failures.record("a=" + to_literal(a) + ": class count " +
                      std::to_string(partition.keys.size()) + " or mass " + std::to_string(mass) +
                      " off (expected " + std::to_string(expected_classes) + " classes, mass " +
                      std::to_string(checked_pow(n, n)) + ")");
      return;
    }

    if (include_definition_check) {
      // xa = ya must agree with the defining relation: x ~ y iff xau = yau
      // for every u
      for (const auto& x : elements) {
        auto xa = compose(x, a);
        for (const auto& y : elements) {
          auto ya = compose(y, a);
          bool criterion = xa == ya;
          bool defining = true;
          for (const auto& u : elements) {
            if (!(compose(xa, u) == compose(ya, u))) {
              defining = false;
              break;
            }
          }
          if (criterion != defining) {
            failures.record("a=" + to_literal(a) + ", x=" + to_literal(x) + ", y=" + to_literal(y) +
                            ": xa=ya is " + (criterion ? "true" : "false") +
                            " but the for-all-u relation is " + (defining ? "true" : "false"));
            return;
          }
        }
      }
    }
  });
  return finish("lemma2-eq1",
                "~_a fibers of T_" + std::to_string(n) + " carry the predicted sizes",
                failures, elements.size(), watch);
}

CheckResult check_type_recovery(int n, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_transformations(n, n);
  parallel_for(jobs, static_cast<int>(elements.size()), [&](int idx) {
    if (failures.failed()) return;
    const auto& a = elements[idx];
    auto recovered = recover_type_from_class_sizes(sim_a_classes(a, n).multiset);
    if (!(recovered == type_of(a))) {
      failures.record("a=" + to_literal(a) + ": recovered " + recovered.to_string() +
                      ", actual type " + type_of(a).to_string());
    }
  });
  return finish("type-recovery",
                "class-size multisets of T_" + std::to_string(n) + " determine the type",
                failures, elements.size(), watch);
}

CheckResult check_theorem2(int n, int oracle_sample_degree, int oracle_samples,
                           std::uint64_t seed, int jobs) {
  Stopwatch watch;
  FailureCollector failures;
  auto elements = enumerate_transformations(n, n);
  int count = static_cast<int>(elements.size());

  std::vector<TypeVector> types;
  types.reserve(count);
  for (const auto& a : elements) types.push_back(type_of(a));

  // constructive isomorphisms on same-type pairs
  std::vector<std::pair<int, int>> same_type;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (types[i] == types[j]) same_type.emplace_back(i, j);
  parallel_for(jobs, static_cast<int>(same_type.size()), [&](int idx) {
    if (failures.failed()) return;
    const auto& a = elements[same_type[idx].first];
    const auto& b = elements[same_type[idx].second];
    auto pair_name = [&] { return "(" + to_literal(a) + "," + to_literal(b) + ")"; };
    auto w = tn_witness(a, b);
    if (!(compose(compose(w.tau.as_transformation(), a), w.pi.as_transformation()) == b)) {
      failures.record(pair_name() + ": witness identity b = tau.a.pi fails");
      return;
    }
    std::vector<FiniteTransformation> images;
    images.reserve(count);
    for (const auto& x : elements) images.push_back(tn_iso_map(w, x));
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != elements) {
      failures.record(pair_name() + ": induced map is not a bijection");
      return;
    }
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) {
        if (!(tn_iso_map(w, sandwich_product(elements[i], a, elements[j])) ==
              sandwich_product(images[i], b, images[j]))) {
          failures.record(pair_name() + ": homomorphism fails at (" + to_literal(elements[i]) +
                          "," + to_literal(elements[j]) + ")");
          return;
        }
      }
  });

  // cross-type pairs are separated by the class-size multiset
  std::vector<ClassSizeMultiset> multisets;
  multisets.reserve(count);
  for (const auto& a : elements) multisets.push_back(sim_a_classes(a, n).multiset);
  for (int i = 0; i < count && !failures.failed(); ++i)
    for (int j = 0; j < count; ++j) {
      if (types[i] == types[j]) continue;
      if (multisets[i] == multisets[j]) {
        failures.record("(" + to_literal(elements[i]) + "," + to_literal(elements[j]) +
                        "): different types but equal class-size multisets");
        break;
      }
    }

  // oracle agreement on every unordered pair at degree n
  std::vector<CayleyTable> tables;
  tables.reserve(count);
  for (const auto& a : elements) tables.push_back(build_deformed_table(a, n, false));
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) all_pairs.emplace_back(i, j);
  parallel_for(jobs, static_cast<int>(all_pairs.size()), [&](int idx) {
    if (failures.failed()) return;
    auto [i, j] = all_pairs[idx];
    bool expected = types[i] == types[j];
    auto result = find_isomorphism(tables[i], tables[j]);
    bool agrees = (expected && result.status == IsoStatus::found) ||
                  (!expected && result.status == IsoStatus::none);
    if (!agrees) {
      failures.record("oracle disagrees with the type criterion on (" + to_literal(elements[i]) +
                      "," + to_literal(elements[j]) + "): " + status_name(result.status));
    }
  });

  // sampled pairs at the higher degree
  std::uint64_t sampled = 0;
  if (oracle_samples > 0 && !failures.failed()) {
    auto big = enumerate_transformations(oracle_sample_degree, oracle_sample_degree);
    std::map<TypeVector, std::vector<int>> by_type;
    for (size_t i = 0; i < big.size(); ++i) by_type[type_of(big[i])].push_back(static_cast<int>(i));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(big.size()) - 1);
    std::vector<std::pair<int, int>> samples;
    while (static_cast<int>(samples.size()) < oracle_samples) {
      int i = pick(rng);
      if (samples.size() % 2 == 0) {
        const auto& bucket = by_type[type_of(big[i])];
        std::uniform_int_distribution<int> inner(0, static_cast<int>(bucket.size()) - 1);
        samples.emplace_back(i, bucket[inner(rng)]);
      } else {
        int j = pick(rng);
        if (type_of(big[i]) == type_of(big[j])) continue;
        samples.emplace_back(i, j);
      }
    }
    sampled = samples.size();
    parallel_for(jobs, static_cast<int>(samples.size()), [&](int s) {
      if (failures.failed()) return;
      auto [i, j] = samples[s];
      auto ta = build_deformed_table(big[i], oracle_sample_degree, false);
      auto tb = build_deformed_table(big[j], oracle_sample_degree, false);
      bool expected = type_of(big[i]) == type_of(big[j]);
      auto result = find_isomorphism(ta, tb);
      bool agrees = (expected && result.status == IsoStatus::found) ||
                    (!expected && result.status == IsoStatus::none);
      if (!agrees) {
        failures.record("oracle disagrees with the type criterion on T_" +
                        std::to_string(oracle_sample_degree) + " pair (" + to_literal(big[i]) +
                        "," + to_literal(big[j]) + "): " + status_name(result.status));
      }
    });
  }

  return finish("thm2",
                "type criterion for T_" + std::to_string(n) +
                    " (constructive isomorphisms, multiset separation, oracle agreement)",
                failures, all_pairs.size() + same_type.size() + sampled, watch);
}

CheckResult check_prop1(int brute_max, int sum_max, int class_max) {
  Stopwatch watch;
  FailureCollector failures;
  std::uint64_t instances = 0;

  for (int n = 1; n <= brute_max && !failures.failed(); ++n) {
    std::map<TypeVector, std::uint64_t> brute;
    for (const auto& a : enumerate_transformations(n, n)) ++brute[type_of(a)];
    auto type_list = enumerate_types(n);
    if (brute.size() != type_list.size()) {
      failures.record("T_" + std::to_string(n) + " realizes " + std::to_string(brute.size()) +
                      " types, enumerate_types lists " + std::to_string(type_list.size()));
      break;
    }
    for (const auto& t : type_list) {
      ++instances;
      auto it = brute.find(t);
      std::uint64_t actual = it == brute.end() ? 0 : it->second;
      if (actual != count_of_type(t)) {
        failures.record("type " + t.to_string() + " at n=" + std::to_string(n) + ": brute count " +
                        std::to_string(actual) + " != formula " +
                        std::to_string(count_of_type(t)));
        break;
      }
    }
  }

  for (int n = 1; n <= sum_max && !failures.failed(); ++n) {
    std::uint64_t sum = 0;
    for (const auto& t : enumerate_types(n)) sum += count_of_type(t);
    ++instances;
    if (sum != checked_pow(n, n)) {
      failures.record("sum of type counts at n=" + std::to_string(n) + " is " +
                      std::to_string(sum) + ", expected " + std::to_string(checked_pow(n, n)));
    }
  }

  for (int n = 1; n <= class_max && !failures.failed(); ++n) {
    std::set<TypeVector> realized;
    for (const auto& a : enumerate_transformations(n, n)) realized.insert(type_of(a));
    ++instances;
    if (realized.size() != partition_count(n) ||
        enumerate_types(n).size() != partition_count(n)) {
      failures.record("type classes over T_" + std::to_string(n) + ": " +
                      std::to_string(realized.size()) + " realized, p(n) = " +
                      std::to_string(partition_count(n)));
    }
  }

  return finish("prop1", "type counting formula and p(n) class count", failures, instances, watch);
}

CheckResult check_prop2(int grid_max, int exponent_max, int chain_max) {
  Stopwatch watch;
  FailureCollector failures;
  std::uint64_t instances = 0;

  for (std::int64_t m = 0; m <= grid_max && !failures.failed(); ++m)
    for (std::int64_t k = 0; k <= grid_max && !failures.failed(); ++k) {
      BicyclicElement alpha(m, k);
      ++instances;
      for (std::int64_t t = 0; t <= exponent_max && !failures.failed(); ++t)
        for (std::int64_t s = 0; s <= exponent_max; ++s) {
          BicyclicElement xi(t, s);
          bool direct = is_deformed_idempotent(xi, alpha);
          bool characterized = t >= k && t - k == s - m;
          if (direct != characterized) {
            failures.record("alpha=" + to_literal(alpha) + ", xi=" + to_literal(xi) +
                            ": direct idempotency " + (direct ? "true" : "false") +
                            " but chain characterization says " +
                            (characterized ? "true" : "false"));
            break;
          }
        }
      for (std::int64_t i = 0; i <= chain_max && !failures.failed(); ++i) {
        if (!is_deformed_idempotent(epsilon(alpha, i), alpha)) {
          failures.record("alpha=" + to_literal(alpha) + ": eps_" + std::to_string(i) +
                          " is not idempotent");
          break;
        }
        for (std::int64_t j = 0; j <= chain_max; ++j) {
          bool direct = natural_order_leq(epsilon(alpha, i), epsilon(alpha, j), alpha);
          if (direct != idempotent_leq(i, j)) {
            failures.record("alpha=" + to_literal(alpha) + ": eps_" + std::to_string(i) +
                            " <= eps_" + std::to_string(j) + " is " + (direct ? "true" : "false") +
                            " by direct products, chain law says " +
                            (idempotent_leq(i, j) ? "true" : "false"));
            break;
          }
        }
      }
    }

  return finish("prop2", "bicyclic deformed idempotents form the chain eps_i = b^(k+i) a^(m+i)",
                failures, instances, watch);
}

CheckResult check_theorem3(int grid_max) {
  Stopwatch watch;
  FailureCollector failures;
  std::uint64_t instances = 0;
  std::map<std::array<std::uint64_t, 3>, BicyclicElement> seen_triples;

  for (std::int64_t m = 0; m <= grid_max && !failures.failed(); ++m)
    for (std::int64_t k = 0; k <= grid_max && !failures.failed(); ++k) {
      BicyclicElement alpha(m, k);
      ++instances;
      for (std::int64_t i = 0; i <= 2 && !failures.failed(); ++i) {
        // direct enumeration well past the window edges k+i, m+i
        auto members = pq_members(alpha, i, i, k + i + 3, m + i + 3);
        if (members.size() != pq_cardinality(alpha, i)) {
          failures.record("alpha=" + to_literal(alpha) + ", i=" + std::to_string(i) +
                          ": enumeration finds " + std::to_string(members.size()) +
                          " members, formula gives " + std::to_string(pq_cardinality(alpha, i)));
          break;
        }
        for (const auto& xi : members) {
          if (xi.b_exp() >= k + i || xi.a_exp() >= m + i) {
            failures.record("alpha=" + to_literal(alpha) + ", i=" + std::to_string(i) + ": member " +
                            to_literal(xi) + " lies outside the predicted window");
            break;
          }
        }
        // direct and closed-form membership must agree over the box
        for (std::int64_t t = 0; t <= k + i + 3 && !failures.failed(); ++t)
          for (std::int64_t s = 0; s <= m + i + 3; ++s) {
            BicyclicElement xi(t, s);
            if (in_P(xi, alpha, i) != in_P_closed_form(xi, alpha, i) ||
                in_Q(xi, alpha, i) != in_Q_closed_form(xi, alpha, i)) {
              failures.record("alpha=" + to_literal(alpha) + ", i=" + std::to_string(i) +
                              ", xi=" + to_literal(xi) + ": direct and closed-form P/Q disagree");
              break;
            }
          }
      }
      if (failures.failed()) break;

      // cardinality triple -> sandwich element round trip, by direct counts
      std::uint64_t c11 = pq_members(alpha, 1, 1, k + 4, m + 4).size();
      std::uint64_t c10 = pq_members(alpha, 1, 0, k + 4, m + 4).size();
      std::uint64_t c01 = pq_members(alpha, 0, 1, k + 4, m + 4).size();
      auto recovered = recover_sandwich(static_cast<std::int64_t>(c11),
                                        static_cast<std::int64_t>(c10),
                                        static_cast<std::int64_t>(c01));
      if (!(recovered == alpha)) {
        failures.record("alpha=" + to_literal(alpha) + ": recovered " + to_literal(recovered) +
                        " from cardinality triple");
        break;
      }
      std::array<std::uint64_t, 3> triple{c11, c10, c01};
      auto [it, inserted] = seen_triples.emplace(triple, alpha);
      if (!inserted) {
        failures.record("alpha=" + to_literal(alpha) + " and " + to_literal(it->second) +
                        " share a cardinality triple");
      }
    }

  return finish("thm3", "P/Q window cardinalities separate the bicyclic sandwich elements",
                failures, instances, watch);
}

CheckResult check_theorem4(int exponent_max, int grid_max, std::uint64_t random_cases,
                           std::uint64_t seed) {
  Stopwatch watch;
  FailureCollector failures;
  std::uint64_t instances = 0;

  auto anti_identity_holds = [](const BicyclicElement& xi, const BicyclicElement& eta,
                                const BicyclicElement& alpha) {
    return anti_iso_phi(sandwich_product(xi, alpha, eta)) ==
           sandwich_product(anti_iso_phi(eta), binv(alpha), anti_iso_phi(xi));
  };

  for (std::int64_t m = 0; m <= grid_max && !failures.failed(); ++m)
    for (std::int64_t k = 0; k <= grid_max && !failures.failed(); ++k) {
      BicyclicElement alpha(m, k);
      for (std::int64_t x = 0; x <= exponent_max && !failures.failed(); ++x)
        for (std::int64_t y = 0; y <= exponent_max && !failures.failed(); ++y) {
          BicyclicElement xi(x, y);
          if (!(anti_iso_phi(anti_iso_phi(xi)) == xi)) {
            failures.record("phi is not an involution at " + to_literal(xi));
            break;
          }
          for (std::int64_t u = 0; u <= exponent_max && !failures.failed(); ++u)
            for (std::int64_t v = 0; v <= exponent_max; ++v) {
              ++instances;
              BicyclicElement eta(u, v);
              if (!anti_identity_holds(xi, eta, alpha)) {
                failures.record("alpha=" + to_literal(alpha) + ", xi=" + to_literal(xi) +
                                ", eta=" + to_literal(eta) + ": anti-homomorphism identity fails");
                break;
              }
            }
        }
    }

  std::mt19937_64 rng(seed);
  for (std::uint64_t c = 0; c < random_cases && !failures.failed(); ++c) {
    ++instances;
    auto alpha = random_bicyclic(1 << 20, rng);
    auto xi = random_bicyclic(1 << 20, rng);
    auto eta = random_bicyclic(1 << 20, rng);
    if (!anti_identity_holds(xi, eta, alpha)) {
      failures.record("randomized case: alpha=" + to_literal(alpha) + ", xi=" + to_literal(xi) +
                      ", eta=" + to_literal(eta));
    }
  }

  return finish("thm4", "phi(b^x a^y) = b^y a^x anti-isomorphism onto the inverse sandwich",
                failures, instances, watch);
}

CheckResult check_oracle(int relabelings, int degree_max, std::uint64_t seed, int jobs) {
  Stopwatch watch;
  FailureCollector failures;

  // pre-generate the trials so workers share no RNG state
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree_dist(1, degree_max);
  std::uniform_int_distribution<int> family_dist(0, 1);
  struct Trial {
    CayleyTable table;
    CayleyTable relabeled;
  };
  std::vector<Trial> trials;
  trials.reserve(relabelings);
  for (int c = 0; c < relabelings; ++c) {
    int n = degree_dist(rng);
    CayleyTable table = family_dist(rng) == 0
                            ? build_deformed_table(random_transformation(n, rng), n, false)
                            : build_deformed_table(random_partial_injection(n, rng), n, false);
    std::vector<int> sigma(table.size());
    for (int i = 0; i < table.size(); ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CayleyTable relabeled = relabel(table, sigma);
    trials.push_back(Trial{std::move(table), std::move(relabeled)});
  }

  parallel_for(jobs, static_cast<int>(trials.size()), [&](int c) {
    if (failures.failed()) return;
    const auto& trial = trials[c];
    auto result = find_isomorphism(trial.table, trial.relabeled);
    if (result.status != IsoStatus::found) {
      failures.record("trial " + std::to_string(c) + ": oracle returned '" +
                      status_name(result.status) + "' on a relabeled copy");
      return;
    }
    if (!verify_isomorphism(trial.table, trial.relabeled, result.mapping)) {
      failures.record("trial " + std::to_string(c) + ": returned mapping fails verification");
    }
  });

  return finish("oracle-crosscheck",
                "oracle maps random deformed tables onto their random relabelings", failures,
                static_cast<std::uint64_t>(relabelings), watch);
}

}  // namespace sandwich::checks
