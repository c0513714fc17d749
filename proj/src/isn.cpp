#include "sandwich/isn.hpp"

#include <stdexcept>
#include <string>

namespace sandwich {

namespace {

void check_same_degree(const PartialInjection& alpha, const PartialInjection& beta) {
  if (alpha.degree() != beta.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(alpha.degree()) + " vs " +
                                std::to_string(beta.degree()));
  }
}

// fills unset positions with the unused targets, both taken in ascending order
Permutation extend_ascending(std::vector<int> images) {
  int n = static_cast<int>(images.size()) - 1;  // images is 1-based with images[0] unused
  std::vector<char> used(n + 1, 0);
  for (int p = 1; p <= n; ++p)
    if (images[p] != 0) used[images[p]] = 1;
  int next = 1;
  std::vector<int> out(n);
  for (int p = 1; p <= n; ++p) {
    if (images[p] == 0) {
      while (used[next]) ++next;
      images[p] = next;
      used[next] = 1;
    }
    out[p - 1] = images[p];
  }
  return Permutation(std::move(out));
}

}  // namespace

std::uint64_t idempotent_count_formula(const PartialInjection& alpha) {
  return std::uint64_t{1} << alpha.rank();
}

std::vector<PartialInjection> enumerate_idempotents_isn(const PartialInjection& alpha) {
  auto ran = alpha.range();
  auto alpha_inv = inverse(alpha);
  int r = static_cast<int>(ran.size());
  std::vector<PartialInjection> out;
  out.reserve(size_t{1} << r);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
    std::vector<int> img(alpha.degree(), PartialInjection::kUndefined);
    for (int b = 0; b < r; ++b)
      if (mask & (std::uint32_t{1} << b)) img[ran[b] - 1] = alpha_inv(ran[b]);
    out.emplace_back(std::move(img));
  }
  return out;
}

bool isn_isomorphic(const PartialInjection& alpha, const PartialInjection& beta) {
  check_same_degree(alpha, beta);
  return alpha.rank() == beta.rank();
}

IsnWitness isn_witness(const PartialInjection& alpha, const PartialInjection& beta) {
  check_same_degree(alpha, beta);
  if (alpha.rank() != beta.rank()) {
    throw std::invalid_argument("rank mismatch " + std::to_string(alpha.rank()) + " vs " +
                                std::to_string(beta.rank()));
  }
  int n = alpha.degree();
  auto dom_a = alpha.domain();
  auto dom_b = beta.domain();

  std::vector<int> tau_img(n + 1, 0);
  for (size_t i = 0; i < dom_b.size(); ++i) tau_img[dom_b[i]] = dom_a[i];
  Permutation tau = extend_ascending(std::move(tau_img));

  std::vector<int> pi_img(n + 1, 0);
  for (int x : dom_b) pi_img[alpha(tau(x))] = beta(x);
  Permutation pi = extend_ascending(std::move(pi_img));

  return IsnWitness{std::move(tau), std::move(pi)};
}

PartialInjection isn_iso_map(const IsnWitness& w, const PartialInjection& xi) {
  return compose(compose(w.pi.inverse().as_partial_injection(), xi),
                 w.tau.inverse().as_partial_injection());
}

std::uint64_t isn_class_count(int n) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  return static_cast<std::uint64_t>(n) + 1;
}

}  // namespace sandwich
