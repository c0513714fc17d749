#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

/// Element of the bicyclic monoid <a,b | ab = 1> in its unique canonical
/// form b^m a^k, m,k >= 0. Exponent arithmetic is overflow-checked; an
/// std::overflow_error is preferred to silent wraparound.
class BicyclicElement {
 public:
  BicyclicElement() : b_exp_(0), a_exp_(0) {}  // identity
  BicyclicElement(std::int64_t b_exp, std::int64_t a_exp);

  static BicyclicElement one() { return BicyclicElement(); }

  std::int64_t b_exp() const { return b_exp_; }
  std::int64_t a_exp() const { return a_exp_; }

  bool operator==(const BicyclicElement&) const = default;
  friend bool operator<(const BicyclicElement& lhs, const BicyclicElement& rhs) {
    if (lhs.b_exp_ != rhs.b_exp_) return lhs.b_exp_ < rhs.b_exp_;
    return lhs.a_exp_ < rhs.a_exp_;
  }

 private:
  std::int64_t b_exp_;
  std::int64_t a_exp_;
};

/// Canonical-form product: b^m a^k . b^t a^s is b^m a^(k-t+s) when k >= t
/// and b^(m+t-k) a^s otherwise.
BicyclicElement bmul(const BicyclicElement& x, const BicyclicElement& y);

/// The inverse in the bicyclic monoid: (b^m a^k)^-1 = b^k a^m.
BicyclicElement binv(const BicyclicElement& x);

/// x *_alpha y = x.alpha.y.
BicyclicElement sandwich_product(const BicyclicElement& x, const BicyclicElement& alpha,
                                 const BicyclicElement& y);

/// The i-th idempotent of (B, *_alpha) for alpha = b^m a^k: b^(k+i) a^(m+i).
/// They form an infinite descending chain in the natural partial order.
BicyclicElement epsilon(const BicyclicElement& alpha, std::int64_t i);

/// xi *_alpha xi == xi, decided by direct canonical-form computation.
bool is_deformed_idempotent(const BicyclicElement& xi, const BicyclicElement& alpha);

/// Natural partial order e <= f on elements (ef = fe = e), evaluated by
/// direct products under *_alpha.
bool natural_order_leq(const BicyclicElement& e, const BicyclicElement& f,
                       const BicyclicElement& alpha);

/// Chain law for the idempotents eps_i of any (B,*_alpha):
/// eps_i <= eps_j iff i >= j.
bool idempotent_leq(std::int64_t i, std::int64_t j);

// P_i = { xi : eps_i *_alpha xi != xi } and Q_i = { xi : xi *_alpha eps_i != xi }.
// The direct versions evaluate the defining product; the closed forms use
// the canonical-form criteria (xi = b^t a^s lies outside P_i iff t >= k+i,
// outside Q_i iff s >= m+i). Both routes must agree and are tested
// against each other.
bool in_P(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i);
bool in_Q(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i);
bool in_P_closed_form(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i);
bool in_Q_closed_form(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i);

/// |P_i intersect Q_i| = (k+i)(m+i) for alpha = b^m a^k.
std::uint64_t pq_cardinality(const BicyclicElement& alpha, std::int64_t i);

/// |P_i intersect Q_j| = (k+i)(m+j), the mixed-index window size.
std::uint64_t pq_mixed_cardinality(const BicyclicElement& alpha, std::int64_t i, std::int64_t j);

/// Members of P_i intersect Q_j with b-exponent <= t_bound and a-exponent
/// <= s_bound, membership decided by direct product evaluation. With bounds
/// beyond the window edges k+i and m+j this enumerates the whole (finite)
/// intersection.
std::vector<BicyclicElement> pq_members(const BicyclicElement& alpha, std::int64_t i,
                                        std::int64_t j, std::int64_t t_bound,
                                        std::int64_t s_bound);

/// Recovers alpha = b^m a^k from the window cardinalities
/// c11 = |P_1 n Q_1|, c10 = |P_1 n Q_0|, c01 = |P_0 n Q_1| via
/// k = c11 - c10 - 1 and m = c11 - c01 - 1. Distinct sandwich elements have
/// distinct cardinality triples, so this separates all deformed semigroups
/// of B. Throws std::invalid_argument on a triple no alpha realizes.
BicyclicElement recover_sandwich(std::int64_t c11, std::int64_t c10, std::int64_t c01);

/// The anti-isomorphism (B,*_alpha) -> (B,*_alpha^-1): b^x a^y -> b^y a^x.
/// Satisfies phi(xi *_alpha eta) = phi(eta) *_binv(alpha) phi(xi).
BicyclicElement anti_iso_phi(const BicyclicElement& xi);

// Literal grammar: "b^m a^k" with the b^0 / a^0 factor omitted and "1" for
// the identity; a bare "b" or "a" means exponent 1. The printer always
// writes explicit exponents, and parse(print(x)) == x.
std::string to_literal(const BicyclicElement& x);
BicyclicElement parse_bicyclic(std::string_view text);

}  // namespace sandwich
