#include "sandwich/bicyclic.hpp"

#include <charconv>
#include <stdexcept>

namespace sandwich {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bicyclic exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bicyclic exponent overflow");
  return r;
}

}  // namespace

BicyclicElement::BicyclicElement(std::int64_t b_exp, std::int64_t a_exp)
    : b_exp_(b_exp), a_exp_(a_exp) {
  if (b_exp < 0 || a_exp < 0) throw std::invalid_argument("bicyclic exponents must be nonnegative");
}

BicyclicElement bmul(const BicyclicElement& x, const BicyclicElement& y) {
  // b^m a^k . b^t a^s: the middle a^k b^t cancels to a^(k-t) or b^(t-k)
  if (x.a_exp() >= y.b_exp())
    return BicyclicElement(x.b_exp(), checked_add(x.a_exp() - y.b_exp(), y.a_exp()));
  return BicyclicElement(checked_add(x.b_exp(), y.b_exp() - x.a_exp()), y.a_exp());
}

BicyclicElement binv(const BicyclicElement& x) { return BicyclicElement(x.a_exp(), x.b_exp()); }

BicyclicElement sandwich_product(const BicyclicElement& x, const BicyclicElement& alpha,
                                 const BicyclicElement& y) {
  return bmul(bmul(x, alpha), y);
}

BicyclicElement epsilon(const BicyclicElement& alpha, std::int64_t i) {
  if (i < 0) throw std::invalid_argument("idempotent index must be nonnegative");
  return BicyclicElement(checked_add(alpha.a_exp(), i), checked_add(alpha.b_exp(), i));
}

bool is_deformed_idempotent(const BicyclicElement& xi, const BicyclicElement& alpha) {
  return sandwich_product(xi, alpha, xi) == xi;
}

bool natural_order_leq(const BicyclicElement& e, const BicyclicElement& f,
                       const BicyclicElement& alpha) {
  return sandwich_product(e, alpha, f) == e && sandwich_product(f, alpha, e) == e;
}

bool idempotent_leq(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw std::invalid_argument("idempotent index must be nonnegative");
  return i >= j;
}

bool in_P(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i) {
  return sandwich_product(epsilon(alpha, i), alpha, xi) != xi;
}

bool in_Q(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i) {
  return sandwich_product(xi, alpha, epsilon(alpha, i)) != xi;
}

bool in_P_closed_form(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i) {
  return xi.b_exp() < checked_add(alpha.a_exp(), i);
}

bool in_Q_closed_form(const BicyclicElement& xi, const BicyclicElement& alpha, std::int64_t i) {
  return xi.a_exp() < checked_add(alpha.b_exp(), i);
}

std::uint64_t pq_cardinality(const BicyclicElement& alpha, std::int64_t i) {
  return pq_mixed_cardinality(alpha, i, i);
}

std::uint64_t pq_mixed_cardinality(const BicyclicElement& alpha, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw std::invalid_argument("idempotent index must be nonnegative");
  return static_cast<std::uint64_t>(
      checked_mul(checked_add(alpha.a_exp(), i), checked_add(alpha.b_exp(), j)));
}

std::vector<BicyclicElement> pq_members(const BicyclicElement& alpha, std::int64_t i,
                                        std::int64_t j, std::int64_t t_bound,
                                        std::int64_t s_bound) {
  std::vector<BicyclicElement> out;
  for (std::int64_t t = 0; t <= t_bound; ++t)
    for (std::int64_t s = 0; s <= s_bound; ++s) {
      BicyclicElement xi(t, s);
      if (in_P(xi, alpha, i) && in_Q(xi, alpha, j)) out.push_back(xi);
    }
  return out;
}

BicyclicElement recover_sandwich(std::int64_t c11, std::int64_t c10, std::int64_t c01) {
  std::int64_t k = c11 - c10 - 1;
  std::int64_t m = c11 - c01 - 1;
  if (k < 0 || m < 0) throw std::invalid_argument("inconsistent cardinalities: negative exponent");
  BicyclicElement alpha(m, k);
  if (pq_mixed_cardinality(alpha, 1, 1) != static_cast<std::uint64_t>(c11) ||
      pq_mixed_cardinality(alpha, 1, 0) != static_cast<std::uint64_t>(c10) ||
      pq_mixed_cardinality(alpha, 0, 1) != static_cast<std::uint64_t>(c01)) {
    throw std::invalid_argument("inconsistent cardinalities: no sandwich element realizes them");
  }
  return alpha;
}

BicyclicElement anti_iso_phi(const BicyclicElement& xi) {
  return BicyclicElement(xi.a_exp(), xi.b_exp());
}

std::string to_literal(const BicyclicElement& x) {
  if (x.b_exp() == 0 && x.a_exp() == 0) return "1";
  std::string out;
  if (x.b_exp() > 0) out += "b^" + std::to_string(x.b_exp());
  if (x.a_exp() > 0) {
    if (!out.empty()) out += ' ';
    out += "a^" + std::to_string(x.a_exp());
  }
  return out;
}

BicyclicElement parse_bicyclic(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad bicyclic literal '" + std::string(text) + "': " + why);
  };
  auto exponent = [&]() -> std::int64_t {
    if (i >= text.size() || text[i] != '^') return 1;  // bare generator
    ++i;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) fail("expected a nonnegative exponent after '^'");
    i = static_cast<size_t>(ptr - text.data());
    return value;
  };

  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) fail("trailing characters after '1'");
    return BicyclicElement::one();
  }
  std::int64_t b_exp = 0, a_exp = 0;
  bool saw_factor = false;
  if (i < text.size() && text[i] == 'b') {
    ++i;
    b_exp = exponent();
    saw_factor = true;
    skip_ws();
  }
  if (i < text.size() && text[i] == 'a') {
    ++i;
    a_exp = exponent();
    saw_factor = true;
    skip_ws();
  }
  if (!saw_factor) fail("expected 'b', 'a' or '1'");
  if (i != text.size()) fail("trailing characters");
  return BicyclicElement(b_exp, a_exp);
}

}  // namespace sandwich
