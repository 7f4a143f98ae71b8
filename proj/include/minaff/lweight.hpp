#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minaff/root_data.hpp"
#include "minaff/weight.hpp"

namespace minaff {

/// Element of the l-weight lattice with spectral parameters a*q^s.
///
/// Stored as (node, exponent) -> multiplicity of omega_{node, a q^s}; the
/// anchor a is implicit. Zero multiplicities are never stored.
class LWeight {
 public:
  using Key = std::pair<int, std::int64_t>;
  using Factors = std::map<Key, std::int64_t>;

  LWeight() = default;
  static LWeight fundamental(int node, std::int64_t s, std::int64_t mult = 1);

  const Factors& factors() const noexcept { return factors_; }
  bool is_identity() const noexcept { return factors_.empty(); }
  bool is_dominant() const noexcept;
  std::int64_t multiplicity(int node, std::int64_t s) const;

  void add(int node, std::int64_t s, std::int64_t mult);
  LWeight& operator*=(const LWeight& other);
  LWeight inverse() const;
  LWeight power(std::int64_t k) const;

  /// Exponent multiset of one node (each exponent repeated by its multiplicity).
  /// Throws NotIDominant if the node carries a negative multiplicity.
  std::vector<std::int64_t> exponents(int node) const;
  std::optional<std::pair<std::int64_t, std::int64_t>> exponent_range() const;

  std::string to_string() const;

  friend LWeight operator*(LWeight a, const LWeight& b) { return a *= b; }
  friend bool operator==(const LWeight&, const LWeight&) = default;

 private:
  Factors factors_;
};

LWeight multiply(const LWeight& a, const LWeight& b);
LWeight invert(const LWeight& a);
bool is_dominant(const LWeight& a);

/// q-string: centre s, length r, exponents s + d_i(r-1-2j).
struct QString {
  int node = 0;
  std::int64_t s = 0;
  std::int64_t r = 0;

  friend bool operator==(const QString&, const QString&) = default;
  friend auto operator<=>(const QString&, const QString&) = default;
};

LWeight q_string(const RootSystem& rs, int node, std::int64_t s, std::int64_t r);
LWeight omega_lambda(const RootSystem& rs, const Weight& lambda, std::int64_t s);
Weight wt(const RootSystem& rs, const LWeight& m);

/// alpha_{i,q^s} = omega_{i,q^{s+d_i},2} * prod_{j != i} omega_{j,q^{s+d_i},-c_ji}^{-1}.
LWeight simple_lroot(const RootSystem& rs, int node, std::int64_t s);

struct LRootTerm {
  int node = 0;
  std::int64_t s = 0;
  std::int64_t count = 0;

  friend bool operator==(const LRootTerm&, const LRootTerm&) = default;
};
using LRootCertificate = std::vector<LRootTerm>;

/// Product of the simple l-roots listed in a certificate.
LWeight certificate_product(const RootSystem& rs, const LRootCertificate& cert);

/// Default exponent window for l_dominance_leq: spread of lambda*mu^{-1} plus 2 r^v h^v.
std::int64_t default_window(const RootSystem& rs, const LWeight& mu, const LWeight& lambda);

/// A certificate R with lambda * mu^{-1} = prod_R alpha, or nothing if mu is not
/// below lambda. Throws WindowTooSmall if the spread of lambda*mu^{-1} exceeds window.
std::optional<LRootCertificate> l_dominance_leq(const RootSystem& rs, const LWeight& mu, const LWeight& lambda,
                                                std::optional<std::int64_t> window = std::nullopt);

/// Centres (s, r) of the unique factorization of an exponent multiset into
/// q_i-strings in general position, sorted by s then r.
std::vector<std::pair<std::int64_t, std::int64_t>> string_factorize(const RootSystem& rs, int node,
                                                                     std::vector<std::int64_t> exponents);
/// Same, with an explicit d_i.
std::vector<std::pair<std::int64_t, std::int64_t>> string_factorize_d(std::int64_t d,
                                                                       std::vector<std::int64_t> exponents);

/// Pairwise non-resonance of two strings with the given d_i.
bool strings_in_general_position(std::int64_t d, std::pair<std::int64_t, std::int64_t> a,
                                 std::pair<std::int64_t, std::int64_t> b);

LWeight star(const RootSystem& rs, const LWeight& lambda);
LWeight costar(const RootSystem& rs, const LWeight& lambda);

/// b_k = s_k + d_i(r_k - 1) for each string (s_k, r_k) of node i.
std::vector<std::int64_t> fm_lowering_exponents(const RootSystem& rs, const LWeight& mu, int node);

/// l-character of the sl2 module with highest l-weight q_string(1, s, r).
std::vector<LWeight> sl2_lcharacter(std::int64_t s, std::int64_t r);

}  // namespace minaff
