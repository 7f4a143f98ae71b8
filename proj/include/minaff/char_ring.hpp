#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minaff/root_data.hpp"
#include "minaff/weight.hpp"

namespace minaff {

using BigInt = boost::multiprecision::cpp_int;

/// Finite element of the group ring Z[P]. Zero coefficients are never stored.
class Character {
 public:
  using Terms = std::map<Weight, BigInt>;

  Character() = default;
  static Character monomial(const Weight& w, const BigInt& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(const Weight& w) const;

  void add(const Weight& w, const BigInt& coeff);
  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character scaled(const BigInt& factor) const;

  /// Sum of all coefficients (the dimension, for a module character).
  BigInt total() const;
  /// Terms whose weight is dominant.
  Character dominant_part() const;

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  Terms terms_;
};

/// Weight multiplicities of V(lambda) on the dominant chamber (Freudenthal).
std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Full character of V(lambda): dominant multiplicities spread over Weyl orbits.
Character irreducible_character(const RootSystem& rs, const Weight& lambda);

/// The dominant part of char V(lambda), without orbit expansion.
Character irreducible_dominant_character(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Sum of mult(mu) * |W mu| over the dominant multiplicities of V(lambda).
BigInt orbit_sum_dimension(const RootSystem& rs, const Weight& lambda);

Character multiply(const Character& a, const Character& b);

/// True iff every coefficient of a is at most the corresponding one of b.
bool character_leq(const Character& a, const Character& b);

/// True iff c[s_i mu] == c[mu] for every term and every simple reflection.
bool is_weyl_invariant(const RootSystem& rs, const Character& c);

/// Irreducible constituents of c, highest first. Throws NotDecomposable.
std::vector<std::pair<Weight, BigInt>> decompose(const RootSystem& rs, const Character& c);

/// Dominant part of sum mult * char V(mu).
Character dominant_character_of(const RootSystem& rs, const std::vector<std::pair<Weight, BigInt>>& parts);

}  // namespace minaff
