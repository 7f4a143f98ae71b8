#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minaff/char_ring.hpp"
#include "minaff/root_data.hpp"

namespace minaff {

/// grade -> (dominant weight -> multiplicity). Grades and weights are kept sorted.
class GradedCharacter {
 public:
  using Piece = std::map<Weight, std::int64_t>;

  void add(std::int64_t grade, const Weight& mu, std::int64_t mult = 1);

  const std::map<std::int64_t, Piece>& pieces() const noexcept { return pieces_; }
  const Piece& piece(std::int64_t grade) const;
  std::size_t constituent_count() const;

  /// All constituents with grades forgotten.
  std::vector<std::pair<Weight, BigInt>> ungraded() const;

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  std::map<std::int64_t, Piece> pieces_;
};

/// d_i / r^v.
Rational d_prime(const RootSystem& rs, int node);
/// [d_i' m].
std::int64_t floor_d_prime(const RootSystem& rs, int node, std::int64_t m);

/// R^+(i, m, r), as a sorted list of positive roots.
std::vector<Root> rplus_imr(const RootSystem& rs, int node, std::int64_t m, std::int64_t r);
/// Intersection of R^+(i, lambda(h_i), r) over all nodes.
std::vector<Root> rplus_lambda(const RootSystem& rs, const Weight& lambda, std::int64_t r);

enum class ILambdaVariant { Standard, Quantized };
int i_lambda(const RootSystem& rs, const Weight& lambda, ILambdaVariant variant = ILambdaVariant::Standard);

using IndexVector = std::vector<std::int64_t>;

inline std::int64_t gr(const IndexVector& r) {
  std::int64_t s = 0;
  for (auto x : r) s += x;
  return s;
}

/// r3 <= lambda(h_2), r2 <= lambda(h_1), r1 + r2 <= [d_3' lambda(h_3)].
std::vector<IndexVector> index_set_A3(const RootSystem& rs, const Weight& lambda);
/// r1 theta_{2,2} + r2 theta_{1,2} + r3 theta_{1,1}.
Weight wt_A3(const RootSystem& rs, const IndexVector& r);

/// D4 index set with distinguished leg p and other legs q, q':
/// r1 <= lambda(h_p), r3 <= lambda(h_2), r1 + r2 <= min(lambda(h_q), lambda(h_q')).
std::vector<IndexVector> index_set_D3(const RootSystem& rs, const Weight& lambda, int leg = 1);
/// r1 vartheta_1 + r2 vartheta_2 + r3 theta, with
/// vartheta_1 = w_p + w_q + w_q' - w_2, vartheta_2 = w_q + w_q' - w_p, theta = w_2.
Weight wt_D3(const RootSystem& rs, const IndexVector& r, int leg = 1);

/// m >= r1 >= ... >= r_[(n-2)/2] >= 0.
std::vector<IndexVector> index_set_spin_chain(const RootSystem& rs, std::int64_t m);
/// sum r_j gamma_j with gamma_j = e_{n-1-2j} + e_{n-2j}.
Weight wt_spin_chain(const RootSystem& rs, const IndexVector& r);

/// Name of the closed formula that applies to lambda; throws like graded_character.
std::string graded_case(const RootSystem& rs, const Weight& lambda);

GradedCharacter graded_character(const RootSystem& rs, const Weight& lambda);
GradedCharacter graded_character_Mk(const RootSystem& rs, const Weight& lambda, int leg);
GradedCharacter spin_pair_character(const RootSystem& rs, std::int64_t m3, std::int64_t m4);
GradedCharacter kr_graded_character(const RootSystem& rs, int node, std::int64_t m);

/// Dominant part of the ungraded character.
Character dominant_total(const RootSystem& rs, const GradedCharacter& g);

}  // namespace minaff
