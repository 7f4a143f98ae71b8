#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "minaff/weight.hpp"

namespace minaff {

enum class Series { A, B, C, D };

struct LieType {
  Series series;
  int rank;

  /// Parses "A3", "B4", ... Throws Error(UnsupportedType) on anything else.
  static LieType parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Positive root in the simple-root basis.
struct Root {
  std::vector<std::int64_t> coeffs;

  std::int64_t height() const;
  std::int64_t coeff_at(int node) const { return coeffs.at(static_cast<std::size_t>(node - 1)); }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.coeffs <=> b.coeffs; }
};

using Rational = boost::rational<std::int64_t>;

/// Named roots of types B and D.
///
///   AlphaChain(i,j)  alpha_i + ... + alpha_j (type D: alpha_{i,n} = alpha_{i,n-2} + alpha_n,
///                    alpha_{n,n} = alpha_n)
///   Theta(i,j)       B: alpha_{i,n} + alpha_{j+1,n};  D: alpha_{i,n-1} + alpha_{j+1,n}
///   Vartheta(i)      D: alpha_{i,n-1} + alpha_n
///   SpinChain(j)     D: e_{n-1-2j} + e_{n-2j}, i.e. Theta(n-1-2j, n-1-2j)
struct SpecialRootSpec {
  enum class Kind { AlphaChain, Theta, Vartheta, SpinChain };
  Kind kind;
  int i = 0;
  int j = 0;

  static SpecialRootSpec alpha_chain(int i, int j) { return {Kind::AlphaChain, i, j}; }
  static SpecialRootSpec theta(int i, int j) { return {Kind::Theta, i, j}; }
  static SpecialRootSpec vartheta(int i) { return {Kind::Vartheta, i, 0}; }
  static SpecialRootSpec spin_chain(int j) { return {Kind::SpinChain, j, 0}; }
};

/// Cartan data, positive roots and Weyl-group helpers for one classical type.
///
/// Conventions: c_ij = alpha_j(h_i); d makes DC symmetric with short roots
/// d = 1; nodes are 1-based Bourbaki labels. All members are immutable after
/// construction.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  /// A root system given by an explicit Cartan matrix and symmetrizer. Used for
  /// Dynkin subdiagrams, which keep the parent's d (not necessarily coprime).
  RootSystem(LieType type, std::vector<std::vector<std::int64_t>> cartan,
             std::vector<std::int64_t> d);

  const LieType& type() const noexcept { return type_; }
  int rank() const noexcept { return n_; }

  std::int64_t cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const noexcept { return cartan_; }
  std::int64_t d(int node) const { return d_[idx(node)]; }
  const std::vector<std::int64_t>& d_vector() const noexcept { return d_; }
  std::int64_t lacing() const noexcept { return lacing_; }
  std::int64_t dual_coxeter() const noexcept { return dual_coxeter_; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  bool is_positive_root(const Root& root) const;

  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
  std::vector<int> neighbours(int node) const;

  Root simple_root(int node) const;
  Weight root_weight_coords(const Root& root) const;
  Weight fundamental_weight(int node) const { return Weight::fundamental(static_cast<std::size_t>(n_), node); }
  Weight zero_weight() const { return Weight(static_cast<std::size_t>(n_)); }
  Weight rho() const;

  /// Invariant form (mu, alpha) with (alpha_i, alpha_i) = 2 d_i.
  std::int64_t pairing(const Weight& mu, const Root& alpha) const;
  /// (mu, beta) for beta given in the simple-root basis.
  std::int64_t pairing_root_coeffs(const Weight& mu, const std::vector<std::int64_t>& beta) const;

  /// Coordinates of a weight in the simple-root basis (exact rationals).
  std::vector<Rational> to_root_basis(const Weight& w) const;
  /// Simple-root coordinates if all of them are integers.
  std::optional<std::vector<std::int64_t>> integral_root_coords(const Weight& w) const;
  /// Height of a weight scaled by det(C), so that it is always an integer.
  std::int64_t scaled_height(const Weight& w) const;

  Weight reflect(const Weight& w, int node) const;
  Weight dominant_representative(const Weight& w) const;
  /// All Weyl conjugates of w (w need not be dominant).
  std::vector<Weight> orbit(const Weight& w) const;
  std::int64_t weyl_group_order() const;
  /// |W . mu| for dominant mu, from the parabolic stabilizer order.
  std::int64_t orbit_size(const Weight& dominant) const;
  /// Order of the Weyl group of the subdiagram on the given nodes.
  std::int64_t parabolic_order(const std::vector<int>& nodes) const;

  /// Node permutation induced by -w0.
  int star_node(int node) const;

  std::string to_string() const { return type_.to_string(); }

 private:
  static std::size_t idx(int node) { return static_cast<std::size_t>(node - 1); }
  void finish_construction();
  void generate_positive_roots();

  LieType type_;
  int n_ = 0;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> d_;
  std::int64_t lacing_ = 1;
  std::int64_t dual_coxeter_ = 0;
  std::vector<Root> positive_roots_;
  std::map<Root, std::size_t> root_index_;
  // det(C) * C^{-1}, and det(C).
  std::vector<std::vector<std::int64_t>> adj_inverse_;
  std::int64_t det_ = 1;
};

RootSystem build_root_system(LieType type);
Weight root_weight_coords(const RootSystem& rs, const Root& root);

/// True iff mu <= lambda, i.e. lambda - mu is a nonnegative integral combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// lambda* = -w0 lambda.
Weight star_weight(const RootSystem& rs, const Weight& lambda);

Root special_root(const RootSystem& rs, const SpecialRootSpec& spec);
/// Weight coordinates of special_root(rs, spec).
Weight special_weight(const RootSystem& rs, const SpecialRootSpec& spec);

/// Nodes with nonzero value, ascending.
std::vector<int> supp(const Weight& lambda);
/// Minimal connected subdiagram containing supp(lambda), ascending.
std::vector<int> supp_bar(const RootSystem& rs, const Weight& lambda);
/// Minimal connected subdiagram containing the given nodes.
std::vector<int> connected_hull(const RootSystem& rs, const std::vector<int>& nodes);
bool is_connected(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace minaff
