#include "minaff/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

void GradedCharacter::add(std::int64_t grade, const Weight& mu, std::int64_t mult) {
  if (mult == 0) return;
  auto& piece = pieces_[grade];
  piece[mu] = checked::add(piece[mu], mult);
  if (piece[mu] == 0) piece.erase(mu);
  if (piece.empty()) pieces_.erase(grade);
}

const GradedCharacter::Piece& GradedCharacter::piece(std::int64_t grade) const {
  static const Piece empty;
  auto it = pieces_.find(grade);
  return it == pieces_.end() ? empty : it->second;
}

std::size_t GradedCharacter::constituent_count() const {
  std::size_t n = 0;
  for (const auto& [g, p] : pieces_) n += p.size();
  return n;
}

std::vector<std::pair<Weight, BigInt>> GradedCharacter::ungraded() const {
  std::map<Weight, BigInt> acc;
  for (const auto& [g, p] : pieces_)
    for (const auto& [mu, m] : p) acc[mu] += m;
  return {acc.begin(), acc.end()};
}

namespace {

void require_orthogonal(const RootSystem& rs) {
  const auto s = rs.type().series;
  if (s != Series::B && s != Series::D)
    throw Error(ErrorCode::UnsupportedType, "graded characters are implemented for types B and D, got " + rs.to_string());
}

void require_d4(const RootSystem& rs) {
  if (rs.type().series != Series::D || rs.rank() != 4)
    throw Error(ErrorCode::UnsupportedType, "this formula needs D4, got " + rs.to_string());
}

void require_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node) + " outside 1.." + std::to_string(rs.rank()));
}

void require_leg(int leg) {
  if (leg != 1 && leg != 3 && leg != 4) throw Error(ErrorCode::IndexOutOfRange, "D4 leg must be 1, 3 or 4");
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::InvalidArgument, "weight " + lambda.to_string() + " has wrong length for " + rs.to_string());
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
}

bool supp_within(const Weight& lambda, std::initializer_list<int> allowed) {
  const std::set<int> ok(allowed);
  for (int i : supp(lambda))
    if (!ok.count(i)) return false;
  return true;
}

// Named positive roots of types B and D, in the labelling of the R^+ tables.
struct NamedRoot {
  enum Kind { Alpha, Theta, Vartheta } kind;
  int j;
  int k;
  Root root;
};

std::vector<NamedRoot> named_roots(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<NamedRoot> out;
  auto alpha = [&](int j, int k) {
    out.push_back({NamedRoot::Alpha, j, k, special_root(rs, SpecialRootSpec::alpha_chain(j, k))});
  };
  if (rs.type().series == Series::B) {
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) alpha(j, k);
    for (int j = 1; j < n; ++j)
      for (int k = j; k < n; ++k)
        out.push_back({NamedRoot::Theta, j, k, special_root(rs, SpecialRootSpec::theta(j, k))});
  } else {
    for (int j = 1; j < n; ++j)
      for (int k = j; k < n; ++k) alpha(j, k);
    for (int j = 1; j <= n - 2; ++j) alpha(j, n);
    alpha(n, n);
    for (int j = 1; j <= n - 2; ++j)
      out.push_back({NamedRoot::Vartheta, j, 0, special_root(rs, SpecialRootSpec::vartheta(j))});
    for (int j = 1; j <= n - 3; ++j)
      for (int k = j; k <= n - 3; ++k)
        out.push_back({NamedRoot::Theta, j, k, special_root(rs, SpecialRootSpec::theta(j, k))});
  }
  return out;
}

bool in_table(const RootSystem& rs, const NamedRoot& a, int i, std::int64_t r) {
  const int n = rs.rank();
  const bool spin_d = rs.type().series == Series::D && i >= n - 1;
  if (spin_d) {
    // Only r = 0 reaches here for the spin nodes of D.
    const int other = i == n ? n - 1 : n;
    return a.kind == NamedRoot::Alpha && (a.k < n - 1 || a.k == other);
  }
  switch (a.kind) {
    case NamedRoot::Alpha:
      return r >= 1 || i < a.j || a.k < i;
    case NamedRoot::Vartheta:
      return r >= 1 || i < a.j;
    case NamedRoot::Theta:
      return r >= 1 ? i <= a.k : i < a.j;
  }
  return false;
}

std::vector<Root> sorted_roots(const RootSystem& rs, const std::set<Root>& chosen) {
  std::vector<Root> out;
  for (const auto& a : rs.positive_roots())
    if (chosen.count(a)) out.push_back(a);
  return out;
}

Weight root_sum_weight(const RootSystem& rs, const std::vector<std::int64_t>& coeffs) {
  return rs.root_weight_coords(Root{coeffs});
}

}  // namespace

Rational d_prime(const RootSystem& rs, int node) {
  require_node(rs, node);
  return Rational(rs.d(node), rs.lacing());
}

std::int64_t floor_d_prime(const RootSystem& rs, int node, std::int64_t m) {
  require_node(rs, node);
  const std::int64_t num = checked::mul(rs.d(node), m);
  const std::int64_t den = rs.lacing();
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::vector<Root> rplus_imr(const RootSystem& rs, int node, std::int64_t m, std::int64_t r) {
  require_orthogonal(rs);
  require_node(rs, node);
  if (m < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "m and r must be nonnegative");
  const int n = rs.rank();
  const bool full = m == 0 || r >= 2 ||
                    (r == 1 && rs.type().series == Series::B && node == n && m == 1) ||
                    (r == 1 && rs.type().series == Series::D && (node == 1 || node >= n - 1));
  if (full) return rs.positive_roots();
  std::set<Root> chosen;
  for (const auto& a : named_roots(rs))
    if (in_table(rs, a, node, r)) chosen.insert(a.root);
  return sorted_roots(rs, chosen);
}

std::vector<Root> rplus_lambda(const RootSystem& rs, const Weight& lambda, std::int64_t r) {
  require_orthogonal(rs);
  require_dominant(rs, lambda);
  std::set<Root> chosen(rs.positive_roots().begin(), rs.positive_roots().end());
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto part = rplus_imr(rs, i, lambda.at_node(i), r);
    const std::set<Root> keep(part.begin(), part.end());
    for (auto it = chosen.begin(); it != chosen.end();) it = keep.count(*it) ? std::next(it) : chosen.erase(it);
  }
  return sorted_roots(rs, chosen);
}

int i_lambda(const RootSystem& rs, const Weight& lambda, ILambdaVariant variant) {
  require_orthogonal(rs);
  require_dominant(rs, lambda);
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroWeight, "i_lambda is undefined for the zero weight");
  const int n = rs.rank();
  auto last_nonzero_below = [&](int bound) {
    int best = 1;
    for (int j = 1; j < bound; ++j)
      if (lambda.at_node(j) != 0) best = j;
    return best;
  };
  if (rs.type().series == Series::B) {
    if (variant == ILambdaVariant::Standard && lambda.at_node(n) != 1) return supp(lambda).back();
    return last_nonzero_below(n);
  }
  return last_nonzero_below(n - 1);
}

std::vector<IndexVector> index_set_A3(const RootSystem& rs, const Weight& lambda) {
  require_orthogonal(rs);
  require_dominant(rs, lambda);
  const int n = rs.rank();
  const bool ok = rs.type().series == Series::B
                      ? n >= 3 && (supp_within(lambda, {1, 2, 3}) ||
                                   (n > 3 && supp_within(lambda, {1, 2, 3, n}) && lambda.at_node(n) <= 1))
                      : n >= 5 && supp_within(lambda, {1, 2, 3, n - 1, n});
  if (!ok)
    throw Error(ErrorCode::UnsupportedSupport,
                "the three-node index set does not apply to " + lambda.to_string() + " in " + rs.to_string());
  const std::int64_t f = floor_d_prime(rs, 3, lambda.at_node(3));
  std::vector<IndexVector> out;
  for (std::int64_t r1 = 0; r1 <= f; ++r1)
    for (std::int64_t r2 = 0; r2 <= std::min(lambda.at_node(1), f - r1); ++r2)
      for (std::int64_t r3 = 0; r3 <= lambda.at_node(2); ++r3) out.push_back({r1, r2, r3});
  return out;
}

Weight wt_A3(const RootSystem& rs, const IndexVector& r) {
  if (r.size() != 3) throw Error(ErrorCode::InvalidArgument, "index vector must have three entries");
  return special_weight(rs, SpecialRootSpec::theta(2, 2)).scaled(r[0]) +
         special_weight(rs, SpecialRootSpec::theta(1, 2)).scaled(r[1]) +
         special_weight(rs, SpecialRootSpec::theta(1, 1)).scaled(r[2]);
}

std::vector<IndexVector> index_set_D3(const RootSystem& rs, const Weight& lambda, int leg) {
  require_d4(rs);
  require_leg(leg);
  require_dominant(rs, lambda);
  std::int64_t other = INT64_MAX;
  for (int q : {1, 3, 4})
    if (q != leg) other = std::min(other, lambda.at_node(q));
  std::vector<IndexVector> out;
  for (std::int64_t r1 = 0; r1 <= std::min(lambda.at_node(leg), other); ++r1)
    for (std::int64_t r2 = 0; r2 <= other - r1; ++r2)
      for (std::int64_t r3 = 0; r3 <= lambda.at_node(2); ++r3) out.push_back({r1, r2, r3});
  return out;
}

Weight wt_D3(const RootSystem& rs, const IndexVector& r, int leg) {
  require_d4(rs);
  require_leg(leg);
  if (r.size() != 3) throw Error(ErrorCode::InvalidArgument, "index vector must have three entries");
  // vartheta_1 = sum of all simple roots, vartheta_2 = vartheta_1 - alpha_p, theta = vartheta_1 + alpha_2.
  std::vector<std::int64_t> v1{1, 1, 1, 1}, v2 = v1, th = v1;
  v2[static_cast<std::size_t>(leg - 1)] -= 1;
  th[1] += 1;
  return root_sum_weight(rs, v1).scaled(r[0]) + root_sum_weight(rs, v2).scaled(r[1]) +
         root_sum_weight(rs, th).scaled(r[2]);
}

std::vector<IndexVector> index_set_spin_chain(const RootSystem& rs, std::int64_t m) {
  if (rs.type().series != Series::D)
    throw Error(ErrorCode::UnsupportedType, "the spin chain is defined for type D, got " + rs.to_string());
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be nonnegative");
  const auto len = static_cast<std::size_t>((rs.rank() - 2) / 2);
  std::vector<IndexVector> out;
  IndexVector cur(len, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t cap) {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= cap; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, m);
  return out;
}

Weight wt_spin_chain(const RootSystem& rs, const IndexVector& r) {
  if (rs.type().series != Series::D)
    throw Error(ErrorCode::UnsupportedType, "the spin chain is defined for type D, got " + rs.to_string());
  if (r.size() != static_cast<std::size_t>((rs.rank() - 2) / 2))
    throw Error(ErrorCode::InvalidArgument, "spin chain index vector has the wrong length");
  Weight w = rs.zero_weight();
  for (std::size_t j = 0; j < r.size(); ++j)
    w += special_weight(rs, SpecialRootSpec::spin_chain(static_cast<int>(j) + 1)).scaled(r[j]);
  return w;
}

std::string graded_case(const RootSystem& rs, const Weight& lambda) {
  require_orthogonal(rs);
  require_dominant(rs, lambda);
  const int n = rs.rank();
  if (rs.type().series == Series::B) {
    if (supp_within(lambda, {1, n}) && lambda.at_node(n) <= 1) return "irreducible";
    if (supp_within(lambda, {1, 2})) return "two-node";
    if (n >= 3 && (supp_within(lambda, {1, 2, 3}) ||
                   (n > 3 && supp_within(lambda, {1, 2, 3, n}) && lambda.at_node(n) <= 1)))
      return "three-node";
    throw Error(ErrorCode::UnsupportedSupport,
                "no closed formula for " + lambda.to_string() + " in " + rs.to_string() +
                    "; nearest case: support in {1,2,3} plus node n with lambda(h_n) <= 1");
  }
  if (supp_within(lambda, {1, n - 1, n})) return "irreducible";
  if (n == 4) return "D4";
  if (supp_within(lambda, {1, 2, 3, n - 1, n})) return "three-node";
  if (supp_within(lambda, {n - 2, n - 1, n})) return "spin-chain";
  throw Error(ErrorCode::UnsupportedSupport,
              "no closed formula for " + lambda.to_string() + " in " + rs.to_string() +
                  "; nearest cases: support in {1,2,3,n-1,n} or in {n-2,n-1,n}");
}

namespace {

void check_dominant_output(const GradedCharacter& g) {
  for (const auto& [grade, piece] : g.pieces())
    for (const auto& [mu, m] : piece)
      if (!mu.is_dominant())
        throw std::logic_error("non-dominant constituent " + mu.to_string() + " in grade " + std::to_string(grade));
}

GradedCharacter three_node(const RootSystem& rs, const Weight& lambda) {
  // Closed form: (m1 + r1 - r2, m2 + r2 - r3, m3 - a3^{-1}(r1 + r2)), a3^{-1} = 2 only in B3.
  const std::int64_t a3_inv = rs.type().series == Series::B && rs.rank() == 3 ? 2 : 1;
  GradedCharacter g;
  for (const auto& r : index_set_A3(rs, lambda)) {
    const Weight mu = lambda - wt_A3(rs, r);
    Weight closed = lambda;
    closed[0] = lambda[0] + r[0] - r[1];
    closed[1] = lambda[1] + r[1] - r[2];
    closed[2] = lambda[2] - a3_inv * (r[0] + r[1]);
    if (mu != closed) throw std::logic_error("three-node constituent disagrees with the closed form");
    g.add(gr(r), mu);
  }
  return g;
}

GradedCharacter spin_chain(const RootSystem& rs, const Weight& lambda, std::int64_t m) {
  GradedCharacter g;
  for (const auto& r : index_set_spin_chain(rs, m)) g.add(gr(r), lambda - wt_spin_chain(rs, r));
  return g;
}

GradedCharacter theta_chain(const Weight& lambda, const Weight& theta, std::int64_t top) {
  GradedCharacter g;
  for (std::int64_t l = 0; l <= top; ++l) g.add(l, lambda - theta.scaled(l));
  return g;
}

}  // namespace

GradedCharacter graded_character(const RootSystem& rs, const Weight& lambda) {
  const std::string which = graded_case(rs, lambda);
  const int n = rs.rank();
  GradedCharacter g;
  if (which == "irreducible") {
    g.add(0, lambda);
  } else if (which == "two-node") {
    g = theta_chain(lambda, special_weight(rs, SpecialRootSpec::theta(1, 1)),
                    floor_d_prime(rs, 2, lambda.at_node(2)));
  } else if (which == "three-node") {
    g = three_node(rs, lambda);
  } else if (which == "D4") {
    g = theta_chain(lambda, rs.fundamental_weight(2), lambda.at_node(2));
  } else {
    g = spin_chain(rs, lambda, lambda.at_node(n - 2));
  }
  check_dominant_output(g);
  return g;
}

GradedCharacter graded_character_Mk(const RootSystem& rs, const Weight& lambda, int leg) {
  require_d4(rs);
  require_leg(leg);
  require_dominant(rs, lambda);
  GradedCharacter g;
  for (const auto& r : index_set_D3(rs, lambda, leg)) {
    const Weight mu = lambda - wt_D3(rs, r, leg);
    // lambda - (r1 - r2) w_p - (r1 + r2)(w_q + w_q') - (r3 - r1) w_2
    Weight closed = lambda;
    for (int q : {1, 3, 4}) closed[static_cast<std::size_t>(q - 1)] -= q == leg ? r[0] - r[1] : r[0] + r[1];
    closed[1] -= r[2] - r[0];
    if (mu != closed) throw std::logic_error("D4 constituent disagrees with the closed form");
    g.add(gr(r), mu);
  }
  check_dominant_output(g);
  return g;
}

GradedCharacter spin_pair_character(const RootSystem& rs, std::int64_t m3, std::int64_t m4) {
  require_d4(rs);
  if (m3 < 0 || m4 < 0) throw Error(ErrorCode::InvalidArgument, "spin multiplicities must be nonnegative");
  const Weight top{0, 0, m3, m4};
  return theta_chain(top, wt_D3(rs, {0, 1, 0}, 1), std::min(m3, m4));
}

GradedCharacter kr_graded_character(const RootSystem& rs, int node, std::int64_t m) {
  require_orthogonal(rs);
  require_node(rs, node);
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be nonnegative");
  const int n = rs.rank();
  const Weight lambda = rs.fundamental_weight(node).scaled(m);
  GradedCharacter g;
  if (rs.type().series == Series::B) {
    if (node == 1) {
      g.add(0, lambda);
    } else if (node == 2) {
      g = theta_chain(lambda, special_weight(rs, SpecialRootSpec::theta(1, 1)), floor_d_prime(rs, 2, m));
    } else if (node == 3) {
      g = theta_chain(lambda, special_weight(rs, SpecialRootSpec::theta(2, 2)), floor_d_prime(rs, 3, m));
    } else if (node == n && m <= 1) {
      g.add(0, lambda);
    } else {
      throw Error(ErrorCode::UnsupportedSupport,
                  "no closed KR formula for node " + std::to_string(node) + " with m = " + std::to_string(m) + " in " +
                      rs.to_string());
    }
  } else {
    if (node == 1 || node >= n - 1) {
      g.add(0, lambda);
    } else if (node == n - 2) {
      g = spin_chain(rs, lambda, m);
    } else if (node <= 3) {
      g = three_node(rs, lambda);
    } else {
      throw Error(ErrorCode::UnsupportedSupport,
                  "no closed KR formula for node " + std::to_string(node) + " in " + rs.to_string());
    }
  }
  check_dominant_output(g);
  return g;
}

Character dominant_total(const RootSystem& rs, const GradedCharacter& g) {
  return dominant_character_of(rs, g.ungraded());
}

}  // namespace minaff
