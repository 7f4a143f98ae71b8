#include "minaff/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

// ---------------------------------------------------------------- LieType

LieType LieType::parse(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorCode::UnsupportedType, "cannot parse type '" + text + "'");
  Series series;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': series = Series::A; break;
    case 'B': series = Series::B; break;
    case 'C': series = Series::C; break;
    case 'D': series = Series::D; break;
    default: throw Error(ErrorCode::UnsupportedType, "series must be one of A, B, C, D: '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::UnsupportedType, "bad rank in '" + text + "'");
  return {series, std::stoi(digits)};
}

std::string LieType::to_string() const {
  static const char* names = "ABCD";
  return std::string(1, names[static_cast<int>(series)]) + std::to_string(rank);
}

std::int64_t Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

// ---------------------------------------------------------------- RootSystem

namespace {

int min_rank(Series s) {
  switch (s) {
    case Series::A: return 1;
    case Series::B:
    case Series::C: return 2;
    case Series::D: return 4;
  }
  return 1;
}

std::vector<std::vector<std::int64_t>> classical_cartan(LieType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
  }
  return c;
}

std::vector<std::int64_t> classical_d(LieType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::int64_t> d(n, 1);
  if (t.series == Series::B) {
    std::fill(d.begin(), d.end() - 1, 2);
  } else if (t.series == Series::C) {
    d.back() = 2;
  }
  return d;
}

std::int64_t factorial(std::int64_t k) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f = checked::mul(f, i);
  return f;
}

std::int64_t pow2(std::int64_t k) { return checked::mul(1, std::int64_t{1} << k); }

}  // namespace

RootSystem::RootSystem(LieType type) : type_(type), n_(type.rank) {
  if (type.rank < min_rank(type.series) || type.rank > 64)
    throw Error(ErrorCode::UnsupportedType, "rank out of bounds for " + type.to_string());
  cartan_ = classical_cartan(type);
  d_ = classical_d(type);
  finish_construction();
}

RootSystem::RootSystem(LieType type, std::vector<std::vector<std::int64_t>> cartan, std::vector<std::int64_t> d)
    : type_(type), n_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)), d_(std::move(d)) {
  if (n_ != type_.rank || d_.size() != cartan_.size())
    throw Error(ErrorCode::InvalidArgument, "Cartan matrix size does not match type");
  finish_construction();
}

void RootSystem::finish_construction() {
  const auto n = static_cast<std::size_t>(n_);
  lacing_ = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) lacing_ = std::max(lacing_, cartan_[i][j] * cartan_[j][i]);
    }
  switch (type_.series) {
    case Series::A: dual_coxeter_ = n_ + 1; break;
    case Series::B: dual_coxeter_ = 2 * n_ - 1; break;
    case Series::C: dual_coxeter_ = n_ + 1; break;
    case Series::D: dual_coxeter_ = 2 * n_ - 2; break;
  }

  // Gauss-Jordan over rationals for C^{-1}; Bareiss for det(C).
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(cartan_[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw Error(ErrorCode::InvalidArgument, "singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  {
    std::vector<std::vector<std::int64_t>> m = cartan_;
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t s = k + 1;
        while (s < n && m[s][k] == 0) ++s;
        std::swap(m[s], m[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    det_ = sign * m[n - 1][n - 1];
  }
  adj_inverse_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = a[i][n + j] * Rational(det_);
      if (v.denominator() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral adjugate");
      adj_inverse_[i][j] = v.numerator();
    }

  generate_positive_roots();
}

void RootSystem::generate_positive_roots() {
  const auto n = static_cast<std::size_t>(n_);
  positive_roots_.clear();
  root_index_.clear();
  std::deque<Root> queue;
  auto add = [&](Root r) {
    if (root_index_.count(r)) return;
    root_index_.emplace(r, positive_roots_.size());
    positive_roots_.push_back(r);
    queue.push_back(std::move(r));
  };
  for (int i = 1; i <= n_; ++i) add(simple_root(i));
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // p = length of the alpha_i-string below beta; beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
      std::int64_t p = 0;
      Root down = beta;
      while (true) {
        if (down.coeffs[i] == 0) break;
        down.coeffs[i] -= 1;
        if (!root_index_.count(down)) break;
        ++p;
      }
      std::int64_t pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += beta.coeffs[j] * cartan_[i][j];
      if (p - pair > 0) {
        Root up = beta;
        up.coeffs[i] += 1;
        add(std::move(up));
      }
    }
  }
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs > b.coeffs;
  });
  root_index_.clear();
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) root_index_.emplace(positive_roots_[k], k);
}

bool RootSystem::is_positive_root(const Root& root) const { return root_index_.count(root) > 0; }

std::vector<int> RootSystem::neighbours(int node) const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (adjacent(node, j)) out.push_back(j);
  return out;
}

Root RootSystem::simple_root(int node) const {
  if (node < 1 || node > n_) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
  Root r{std::vector<std::int64_t>(static_cast<std::size_t>(n_), 0)};
  r.coeffs[idx(node)] = 1;
  return r;
}

Weight RootSystem::root_weight_coords(const Root& root) const {
  const auto n = static_cast<std::size_t>(n_);
  if (root.coeffs.size() != n) throw Error(ErrorCode::InvalidArgument, "root rank mismatch");
  Weight w(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s = checked::add(s, checked::mul(root.coeffs[i], cartan_[j][i]));
    w[j] = s;
  }
  return w;
}

Weight RootSystem::rho() const { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(n_), 1)); }

std::int64_t RootSystem::pairing_root_coeffs(const Weight& mu, const std::vector<std::int64_t>& beta) const {
  // (omega_i, alpha_j) = delta_ij d_j
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    s = checked::add(s, checked::mul(checked::mul(beta[j], d_[j]), mu[j]));
  return s;
}

std::int64_t RootSystem::pairing(const Weight& mu, const Root& alpha) const {
  return pairing_root_coeffs(mu, alpha.coeffs);
}

std::vector<Rational> RootSystem::to_root_basis(const Weight& w) const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked::add(s, checked::mul(adj_inverse_[i][j], w[j]));
    out[i] = Rational(s, det_);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> RootSystem::integral_root_coords(const Weight& w) const {
  std::vector<std::int64_t> out;
  for (const auto& r : to_root_basis(w)) {
    if (r.denominator() != 1) return std::nullopt;
    out.push_back(r.numerator());
  }
  return out;
}

std::int64_t RootSystem::scaled_height(const Weight& w) const {
  const auto n = static_cast<std::size_t>(n_);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s = checked::add(s, checked::mul(adj_inverse_[i][j], w[j]));
  return det_ > 0 ? s : -s;
}

Weight RootSystem::reflect(const Weight& w, int node) const {
  const std::size_t i = idx(node);
  Weight out = w;
  const std::int64_t c = w[i];
  if (c == 0) return out;
  for (std::size_t k = 0; k < out.rank(); ++k) out[k] = checked::sub(out[k], checked::mul(c, cartan_[k][i]));
  return out;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight cur = w;
  while (true) {
    int neg = 0;
    for (int i = 1; i <= n_; ++i)
      if (cur[idx(i)] < 0) {
        neg = i;
        break;
      }
    if (neg == 0) return cur;
    cur = reflect(cur, neg);
  }
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
  std::vector<Weight> out{w};
  std::unordered_set<Weight, WeightHash> seen{w};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 1; i <= n_; ++i) {
      if (out[k][idx(i)] == 0) continue;
      Weight r = reflect(out[k], i);
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t RootSystem::parabolic_order(const std::vector<int>& nodes) const {
  std::set<int> remaining(nodes.begin(), nodes.end());
  std::int64_t order = 1;
  while (!remaining.empty()) {
    // Connected component of the induced subgraph.
    std::vector<int> comp{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int nb : neighbours(comp[k])) {
        auto it = remaining.find(nb);
        if (it != remaining.end()) {
          comp.push_back(nb);
          remaining.erase(it);
        }
      }
    }
    const std::set<int> in(comp.begin(), comp.end());
    bool branch = false, doubled = false;
    for (int v : comp) {
      int deg = 0;
      for (int nb : neighbours(v))
        if (in.count(nb)) {
          ++deg;
          if (cartan(v, nb) != cartan(nb, v)) doubled = true;
        }
      if (deg >= 3) branch = true;
    }
    const auto k = static_cast<std::int64_t>(comp.size());
    std::int64_t part;
    if (branch) {
      part = checked::mul(pow2(k - 1), factorial(k));
    } else if (doubled) {
      part = checked::mul(pow2(k), factorial(k));
    } else {
      part = factorial(k + 1);
    }
    order = checked::mul(order, part);
  }
  return order;
}

std::int64_t RootSystem::weyl_group_order() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 1);
  return parabolic_order(all);
}

std::int64_t RootSystem::orbit_size(const Weight& dominant) const {
  std::vector<int> stab;
  for (int i = 1; i <= n_; ++i)
    if (dominant[idx(i)] == 0) stab.push_back(i);
  return weyl_group_order() / parabolic_order(stab);
}

int RootSystem::star_node(int node) const {
  if (node < 1 || node > n_) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
  switch (type_.series) {
    case Series::A: return n_ + 1 - node;
    case Series::D:
      if (n_ % 2 == 1 && node >= n_ - 1) return node == n_ ? n_ - 1 : n_;
      return node;
    default: return node;
  }
}

// ---------------------------------------------------------------- free functions

RootSystem build_root_system(LieType type) { return RootSystem(type); }

Weight root_weight_coords(const RootSystem& rs, const Root& root) { return rs.root_weight_coords(root); }

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  const auto coords = rs.integral_root_coords(lambda - mu);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), [](std::int64_t c) { return c >= 0; });
}

Weight star_weight(const RootSystem& rs, const Weight& lambda) {
  Weight out(lambda.rank());
  for (int i = 1; i <= rs.rank(); ++i) out[static_cast<std::size_t>(rs.star_node(i) - 1)] = lambda.at_node(i);
  return out;
}

namespace {

Root chain(const RootSystem& rs, int i, int j) {
  const int n = rs.rank();
  const bool type_d = rs.type().series == Series::D;
  if (i < 1 || j > n || i > j)
    throw Error(ErrorCode::IndexOutOfRange, "alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  Root r{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  if (type_d && j == n) {
    if (i == n) {
      r.coeffs[static_cast<std::size_t>(n - 1)] = 1;
      return r;
    }
    if (i >= n - 1) throw Error(ErrorCode::IndexOutOfRange, "alpha_{n-1,n} is undefined in type D");
    for (int k = i; k <= n - 2; ++k) r.coeffs[static_cast<std::size_t>(k - 1)] = 1;
    r.coeffs[static_cast<std::size_t>(n - 1)] = 1;
    return r;
  }
  for (int k = i; k <= j; ++k) r.coeffs[static_cast<std::size_t>(k - 1)] = 1;
  return r;
}

Root add_roots(Root a, const Root& b) {
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] += b.coeffs[k];
  return a;
}

}  // namespace

Root special_root(const RootSystem& rs, const SpecialRootSpec& spec) {
  const int n = rs.rank();
  const Series s = rs.type().series;
  using Kind = SpecialRootSpec::Kind;
  auto out_of_range = [&](const std::string& what) {
    return Error(ErrorCode::IndexOutOfRange, what + " out of range for " + rs.to_string());
  };
  Root r;
  switch (spec.kind) {
    case Kind::AlphaChain:
      r = chain(rs, spec.i, spec.j);
      break;
    case Kind::Theta:
      if (s == Series::B) {
        if (spec.i < 1 || spec.i > spec.j || spec.j >= n) throw out_of_range("theta_{i,j}");
        r = add_roots(chain(rs, spec.i, n), chain(rs, spec.j + 1, n));
      } else if (s == Series::D) {
        if (spec.i < 1 || spec.i > spec.j || spec.j > n - 3) throw out_of_range("theta_{i,j}");
        r = add_roots(chain(rs, spec.i, n - 1), chain(rs, spec.j + 1, n));
      } else {
        throw Error(ErrorCode::UnsupportedType, "theta_{i,j} is defined for types B and D only");
      }
      break;
    case Kind::Vartheta:
      if (s != Series::D) throw Error(ErrorCode::UnsupportedType, "vartheta_i is defined for type D only");
      if (spec.i < 1 || spec.i > n - 2) throw out_of_range("vartheta_i");
      r = add_roots(chain(rs, spec.i, n - 1), rs.simple_root(n));
      break;
    case Kind::SpinChain: {
      if (s != Series::D) throw Error(ErrorCode::UnsupportedType, "spin chain roots are defined for type D only");
      if (spec.i < 1 || spec.i > (n - 2) / 2) throw out_of_range("spin chain index");
      const int k = n - 1 - 2 * spec.i;
      r = special_root(rs, SpecialRootSpec::theta(k, k));
      break;
    }
  }
  if (!rs.is_positive_root(r)) throw Error(ErrorCode::IndexOutOfRange, "special root is not a root");
  return r;
}

Weight special_weight(const RootSystem& rs, const SpecialRootSpec& spec) {
  return rs.root_weight_coords(special_root(rs, spec));
}

std::vector<int> supp(const Weight& lambda) {
  std::vector<int> out;
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    if (lambda[i] != 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> connected_hull(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return {};
  const std::set<int> target(nodes.begin(), nodes.end());
  std::set<int> keep;
  for (int i = 1; i <= rs.rank(); ++i) keep.insert(i);
  // Dynkin diagrams are trees: prune leaves outside the target until none remain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = keep.begin(); it != keep.end();) {
      int deg = 0;
      for (int nb : rs.neighbours(*it)) deg += keep.count(nb) ? 1 : 0;
      if (!target.count(*it) && deg <= 1) {
        it = keep.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return {keep.begin(), keep.end()};
}

std::vector<int> supp_bar(const RootSystem& rs, const Weight& lambda) { return connected_hull(rs, supp(lambda)); }

bool is_connected(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  return connected_hull(rs, nodes).size() == std::set<int>(nodes.begin(), nodes.end()).size();
}

}  // namespace minaff
