#include "minaff/lweight.hpp"

#include <algorithm>
#include <set>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

LWeight LWeight::fundamental(int node, std::int64_t s, std::int64_t mult) {
  LWeight m;
  m.add(node, s, mult);
  return m;
}

bool LWeight::is_dominant() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second > 0; });
}

std::int64_t LWeight::multiplicity(int node, std::int64_t s) const {
  auto it = factors_.find({node, s});
  return it == factors_.end() ? 0 : it->second;
}

void LWeight::add(int node, std::int64_t s, std::int64_t mult) {
  if (node < 1) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
  if (mult == 0) return;
  auto [it, inserted] = factors_.try_emplace({node, s}, mult);
  if (!inserted) {
    it->second = checked::add(it->second, mult);
    if (it->second == 0) factors_.erase(it);
  }
}

LWeight& LWeight::operator*=(const LWeight& other) {
  for (const auto& [k, m] : other.factors_) add(k.first, k.second, m);
  return *this;
}

LWeight LWeight::inverse() const {
  LWeight out;
  for (const auto& [k, m] : factors_) out.factors_.emplace(k, checked::sub(0, m));
  return out;
}

LWeight LWeight::power(std::int64_t k) const {
  LWeight out;
  if (k == 0) return out;
  for (const auto& [key, m] : factors_) out.factors_.emplace(key, checked::mul(m, k));
  return out;
}

std::vector<std::int64_t> LWeight::exponents(int node) const {
  std::vector<std::int64_t> out;
  for (auto it = factors_.lower_bound({node, INT64_MIN}); it != factors_.end() && it->first.first == node; ++it) {
    if (it->second < 0)
      throw Error(ErrorCode::NotIDominant, "node " + std::to_string(node) + " has a negative factor at exponent " +
                                               std::to_string(it->first.second));
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first.second);
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> LWeight::exponent_range() const {
  if (factors_.empty()) return std::nullopt;
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto& [k, m] : factors_) {
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  return std::make_pair(lo, hi);
}

std::string LWeight::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [k, m] : factors_) {
    if (!s.empty()) s += " ";
    s += "w(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s;
}

LWeight multiply(const LWeight& a, const LWeight& b) { return a * b; }
LWeight invert(const LWeight& a) { return a.inverse(); }
bool is_dominant(const LWeight& a) { return a.is_dominant(); }

namespace {

void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node) + " outside 1.." + std::to_string(rs.rank()));
}

}  // namespace

LWeight q_string(const RootSystem& rs, int node, std::int64_t s, std::int64_t r) {
  check_node(rs, node);
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "q-string length must be nonnegative");
  const std::int64_t d = rs.d(node);
  LWeight m;
  for (std::int64_t j = 0; j < r; ++j) m.add(node, checked::add(s, checked::mul(d, r - 1 - 2 * j)), 1);
  return m;
}

LWeight omega_lambda(const RootSystem& rs, const Weight& lambda, std::int64_t s) {
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::InvalidArgument, "weight length does not match " + rs.to_string());
  LWeight m;
  for (int i = 1; i <= rs.rank(); ++i) m.add(i, s, lambda.at_node(i));
  return m;
}

Weight wt(const RootSystem& rs, const LWeight& m) {
  Weight w = rs.zero_weight();
  for (const auto& [k, mult] : m.factors()) {
    check_node(rs, k.first);
    w[static_cast<std::size_t>(k.first - 1)] = checked::add(w[static_cast<std::size_t>(k.first - 1)], mult);
  }
  return w;
}

LWeight simple_lroot(const RootSystem& rs, int node, std::int64_t s) {
  check_node(rs, node);
  const std::int64_t centre = checked::add(s, rs.d(node));
  LWeight m = q_string(rs, node, centre, 2);
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j == node || rs.cartan(j, node) == 0) continue;
    m *= q_string(rs, j, centre, -rs.cartan(j, node)).inverse();
  }
  return m;
}

LWeight certificate_product(const RootSystem& rs, const LRootCertificate& cert) {
  LWeight m;
  for (const auto& t : cert) m *= simple_lroot(rs, t.node, t.s).power(t.count);
  return m;
}

std::int64_t default_window(const RootSystem& rs, const LWeight& mu, const LWeight& lambda) {
  const auto range = (lambda * mu.inverse()).exponent_range();
  const std::int64_t spread = range ? range->second - range->first : 0;
  return spread + 2 * rs.lacing() * rs.dual_coxeter();
}

std::optional<LRootCertificate> l_dominance_leq(const RootSystem& rs, const LWeight& mu, const LWeight& lambda,
                                                std::optional<std::int64_t> window) {
  LWeight rest = lambda * mu.inverse();
  LRootCertificate cert;
  const auto range = rest.exponent_range();
  if (!range) return cert;
  const std::int64_t spread = range->second - range->first;
  const std::int64_t win = window.value_or(default_window(rs, mu, lambda));
  if (spread > win)
    throw Error(ErrorCode::WindowTooSmall,
                "exponent spread " + std::to_string(spread) + " exceeds window " + std::to_string(win));

  auto counts = rs.integral_root_coords(wt(rs, rest));
  if (!counts) return std::nullopt;
  for (auto c : *counts)
    if (c < 0) return std::nullopt;

  // Every negative factor of alpha_{i,s} sits strictly above s, so the lowest
  // exponent of the remainder must be covered by roots placed exactly there.
  const std::int64_t limit = range->first + win;
  while (!rest.is_identity()) {
    const std::int64_t s0 = rest.exponent_range()->first;
    if (s0 > limit) return std::nullopt;
    std::vector<std::pair<int, std::int64_t>> low;
    for (const auto& [k, m] : rest.factors())
      if (k.second == s0) low.emplace_back(k.first, m);
    for (const auto& [node, m] : low) {
      auto& left = (*counts)[static_cast<std::size_t>(node - 1)];
      if (m < 0 || m > left) return std::nullopt;
      left -= m;
      rest *= simple_lroot(rs, node, s0).power(-m);
      cert.push_back({node, s0, m});
    }
  }
  return cert;
}

bool strings_in_general_position(std::int64_t d, std::pair<std::int64_t, std::int64_t> a,
                                 std::pair<std::int64_t, std::int64_t> b) {
  const std::int64_t diff = a.first > b.first ? a.first - b.first : b.first - a.first;
  for (std::int64_t p = 0; p < std::min(a.second, b.second); ++p)
    if (diff == d * (a.second + b.second - 2 * p)) return false;
  return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> string_factorize_d(std::int64_t d,
                                                                       std::vector<std::int64_t> exponents) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  std::multiset<std::int64_t> pool(exponents.begin(), exponents.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  while (!pool.empty()) {
    const std::int64_t start = *pool.begin();
    std::int64_t r = 0;
    for (std::int64_t x = start;; x += 2 * d) {
      auto it = pool.find(x);
      if (it == pool.end()) break;
      pool.erase(it);
      ++r;
    }
    out.emplace_back(start + d * (r - 1), r);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (!strings_in_general_position(d, out[a], out[b]))
        throw Error(ErrorCode::NoFactorization, "strings are not in general position");
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> string_factorize(const RootSystem& rs, int node,
                                                                     std::vector<std::int64_t> exponents) {
  check_node(rs, node);
  return string_factorize_d(rs.d(node), std::move(exponents));
}

LWeight star(const RootSystem& rs, const LWeight& lambda) {
  const std::int64_t shift = rs.lacing() * rs.dual_coxeter();
  LWeight out;
  for (const auto& [k, m] : lambda.factors()) out.add(rs.star_node(k.first), checked::add(k.second, shift), m);
  return out;
}

LWeight costar(const RootSystem& rs, const LWeight& lambda) {
  const LWeight starred = star(rs, lambda);
  LWeight out;
  for (const auto& [k, m] : starred.factors()) out.add(k.first, checked::sub(0, k.second), m);
  return out;
}

std::vector<std::int64_t> fm_lowering_exponents(const RootSystem& rs, const LWeight& mu, int node) {
  check_node(rs, node);
  std::vector<std::int64_t> out;
  for (const auto& [s, r] : string_factorize(rs, node, mu.exponents(node)))
    out.push_back(s + rs.d(node) * (r - 1));
  return out;
}

std::vector<LWeight> sl2_lcharacter(std::int64_t s, std::int64_t r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "q-string length must be nonnegative");
  const RootSystem a1(LieType{Series::A, 1});
  std::vector<LWeight> out{q_string(a1, 1, s, r)};
  for (std::int64_t j = 1; j <= r; ++j) out.push_back(out.back() * simple_lroot(a1, 1, s + r - 2 * j + 1).inverse());
  return out;
}

}  // namespace minaff
