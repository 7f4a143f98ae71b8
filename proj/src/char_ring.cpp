#include "minaff/char_ring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

Character Character::monomial(const Weight& w, const BigInt& coeff) {
  Character c;
  c.add(w, coeff);
  return c;
}

BigInt Character::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Character::add(const Weight& w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

Character Character::scaled(const BigInt& factor) const {
  Character out;
  if (factor == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * factor);
  return out;
}

BigInt Character::total() const {
  BigInt s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

Character Character::dominant_part() const {
  Character out;
  for (const auto& [w, c] : terms_)
    if (w.is_dominant()) out.terms_.emplace(w, c);
  return out;
}

namespace {

void require_dominant(const Weight& lambda) {
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
}

void require_rank(const RootSystem& rs, const Weight& w) {
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::InvalidArgument,
                "weight " + w.to_string() + " has wrong length for " + rs.to_string());
}

}  // namespace

std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_dominant(lambda);
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto& roots = rs.positive_roots();

  std::vector<Weight> root_w;
  std::vector<std::int64_t> root_norm;
  for (const auto& a : roots) {
    root_w.push_back(rs.root_weight_coords(a));
    root_norm.push_back(rs.pairing(root_w.back(), a));
  }

  // Dominant weights below lambda form a saturated set: reachable by
  // subtracting positive roots without leaving the dominant chamber.
  std::vector<Weight> dom{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t k = 0; k < dom.size(); ++k) {
    for (const auto& aw : root_w) {
      Weight nu = dom[k] - aw;
      if (nu.is_dominant() && seen.insert(nu).second) dom.push_back(std::move(nu));
    }
  }

  struct Entry {
    Weight mu;
    std::vector<std::int64_t> depth;
    std::int64_t height;
  };
  std::vector<Entry> entries;
  entries.reserve(dom.size());
  for (auto& mu : dom) {
    auto b = rs.integral_root_coords(lambda - mu);
    if (!b) throw std::logic_error("dominant weight outside the root lattice coset");
    std::int64_t h = 0;
    for (auto x : *b) h += x;
    entries.push_back({std::move(mu), std::move(*b), h});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.mu > b.mu;
  });

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  std::unordered_map<Weight, Weight, WeightHash> dom_cache;
  auto dominant_of = [&](const Weight& w) -> const Weight& {
    auto it = dom_cache.find(w);
    if (it != dom_cache.end()) return it->second;
    return dom_cache.emplace(w, rs.dominant_representative(w)).first->second;
  };

  const Weight two_rho = rs.rho().scaled(2);
  mult[lambda] = 1;
  for (std::size_t e = 1; e < entries.size(); ++e) {
    const Weight& mu = entries[e].mu;
    __int128 lhs = 0;
    const Weight shifted = lambda + mu + two_rho;
    for (std::size_t j = 0; j < n; ++j)
      lhs += static_cast<__int128>(entries[e].depth[j]) * rs.d_vector()[j] * shifted[j];
    __int128 rhs = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const std::int64_t mu_alpha = rs.pairing(mu, roots[r]);
      Weight cur = mu;
      for (std::int64_t k = 1;; ++k) {
        cur += root_w[r];
        auto it = mult.find(dominant_of(cur));
        if (it == mult.end()) break;
        rhs += static_cast<__int128>(it->second) * (mu_alpha + k * root_norm[r]);
      }
    }
    rhs *= 2;
    if (lhs <= 0 || rhs % lhs != 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    const __int128 m = rhs / lhs;
    if (m > INT64_MAX) throw Error(ErrorCode::Overflow, "weight multiplicity exceeds 64 bits");
    mult[mu] = static_cast<std::int64_t>(m);
  }

  std::map<Weight, std::int64_t> out;
  for (auto& [w, m] : mult) out.emplace(w, m);
  return out;
}

Character irreducible_dominant_character(const RootSystem& rs, const Weight& lambda) {
  Character c;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) c.add(mu, m);
  return c;
}

Character irreducible_character(const RootSystem& rs, const Weight& lambda) {
  Character c;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
    for (const auto& w : rs.orbit(mu)) c.add(w, m);
  return c;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  require_dominant(lambda);
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.pairing(shifted, a);
    den *= rs.pairing(rs.rho(), a);
  }
  return num / den;
}

BigInt orbit_sum_dimension(const RootSystem& rs, const Weight& lambda) {
  BigInt s = 0;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) s += BigInt(m) * rs.orbit_size(mu);
  return s;
}

Character multiply(const Character& a, const Character& b) {
  std::unordered_map<Weight, BigInt, WeightHash> acc;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) acc[wa + wb] += ca * cb;
  Character out;
  for (auto& [w, c] : acc) out.add(w, c);
  return out;
}

bool character_leq(const Character& a, const Character& b) {
  for (const auto& [w, c] : a.terms())
    if (c > b.coefficient(w)) return false;
  for (const auto& [w, c] : b.terms())
    if (c < 0 && a.coefficient(w) > c) return false;
  return true;
}

bool is_weyl_invariant(const RootSystem& rs, const Character& c) {
  for (const auto& [w, m] : c.terms()) {
    require_rank(rs, w);
    for (int i = 1; i <= rs.rank(); ++i)
      if (c.coefficient(rs.reflect(w, i)) != m) return false;
  }
  return true;
}

std::vector<std::pair<Weight, BigInt>> decompose(const RootSystem& rs, const Character& c) {
  if (!is_weyl_invariant(rs, c))
    throw Error(ErrorCode::NotDecomposable, "character is not Weyl-invariant");
  // A W-invariant element is determined by its dominant part, so peel there.
  Character rest = c.dominant_part();
  std::vector<std::pair<Weight, BigInt>> out;
  while (!rest.empty()) {
    auto lead = rest.terms().begin();
    std::int64_t best = rs.scaled_height(lead->first);
    for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it) {
      const std::int64_t h = rs.scaled_height(it->first);
      if (h > best || (h == best && it->first > lead->first)) {
        best = h;
        lead = it;
      }
    }
    const Weight mu = lead->first;
    const BigInt coeff = lead->second;
    if (coeff < 0)
      throw Error(ErrorCode::NotDecomposable, "negative leading coefficient at " + mu.to_string());
    rest -= irreducible_dominant_character(rs, mu).scaled(coeff);
    out.emplace_back(mu, coeff);
  }
  return out;
}

Character dominant_character_of(const RootSystem& rs, const std::vector<std::pair<Weight, BigInt>>& parts) {
  Character out;
  for (const auto& [mu, m] : parts) out += irreducible_dominant_character(rs, mu).scaled(m);
  return out;
}

}  // namespace minaff
