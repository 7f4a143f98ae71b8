#include "minaff/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <regex>
#include <set>

#include "minaff/affinization.hpp"
#include "minaff/char_ring.hpp"
#include "minaff/error.hpp"
#include "minaff/graded.hpp"
#include "minaff/lweight.hpp"
#include "minaff/root_data.hpp"

namespace minaff {

void VerifyReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

nlohmann::json VerifyReport::to_json() const {
  auto sorted = failures;
  std::sort(sorted.begin(), sorted.end());
  return {{"checks", checks}, {"failures", sorted}};
}

namespace {

using Rng = std::mt19937_64;

int min_rank(Series s) { return s == Series::D ? 4 : (s == Series::A ? 1 : 2); }

Weight random_dominant(Rng& rng, int rank, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(0, bound);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[static_cast<std::size_t>(i)] = dist(rng);
  return w;
}

void for_each_weight(int rank, std::int64_t bound, const std::function<void(const Weight&)>& fn) {
  Weight w(static_cast<std::size_t>(rank));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rank) {
      fn(w);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      w[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
}

std::size_t root_count(LieType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
  }
  return 0;
}

std::string tag(const RootSystem& rs, const Weight& w) { return rs.to_string() + " " + w.to_string(); }

void root_suite(VerifyReport& rep, const VerifyOptions& opt, Rng& rng) {
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    for (int n = min_rank(s); n <= opt.max_rank; ++n) {
      const RootSystem rs(LieType{s, n});
      rep.expect(rs.positive_roots().size() == root_count(rs.type()), rs.to_string() + ": positive root count");
      const Weight rho = rs.rho();
      for (const auto& a : rs.positive_roots())
        rep.expect(dominance_leq(rs, rho - rs.root_weight_coords(a), rho), rs.to_string() + ": rho - alpha <= rho");
      for (int t = 0; t < 5; ++t) {
        const Weight w = random_dominant(rng, n, 3);
        const Weight ws = star_weight(rs, w);
        rep.expect(star_weight(rs, ws) == w && ws.is_dominant(), tag(rs, w) + ": star is a dominant involution");
      }
      if (s == Series::B || s == Series::D) {
        const int theta_max = s == Series::B ? n - 1 : n - 3;
        for (int i = 1; i <= theta_max; ++i)
          for (int j = i; j <= theta_max; ++j)
            rep.expect(rs.is_positive_root(special_root(rs, SpecialRootSpec::theta(i, j))),
                       rs.to_string() + ": theta is a root");
        if (s == Series::D) {
          for (int i = 1; i <= n - 2; ++i)
            rep.expect(rs.is_positive_root(special_root(rs, SpecialRootSpec::vartheta(i))),
                       rs.to_string() + ": vartheta is a root");
          for (int j = 1; j <= (n - 2) / 2; ++j)
            rep.expect(rs.is_positive_root(special_root(rs, SpecialRootSpec::spin_chain(j))),
                       rs.to_string() + ": spin chain root");
        }
        if ((s == Series::B && n >= 3) || (s == Series::D && n >= 5)) {
          const std::int64_t inv = s == Series::B && n == 3 ? 2 : 1;
          const Weight w1 = rs.fundamental_weight(1), w2 = rs.fundamental_weight(2), w3 = rs.fundamental_weight(3);
          rep.expect(special_weight(rs, SpecialRootSpec::theta(1, 1)) == w2, rs.to_string() + ": theta_11");
          rep.expect(special_weight(rs, SpecialRootSpec::theta(1, 2)) == w1 - w2 + w3.scaled(inv),
                     rs.to_string() + ": theta_12");
          rep.expect(special_weight(rs, SpecialRootSpec::theta(2, 2)) == w3.scaled(inv) - w1,
                     rs.to_string() + ": theta_22");
        }
      }
    }
  }
}

void char_suite(VerifyReport& rep, const VerifyOptions& opt, Rng& rng) {
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    for (int n = std::max(2, min_rank(s)); n <= opt.max_rank; ++n) {
      const RootSystem rs(LieType{s, n});
      for (int t = 0; t < 5; ++t) {
        const Weight lam = random_dominant(rng, n, 2);
        rep.expect(weyl_dimension(rs, lam) == orbit_sum_dimension(rs, lam), tag(rs, lam) + ": Weyl dimension");
      }
      if (n > 3) continue;
      for (int t = 0; t < 3; ++t) {
        const Weight lam = random_dominant(rng, n, 1), mu = random_dominant(rng, n, 1);
        const Character prod = multiply(irreducible_character(rs, lam), irreducible_character(rs, mu));
        Character back;
        for (const auto& [nu, m] : decompose(rs, prod)) back += irreducible_character(rs, nu).scaled(m);
        rep.expect(back == prod, tag(rs, lam) + " x " + mu.to_string() + ": tensor round trip");
        rep.expect(prod.total() == weyl_dimension(rs, lam) * weyl_dimension(rs, mu),
                   tag(rs, lam) + ": tensor dimension");
      }
    }
  }
}

// All partitions of a multiset into q-strings in general position.
void brute_factorizations(std::int64_t d, std::vector<std::int64_t> pool,
                          std::vector<std::pair<std::int64_t, std::int64_t>>& cur,
                          std::set<std::vector<std::pair<std::int64_t, std::int64_t>>>& found) {
  if (pool.empty()) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b)
        if (!strings_in_general_position(d, sorted[a], sorted[b])) return;
    found.insert(sorted);
    return;
  }
  std::sort(pool.begin(), pool.end());
  const std::int64_t lo = pool.front();
  for (std::int64_t r = 1;; ++r) {
    auto rest = pool;
    bool ok = true;
    for (std::int64_t j = 0; j < r && ok; ++j) {
      auto it = std::find(rest.begin(), rest.end(), lo + 2 * d * j);
      if (it == rest.end()) ok = false;
      else rest.erase(it);
    }
    if (!ok) break;
    cur.emplace_back(lo + d * (r - 1), r);
    brute_factorizations(d, rest, cur, found);
    cur.pop_back();
  }
}

void lweight_suite(VerifyReport& rep, const VerifyOptions& opt, Rng& rng) {
  const RootSystem a1(LieType{Series::A, 1});
  for (std::int64_t r = 0; r <= 6; ++r) {
    const auto terms = sl2_lcharacter(0, r);
    rep.expect(terms.size() == static_cast<std::size_t>(r + 1), "sl2 term count r=" + std::to_string(r));
    rep.expect(terms.back() == star(a1, terms.front()).inverse(), "sl2 lowest term r=" + std::to_string(r));
    for (const auto& t : terms)
      rep.expect(l_dominance_leq(a1, t, terms.front()).has_value(), "sl2 term below top r=" + std::to_string(r));
  }
  for (std::int64_t d : {1, 2}) {
    for (int size = 1; size <= 4; ++size) {
      for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<std::int64_t> dist(-3, 3);
        std::vector<std::int64_t> ex(static_cast<std::size_t>(size));
        for (auto& x : ex) x = dist(rng);
        std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> found;
        std::vector<std::pair<std::int64_t, std::int64_t>> cur;
        brute_factorizations(d, ex, cur, found);
        rep.expect(found.size() == 1 && *found.begin() == string_factorize_d(d, ex), "string factorization oracle");
      }
    }
  }
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    for (int n = std::max(2, min_rank(s)); n <= opt.max_rank; ++n) {
      const RootSystem rs(LieType{s, n});
      const std::int64_t shift = 2 * rs.lacing() * rs.dual_coxeter();
      const LWeight m = omega_lambda(rs, random_dominant(rng, n, 2), 0) * q_string(rs, 1, 3, 2);
      LWeight shifted;
      for (const auto& [k, mult] : m.factors()) shifted.add(k.first, k.second + shift, mult);
      rep.expect(star(rs, star(rs, m)) == shifted, rs.to_string() + ": star twice shifts exponents");
      rep.expect(wt(rs, star(rs, m)) == star_weight(rs, wt(rs, m)), rs.to_string() + ": wt commutes with star");
      for (int i = 1; i <= n; ++i) {
        rep.expect(wt(rs, simple_lroot(rs, i, 0)) == rs.root_weight_coords(rs.simple_root(i)),
                   rs.to_string() + ": wt of simple l-root");
        const LWeight lower = m * simple_lroot(rs, i, 1).inverse() * simple_lroot(rs, n, 4).inverse();
        const auto cert = l_dominance_leq(rs, lower, m);
        rep.expect(cert && certificate_product(rs, *cert) == m * lower.inverse(), rs.to_string() + ": certificate");
      }
    }
  }
}

void minaff_suite(VerifyReport& rep, const VerifyOptions& opt, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> anchors(-5, 5);
  for (Series s : {Series::A, Series::B, Series::C}) {
    for (int n = 2; n <= std::max(2, opt.max_rank); ++n) {
      const RootSystem rs(LieType{s, n});
      for (int t = 0; t < 6; ++t) {
        const MinAffSpec spec{random_dominant(rng, n, 2), anchors(rng), t % 2 == 0 ? 1 : -1};
        const LWeight m = construct_minaff(rs, spec);
        const auto hit = is_minaff(rs, m);
        rep.expect(hit && construct_minaff(rs, {spec.lambda, hit->anchor, hit->eps}) == m,
                   tag(rs, spec.lambda) + ": minimal affinization round trip");
        for (int i = 1; i + 1 <= n; ++i) {
          if (s != Series::A && i + 1 == n) continue;
          const auto sub = subdiagram(rs, {i, i + 1});
          rep.expect(is_minaff(sub.system, restrict(rs, m, {i, i + 1})).has_value(),
                     tag(rs, spec.lambda) + ": admissible restriction");
        }
      }
    }
  }
  const RootSystem d4(LieType{Series::D, 4});
  for (int leg : {1, 3, 4}) {
    for (int eps : {1, -1}) {
      const Weight lam{1, 1 + leg % 2, 2, 1};
      const LWeight m = construct_minaff_D4(d4, {lam, 0, eps}, leg);
      const auto hit = is_minaff(d4, m);
      rep.expect(hit && hit->leg == leg && hit->eps == eps && hit->anchor == 0, "D4 three-leg round trip");
    }
  }
}

std::pair<LieType, std::int64_t> parse_grid(const std::string& grid) {
  static const std::regex re(R"(^\s*([ABCDabcd]\d+)\s*:\s*m\s*<=\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(grid, m, re))
    throw Error(ErrorCode::InvalidArgument, "grid must look like B3:m<=3, got '" + grid + "'");
  return {LieType::parse(m[1].str()), std::stoll(m[2].str())};
}

void graded_grid(VerifyReport& rep, const RootSystem& rs, std::int64_t bound) {
  const int n = rs.rank();
  for_each_weight(n, bound, [&](const Weight& lam) {
    try {
      graded_case(rs, lam);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedSupport) return;
      throw;
    }
    const GradedCharacter g = graded_character(rs, lam);
    rep.expect(g.piece(0) == GradedCharacter::Piece{{lam, 1}}, tag(rs, lam) + ": grade 0 is the top");
    bool dominant = true;
    for (const auto& [grade, piece] : g.pieces())
      for (const auto& [mu, mult] : piece) dominant = dominant && mu.is_dominant() && mult > 0;
    rep.expect(dominant, tag(rs, lam) + ": constituents dominant");

    if (graded_case(rs, lam) == "three-node") {
      const auto idx = index_set_A3(rs, lam);
      std::set<Weight> images;
      for (const auto& r : idx) images.insert(wt_A3(rs, r));
      rep.expect(images.size() == idx.size(), tag(rs, lam) + ": wt injective");
    }

    // Containment in the product of KR characters.
    Character prod = Character::monomial(rs.zero_weight());
    bool have_all = true;
    for (int i = 1; i <= n && have_all; ++i) {
      if (lam.at_node(i) == 0) continue;
      try {
        const auto kr = kr_graded_character(rs, i, lam.at_node(i));
        Character total;
        for (const auto& [mu, m] : kr.ungraded()) total += irreducible_character(rs, mu).scaled(m);
        prod = multiply(prod, total);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedSupport) throw;
        have_all = false;
      }
    }
    if (have_all)
      rep.expect(character_leq(dominant_total(rs, g), prod.dominant_part()), tag(rs, lam) + ": KR containment");

    const auto s = supp(lam);
    if (s.size() == 1) {
      try {
        rep.expect(kr_graded_character(rs, s[0], lam.at_node(s[0])) == g, tag(rs, lam) + ": KR specialization");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnsupportedSupport) throw;
      }
    }

    if (rs.type().series == Series::D && n == 4) {
      const Character base = dominant_total(rs, g);
      for (int leg : {1, 3, 4}) {
        const auto mk = graded_character_Mk(rs, lam, leg);
        rep.expect(mk.piece(0) == GradedCharacter::Piece{{lam, 1}}, tag(rs, lam) + ": M_k grade 0");
        rep.expect(character_leq(base, dominant_total(rs, mk)), tag(rs, lam) + ": M(lambda) below M_k(lambda)");
        const auto idx = index_set_D3(rs, lam, leg);
        std::set<Weight> images;
        for (const auto& r : idx) images.insert(wt_D3(rs, r, leg));
        rep.expect(images.size() == idx.size(), tag(rs, lam) + ": D4 wt injective");
      }
    }
  });
}

void graded_suite(VerifyReport& rep, const VerifyOptions& opt) {
  if (!opt.grid.empty()) {
    const auto [type, bound] = parse_grid(opt.grid);
    graded_grid(rep, RootSystem(type), bound);
    return;
  }
  graded_grid(rep, RootSystem(LieType{Series::B, 3}), 2);
  graded_grid(rep, RootSystem(LieType{Series::D, 4}), 1);
  graded_grid(rep, RootSystem(LieType{Series::D, 5}), 1);
  const RootSystem d4(LieType{Series::D, 4});
  auto pair = spin_pair_character(d4, 1, 1).ungraded();
  auto tensor = decompose(d4, multiply(irreducible_character(d4, {0, 0, 1, 0}), irreducible_character(d4, {0, 0, 0, 1})));
  std::sort(pair.begin(), pair.end());
  std::sort(tensor.begin(), tensor.end());
  rep.expect(pair == tensor, "D4 spin pair");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  static const std::set<std::string> suites{"root", "char", "lweight", "minaff", "graded", "all"};
  if (!suites.count(options.suite))
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + options.suite + "'");
  if (options.max_rank < 1 || options.max_rank > 8)
    throw Error(ErrorCode::InvalidArgument, "max-rank must be between 1 and 8");
  VerifyReport rep;
  Rng rng(options.seed);
  const bool all = options.suite == "all";
  if (all || options.suite == "root") root_suite(rep, options, rng);
  if (all || options.suite == "char") char_suite(rep, options, rng);
  if (all || options.suite == "lweight") lweight_suite(rep, options, rng);
  if (all || options.suite == "minaff") minaff_suite(rep, options, rng);
  if (all || options.suite == "graded") graded_suite(rep, options);
  return rep;
}

}  // namespace minaff
