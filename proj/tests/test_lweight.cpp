#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "minaff/error.hpp"
#include "minaff/lweight.hpp"

using namespace minaff;

namespace {

RootSystem make(Series s, int n) { return RootSystem(LieType{s, n}); }

LWeight lw(std::initializer_list<std::tuple<int, std::int64_t, std::int64_t>> triples) {
  LWeight m;
  for (const auto& [i, s, k] : triples) m.add(i, s, k);
  return m;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

using Strings = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Every way to split a multiset into strings of step 2d whose pieces are
// pairwise non-resonant.
void all_factorizations(std::int64_t d, std::multiset<std::int64_t> pool, Strings& cur, std::set<Strings>& out) {
  if (pool.empty()) {
    Strings s = cur;
    std::sort(s.begin(), s.end());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        for (std::int64_t p = 0; p < std::min(s[a].second, s[b].second); ++p)
          if (std::abs(s[a].first - s[b].first) == d * (s[a].second + s[b].second - 2 * p)) return;
    out.insert(s);
    return;
  }
  const std::int64_t lo = *pool.begin();
  for (std::int64_t r = 1;; ++r) {
    auto it = pool.find(lo + 2 * d * (r - 1));
    if (it == pool.end()) return;
    pool.erase(it);
    cur.emplace_back(lo + d * (r - 1), r);
    all_factorizations(d, pool, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("group structure") {
  CHECK(LWeight::fundamental(1, 0) * LWeight::fundamental(1, 0) == lw({{1, 0, 2}}));
  const auto m = lw({{1, 0, 1}, {2, 3, -1}});
  CHECK_FALSE(m.is_dominant());
  CHECK_FALSE(is_dominant(m));
  CHECK((m * m.inverse()).is_identity());
  CHECK(invert(m) == m.inverse());
  CHECK(m.power(3) == lw({{1, 0, 3}, {2, 3, -3}}));
  CHECK(multiply(m, LWeight()) == m);
  CHECK(m.exponent_range() == std::make_pair(std::int64_t{0}, std::int64_t{3}));
  CHECK_FALSE(LWeight().exponent_range().has_value());
  CHECK(lw({{1, 2, 2}, {1, -1, 1}}).exponents(1) == std::vector<std::int64_t>{-1, 2, 2});
  CHECK(code_of([&] { m.exponents(2); }) == ErrorCode::NotIDominant);
}

TEST_CASE("q-strings") {
  const auto a3 = make(Series::A, 3);
  CHECK(q_string(a3, 2, 0, 0).is_identity());
  CHECK(q_string(a3, 2, 0, 2) == lw({{2, 1, 1}, {2, -1, 1}}));
  const auto b3 = make(Series::B, 3);
  CHECK(q_string(b3, 3, 0, 3) == lw({{3, 2, 1}, {3, 0, 1}, {3, -2, 1}}));
  CHECK(q_string(b3, 1, 0, 2) == lw({{1, 2, 1}, {1, -2, 1}}));
  CHECK(omega_lambda(make(Series::A, 2), Weight{1, 2}, 0) == lw({{1, 0, 1}, {2, 0, 2}}));
  CHECK(omega_lambda(a3, Weight{0, 0, 0}, 4).is_identity());
}

TEST_CASE("weights of l-weights") {
  const auto b3 = make(Series::B, 3);
  CHECK(wt(b3, LWeight()) == Weight{0, 0, 0});
  CHECK(wt(b3, q_string(b3, 2, 5, 4)) == Weight{0, 4, 0});
  for (int i = 1; i <= 3; ++i) {
    Weight col(3);
    for (int j = 1; j <= 3; ++j) col[static_cast<std::size_t>(j - 1)] = b3.cartan(j, i);
    CHECK(wt(b3, simple_lroot(b3, i, 7)) == col);
  }
}

TEST_CASE("simple l-roots") {
  CHECK(simple_lroot(make(Series::A, 1), 1, 0) == lw({{1, 2, 1}, {1, 0, 1}}));
  CHECK(simple_lroot(make(Series::A, 2), 1, 0) == lw({{1, 2, 1}, {1, 0, 1}, {2, 1, -1}}));
  // B2: node 1 has d = 2 and sees node 2 twice.
  CHECK(simple_lroot(make(Series::B, 2), 1, 0) == lw({{1, 0, 1}, {1, 4, 1}, {2, 1, -1}, {2, 3, -1}}));
  CHECK(simple_lroot(make(Series::B, 2), 2, 0) == lw({{2, 0, 1}, {2, 2, 1}, {1, 1, -1}}));
}

TEST_CASE("l-dominance") {
  const auto a1 = make(Series::A, 1);
  const auto lam = q_string(a1, 1, 0, 2);
  CHECK(l_dominance_leq(a1, lam, lam) == LRootCertificate{});
  const auto mu = lw({{1, -1, 1}, {1, 3, -1}});
  CHECK(l_dominance_leq(a1, mu, lam) == LRootCertificate{{1, 1, 1}});
  CHECK_FALSE(l_dominance_leq(a1, lw({{1, 5, 1}, {1, 3, 1}}), lam).has_value());

  const auto b3 = make(Series::B, 3);
  const auto top = omega_lambda(b3, Weight{1, 1, 1}, 0);
  const auto low = top * simple_lroot(b3, 3, 2).inverse() * simple_lroot(b3, 1, 1).power(-2) *
                   simple_lroot(b3, 2, -3).inverse();
  const auto cert = l_dominance_leq(b3, low, top);
  REQUIRE(cert.has_value());
  CHECK(certificate_product(b3, *cert) == top * low.inverse());
  CHECK_FALSE(l_dominance_leq(b3, top, low).has_value());
  CHECK(code_of([&] { l_dominance_leq(b3, low, top, 2); }) == ErrorCode::WindowTooSmall);
  CHECK(default_window(b3, low, top) >= 2 * 2 * 5);
}

TEST_CASE("string factorization examples") {
  CHECK(string_factorize_d(1, {1, -1}) == Strings{{0, 2}});
  CHECK(string_factorize_d(1, {3, -3}) == Strings{{-3, 1}, {3, 1}});
  CHECK(string_factorize_d(1, {2, 0, 0, -2}) == Strings{{0, 1}, {0, 3}});
  CHECK(string_factorize_d(1, {}).empty());
  CHECK(string_factorize(make(Series::B, 2), 1, {-2, 2}) == Strings{{0, 2}});
  CHECK(strings_in_general_position(1, {0, 1}, {0, 3}));
  CHECK_FALSE(strings_in_general_position(1, {0, 1}, {2, 1}));
}

TEST_CASE("string factorization against brute force") {
  for (std::int64_t d : {1, 2}) {
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
      if (!cur.empty()) {
        std::set<Strings> found;
        Strings tmp;
        all_factorizations(d, {cur.begin(), cur.end()}, tmp, found);
        REQUIRE(found.size() == 1);
        CHECK(string_factorize_d(d, cur) == *found.begin());
      }
      if (cur.size() == 6) return;
      for (std::int64_t e = from; e <= 3; ++e) {
        cur.push_back(e);
        rec(e);
        cur.pop_back();
      }
    };
    rec(-3);
  }
}

TEST_CASE("star and costar") {
  const auto a1 = make(Series::A, 1);
  const auto lam = lw({{1, 1, 1}, {1, -1, 1}});
  CHECK(star(a1, lam) == lw({{1, 3, 1}, {1, 1, 1}}));
  CHECK(costar(a1, lam) == lw({{1, -3, 1}, {1, -1, 1}}));

  const auto a3 = make(Series::A, 3);
  CHECK(star(a3, lw({{1, 0, 1}, {2, 1, -1}})) == lw({{3, 4, 1}, {2, 5, -1}}));
  const auto d5 = make(Series::D, 5);
  const auto m = lw({{4, 0, 2}, {1, 3, 1}});
  CHECK(star(d5, m) == lw({{5, 8, 2}, {1, 11, 1}}));
  CHECK(costar(d5, costar(d5, m)) == m);
}

TEST_CASE("lowering exponents") {
  const auto a1 = make(Series::A, 1);
  CHECK(fm_lowering_exponents(a1, q_string(a1, 1, 0, 2), 1) == std::vector<std::int64_t>{1});
  CHECK(fm_lowering_exponents(a1, lw({{1, 0, 1}, {1, 6, 1}}), 1) == std::vector<std::int64_t>{0, 6});
  CHECK(fm_lowering_exponents(a1, LWeight(), 1).empty());
  const auto b2 = make(Series::B, 2);
  CHECK(fm_lowering_exponents(b2, q_string(b2, 1, 0, 2), 1) == std::vector<std::int64_t>{2});
}

TEST_CASE("sl2 l-characters") {
  CHECK(sl2_lcharacter(0, 0) == std::vector<LWeight>{LWeight()});
  CHECK(sl2_lcharacter(0, 1) == std::vector<LWeight>{lw({{1, 0, 1}}), lw({{1, 2, -1}})});
  CHECK(sl2_lcharacter(0, 2) ==
        std::vector<LWeight>{lw({{1, 1, 1}, {1, -1, 1}}), lw({{1, -1, 1}, {1, 3, -1}}), lw({{1, 1, -1}, {1, 3, -1}})});
  const auto a1 = make(Series::A, 1);
  for (std::int64_t r = 0; r <= 6; ++r) {
    const auto terms = sl2_lcharacter(1, r);
    CHECK(terms.size() == static_cast<std::size_t>(r + 1));
    CHECK(terms.back() == star(a1, terms.front()).inverse());
    // Weights run over the sl2 character r, r-2, ..., -r.
    for (std::size_t k = 0; k < terms.size(); ++k) CHECK(wt(a1, terms[k]) == Weight{r - 2 * static_cast<std::int64_t>(k)});
  }
}
