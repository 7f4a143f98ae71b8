#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minaff/affinization.hpp"
#include "minaff/error.hpp"

using namespace minaff;

namespace minaff {
std::ostream& operator<<(std::ostream& os, const LWeight& m) { return os << m.to_string(); }
std::ostream& operator<<(std::ostream& os, const MinAffMatch& m) {
  return os << "{eps " << m.eps << ", anchor " << m.anchor << ", leg " << (m.leg ? *m.leg : 0) << "}";
}
std::ostream& operator<<(std::ostream& os, const std::optional<MinAffMatch>& m) {
  if (!m) return os << "none";
  return os << *m;
}
}  // namespace minaff

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

// Centre of the single string carried by a node.
std::int64_t centre(const LWeight& m, int node) {
  const auto e = m.exponents(node);
  REQUIRE(!e.empty());
  return (e.front() + e.back()) / 2;
}

}  // namespace

TEST_CASE("construction in small ranks") {
  const auto a2 = make(Series::A, 2);
  CHECK(construct_minaff(a2, {Weight{1, 1}, 0, 1}) == lw({{1, 0, 1}, {2, 3, 1}}));
  CHECK(construct_minaff(a2, {Weight{1, 1}, 0, -1}) == lw({{1, 0, 1}, {2, -3, 1}}));
  const auto b2 = make(Series::B, 2);
  CHECK(r_i_vee(b2, 1) == 2);
  CHECK(construct_minaff(b2, {Weight{1, 1}, 0, 1}) == lw({{1, 0, 1}, {2, 5, 1}}));
  const auto c3 = make(Series::C, 3);
  // Steps d_u l_u + d_v l_v + d_u - 1 - c_uv: 1+1+1 then 1+2+2.
  CHECK(construct_minaff(c3, {Weight{1, 1, 1}, 2, 1}) == lw({{1, 2, 1}, {2, 5, 1}, {3, 10, 1}}));
  CHECK(construct_minaff(a2, {Weight{0, 0}, 4, 1}).is_identity());
}

TEST_CASE("Kirillov-Reshetikhin case is a single q-string") {
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    const auto rs = make(s, 4);
    for (int i = 1; i <= 4; ++i)
      for (std::int64_t m = 1; m <= 3; ++m) {
        const auto w = Weight::fundamental(4, i).scaled(m);
        for (int eps : {1, -1}) {
          const auto x = construct_minaff(rs, {w, 1, eps});
          const auto strings = string_factorize(rs, i, x.exponents(i));
          REQUIRE(strings.size() == 1);
          CHECK(x == q_string(rs, i, strings[0].first, m));
        }
        const auto hit = is_minaff(rs, q_string(rs, i, 1, m));
        REQUIRE(hit.has_value());
        CHECK(hit->eps == 1);
        CHECK(construct_minaff(rs, {w, hit->anchor, 1}) == q_string(rs, i, 1, m));
      }
  }
  // The anchor always refers to node 1, here one step of 0 + 1 + r_1 = 3 below.
  CHECK(is_minaff(make(Series::B, 2), lw({{2, 0, 1}})) == MinAffMatch{1, -3, std::nullopt});
}

TEST_CASE("type D path order") {
  const auto d5 = make(Series::D, 5);
  CHECK(minaff_path(d5, Weight{1, 0, 1, 0, 0}) == std::vector<int>{1, 2, 3});
  CHECK(minaff_path(d5, Weight{0, 0, 1, 1, 1}) == std::vector<int>{4, 3, 5});
  const auto m = construct_minaff(d5, {Weight{0, 0, 1, 1, 1}, 0, 1});
  CHECK(centre(m, 4) == 0);
  CHECK(centre(m, 3) == 3);
  CHECK(centre(m, 5) == 6);
  CHECK(code_of([&] { construct_minaff(d5, {Weight{0, 1, 0, 1, 1}, 0, 1}); }) == ErrorCode::UnsupportedSupport);
  CHECK(code_of([&] { construct_minaff(make(Series::D, 4), {Weight{1, 1, 1, 1}, 0, 1}); }) ==
        ErrorCode::UnsupportedSupport);
}

TEST_CASE("D4 with three legs") {
  const auto d4 = make(Series::D, 4);
  CHECK(d4_leg_for_j_index(1) == 4);
  CHECK(d4_leg_for_j_index(2) == 3);
  CHECK(d4_leg_for_j_index(3) == 1);
  const auto m = construct_minaff_D4(d4, {Weight{1, 1, 1, 1}, 0, 1}, d4_leg_for_j_index(3));
  CHECK(m == lw({{1, 0, 1}, {2, 3, 1}, {3, 6, 1}, {4, 6, 1}}));
  CHECK(is_minaff(d4, m) == MinAffMatch{1, 0, 1});

  for (int leg : {1, 3, 4})
    for (int eps : {1, -1}) {
      const Weight lam{2, 1, 1, 3};
      const auto x = construct_minaff_D4(d4, {lam, -2, eps}, leg);
      CHECK(is_minaff(d4, x) == MinAffMatch{eps, -2, leg});
      // Exactly the two type-A3 subdiagrams through the leg restrict to minimal ones.
      for (const std::vector<int>& J : {std::vector<int>{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}) {
        const bool through_leg = std::find(J.begin(), J.end(), leg) != J.end();
        const auto sub = subdiagram(d4, J);
        CHECK(is_minaff(sub.system, restrict(d4, x, J)).has_value() == through_leg);
      }
    }
  CHECK(code_of([&] { is_minaff(d4, lw({{1, 0, 1}, {3, 6, 1}, {4, 6, 1}})); }) == ErrorCode::UnsupportedSupport);
}

TEST_CASE("recognition") {
  const auto a2 = make(Series::A, 2);
  CHECK_FALSE(is_minaff(a2, lw({{1, 0, 1}, {2, 2, 1}})).has_value());
  CHECK(is_minaff(a2, lw({{1, 0, 1}, {2, -3, 1}})) == MinAffMatch{-1, 0, std::nullopt});
  CHECK(is_minaff(a2, LWeight()) == MinAffMatch{1, 0, std::nullopt});
  CHECK(code_of([&] { is_minaff(a2, lw({{1, 0, -1}})); }) == ErrorCode::NotDominant);
  // Two strings on one node.
  CHECK_FALSE(is_minaff(a2, lw({{1, 0, 1}, {1, 6, 1}})).has_value());

  const auto b4 = make(Series::B, 4);
  for (int eps : {1, -1})
    for (std::int64_t a : {-3, 0, 5}) {
      const Weight lam{2, 0, 1, 3};
      CHECK(is_minaff(b4, construct_minaff(b4, {lam, a, eps})) == MinAffMatch{eps, a, std::nullopt});
    }
}

TEST_CASE("evaluation l-weights in type A") {
  const auto a3 = make(Series::A, 3);
  for (const Weight& lam : {Weight{1, 1, 1}, Weight{2, 0, 3}, Weight{0, 4, 0}, Weight{3, 0, 0}}) {
    CHECK(evaluation_lweight_A(a3, lam, 2) == construct_minaff(a3, {lam, 2, 1}));
  }
  CHECK(evaluation_lweight_A(a3, Weight{3, 0, 0}, 0) == q_string(a3, 1, 0, 3));
  CHECK(code_of([] { evaluation_lweight_A(make(Series::B, 3), Weight{1, 0, 0}, 0); }) == ErrorCode::UnsupportedType);

  // costar of an evaluation l-weight: consecutive centres rise by
  // lambda*(h_i) + lambda*(h_{i-1}) + 1.
  const Weight lam{2, 1, 3};
  const auto c = costar(a3, evaluation_lweight_A(a3, lam, 0));
  const Weight ls = star_weight(a3, lam);
  for (int i = 2; i <= 3; ++i) CHECK(centre(c, i) - centre(c, i - 1) == ls.at_node(i) + ls.at_node(i - 1) + 1);
}

TEST_CASE("cyclic order") {
  CHECK(cyclic_order_ok({{1, 3, 1}}));
  CHECK(cyclic_order_ok({{1, 3, 1}, {2, 0, 1}}));
  CHECK_FALSE(cyclic_order_ok({{2, 0, 1}, {1, 3, 1}}));
  CHECK(cyclic_order_ok({{1, 2, 1}, {2, 2, 1}}));
}

TEST_CASE("subdiagrams and restriction") {
  const auto b4 = make(Series::B, 4);
  const auto s34 = subdiagram(b4, {3, 4});
  CHECK(s34.system.type() == LieType{Series::B, 2});
  CHECK(s34.system.d_vector() == std::vector<std::int64_t>{2, 1});
  CHECK(s34.nodes == std::vector<int>{3, 4});
  CHECK(subdiagram(b4, {1, 2}).system.d_vector() == std::vector<std::int64_t>{2, 2});
  CHECK(subdiagram(make(Series::C, 4), {3, 4}).system.type() == LieType{Series::C, 2});

  const auto d5 = make(Series::D, 5);
  const auto fork = subdiagram(d5, {3, 4, 5});
  CHECK(fork.system.type() == LieType{Series::A, 3});
  CHECK(fork.nodes == std::vector<int>{4, 3, 5});
  CHECK(subdiagram(d5, {2, 3, 4, 5}).system.type() == LieType{Series::D, 4});
  CHECK(code_of([&] { subdiagram(d5, {1, 3}); }) == ErrorCode::DisconnectedSubdiagram);

  const auto m = construct_minaff(b4, {Weight{1, 2, 0, 1}, 0, 1});
  CHECK(restrict(b4, m, {1, 2, 3, 4}) == m);
  CHECK(restrict(b4, m, {3}).is_identity());
  const auto r = restrict(b4, m, {2, 3, 4});
  CHECK(r.exponents(1) == m.exponents(2));
  CHECK(is_minaff(subdiagram(b4, {2, 3, 4}).system, r).has_value());
  CHECK(is_minaff(subdiagram(b4, {1, 2}).system, restrict(b4, m, {1, 2})).has_value());
}
