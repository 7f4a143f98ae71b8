#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "minaff/lweight.hpp"
#include "minaff/root_data.hpp"

namespace minaff {

struct MinAffSpec {
  Weight lambda;
  std::int64_t anchor = 0;
  int eps = 1;
};

/// Result of recognizing a minimal affinization. For D4 with a weight
/// supported on all three legs, `leg` names the distinguished leg p: the two
/// type-A subdiagrams through p are the ones whose restrictions are minimal.
struct MinAffMatch {
  int eps = 1;
  std::int64_t anchor = 0;
  std::optional<int> leg;

  friend bool operator==(const MinAffMatch&, const MinAffMatch&) = default;
};

/// r_i^v = d_i - 1 - c_{i,i+1}.
std::int64_t r_i_vee(const RootSystem& rs, int i);

/// Path order of the nodes used by construct_minaff: 1..n for A, B, C; for D
/// the Bourbaki path of the type-A hull of supp(lambda).
std::vector<int> minaff_path(const RootSystem& rs, const Weight& lambda);

LWeight construct_minaff(const RootSystem& rs, const MinAffSpec& spec);

/// D4 minimal affinization with distinguished leg p in {1,3,4}: s_p = anchor,
/// s_2 = s_p + eps(l_p + l_2 + 1), s_q = s_2 + eps(l_2 + l_q + 1).
LWeight construct_minaff_D4(const RootSystem& rs, const MinAffSpec& spec, int leg);

/// Leg node not contained in J_k, with J_1 = {1,2,3}, J_2 = {1,2,4}, J_3 = {2,3,4}.
int d4_leg_for_j_index(int k);

std::optional<MinAffMatch> is_minaff(const RootSystem& rs, const LWeight& m);

LWeight evaluation_lweight_A(const RootSystem& rs, const Weight& lambda, std::int64_t s);

/// True iff s_j <= s_k whenever j comes after k.
bool cyclic_order_ok(const std::vector<QString>& factors);

/// Connected subdiagram with its own Bourbaki labelling; nodes[k-1] is the
/// parent label of subdiagram node k. The parent's d values are kept.
struct Subdiagram {
  RootSystem system;
  std::vector<int> nodes;
};

Subdiagram subdiagram(const RootSystem& rs, const std::vector<int>& J);
LWeight restrict(const RootSystem& rs, const LWeight& m, const std::vector<int>& J);

}  // namespace minaff
