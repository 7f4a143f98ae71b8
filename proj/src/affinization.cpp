#include "minaff/affinization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

namespace {

void require_dominant_weight(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::InvalidArgument, "weight " + lambda.to_string() + " has wrong length for " + rs.to_string());
  if (!lambda.is_dominant()) throw Error(ErrorCode::NotDominant, "weight " + lambda.to_string() + " is not dominant");
}

void require_eps(int eps) {
  if (eps != 1 && eps != -1) throw Error(ErrorCode::InvalidArgument, "eps must be +1 or -1");
}

// Exponent step between consecutive path nodes u -> v.
std::int64_t step(const RootSystem& rs, const Weight& lambda, int u, int v) {
  const std::int64_t r = rs.d(u) - 1 - rs.cartan(u, v);
  return checked::add(checked::add(checked::mul(rs.d(u), lambda.at_node(u)), checked::mul(rs.d(v), lambda.at_node(v))),
                      r);
}

// Centres along a path, relative to the first node.
std::vector<std::int64_t> path_offsets(const RootSystem& rs, const Weight& lambda, const std::vector<int>& path,
                                       int eps) {
  std::vector<std::int64_t> off(path.size(), 0);
  for (std::size_t t = 1; t < path.size(); ++t)
    off[t] = checked::add(off[t - 1], eps * step(rs, lambda, path[t - 1], path[t]));
  return off;
}

bool full_d4_hull(const RootSystem& rs, const Weight& lambda) {
  return rs.type().series == Series::D && rs.rank() == 4 && lambda.at_node(1) != 0 && lambda.at_node(3) != 0 &&
         lambda.at_node(4) != 0;
}

std::optional<MinAffMatch> match_path(const RootSystem& rs, const Weight& lambda, const std::vector<int>& path,
                                      const std::map<int, std::int64_t>& centre) {
  for (int eps : {1, -1}) {
    const auto off = path_offsets(rs, lambda, path, eps);
    std::optional<std::int64_t> anchor;
    bool ok = true;
    for (std::size_t t = 0; t < path.size() && ok; ++t) {
      auto it = centre.find(path[t]);
      if (it == centre.end()) continue;
      if (!anchor) anchor = it->second - off[t];
      ok = it->second == *anchor + off[t];
    }
    if (ok) return MinAffMatch{eps, anchor.value_or(0), std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

std::int64_t r_i_vee(const RootSystem& rs, int i) {
  if (i < 1 || i >= rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "r_i^v needs 1 <= i < " + std::to_string(rs.rank()));
  return rs.d(i) - 1 - rs.cartan(i, i + 1);
}

std::vector<int> minaff_path(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank();
  std::vector<int> path;
  if (rs.type().series != Series::D) {
    for (int i = 1; i <= n; ++i) path.push_back(i);
    return path;
  }
  const auto hull = supp_bar(rs, lambda);
  if (hull.empty()) return {1};
  const std::set<int> h(hull.begin(), hull.end());
  if (h.count(n - 1) && h.count(n)) {
    if (h.count(n - 3))
      throw Error(ErrorCode::UnsupportedSupport, "supp_bar of " + lambda.to_string() + " is not of type A");
    return {n - 1, n - 2, n};
  }
  return hull;
}

LWeight construct_minaff(const RootSystem& rs, const MinAffSpec& spec) {
  require_dominant_weight(rs, spec.lambda);
  require_eps(spec.eps);
  const auto s = rs.type().series;
  if (s == Series::D && full_d4_hull(rs, spec.lambda))
    throw Error(ErrorCode::UnsupportedSupport, "weight is supported on all three legs of D4; use the D4 construction");
  const auto path = minaff_path(rs, spec.lambda);
  const auto off = path_offsets(rs, spec.lambda, path, spec.eps);
  LWeight m;
  for (std::size_t t = 0; t < path.size(); ++t)
    m *= q_string(rs, path[t], checked::add(spec.anchor, off[t]), spec.lambda.at_node(path[t]));
  return m;
}

int d4_leg_for_j_index(int k) {
  switch (k) {
    case 1: return 4;
    case 2: return 3;
    case 3: return 1;
    default: throw Error(ErrorCode::IndexOutOfRange, "D4 subdiagram index must be 1, 2 or 3");
  }
}

LWeight construct_minaff_D4(const RootSystem& rs, const MinAffSpec& spec, int leg) {
  if (rs.type().series != Series::D || rs.rank() != 4)
    throw Error(ErrorCode::UnsupportedType, "the three-leg construction needs D4, got " + rs.to_string());
  if (leg != 1 && leg != 3 && leg != 4) throw Error(ErrorCode::IndexOutOfRange, "leg must be 1, 3 or 4");
  require_dominant_weight(rs, spec.lambda);
  require_eps(spec.eps);
  LWeight m = q_string(rs, leg, spec.anchor, spec.lambda.at_node(leg));
  const std::int64_t s2 = checked::add(spec.anchor, spec.eps * step(rs, spec.lambda, leg, 2));
  m *= q_string(rs, 2, s2, spec.lambda.at_node(2));
  for (int q : {1, 3, 4}) {
    if (q == leg) continue;
    m *= q_string(rs, q, checked::add(s2, spec.eps * step(rs, spec.lambda, 2, q)), spec.lambda.at_node(q));
  }
  return m;
}

std::optional<MinAffMatch> is_minaff(const RootSystem& rs, const LWeight& m) {
  if (!m.is_dominant()) throw Error(ErrorCode::NotDominant, "l-weight " + m.to_string() + " is not dominant");
  const Weight lambda = wt(rs, m);
  if (lambda.is_zero()) return MinAffMatch{1, 0, std::nullopt};

  std::map<int, std::int64_t> centre;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (lambda.at_node(i) == 0) continue;
    const auto strings = string_factorize(rs, i, m.exponents(i));
    if (strings.size() != 1) return std::nullopt;
    centre[i] = strings.front().first;
  }

  if (full_d4_hull(rs, lambda)) {
    if (lambda.at_node(2) == 0)
      throw Error(ErrorCode::UnsupportedSupport, "D4 weight supported on the three legs with lambda(h_2) = 0");
    for (int p : {1, 3, 4}) {
      std::optional<MinAffMatch> first;
      bool ok = true;
      for (int q : {1, 3, 4}) {
        if (q == p) continue;
        auto hit = match_path(rs, lambda, {p, 2, q}, centre);
        if (!hit) {
          ok = false;
          break;
        }
        if (!first) first = hit;
      }
      if (ok) return MinAffMatch{first->eps, centre.at(p), p};
    }
    return std::nullopt;
  }
  return match_path(rs, lambda, minaff_path(rs, lambda), centre);
}

LWeight evaluation_lweight_A(const RootSystem& rs, const Weight& lambda, std::int64_t s) {
  if (rs.type().series != Series::A)
    throw Error(ErrorCode::UnsupportedType, "evaluation l-weights are defined for type A, got " + rs.to_string());
  return construct_minaff(rs, {lambda, s, 1});
}

bool cyclic_order_ok(const std::vector<QString>& factors) {
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (std::size_t j = k + 1; j < factors.size(); ++j)
      if (factors[j].s > factors[k].s) return false;
  return true;
}

Subdiagram subdiagram(const RootSystem& rs, const std::vector<int>& J) {
  if (J.empty()) throw Error(ErrorCode::InvalidArgument, "empty subdiagram");
  const std::set<int> in(J.begin(), J.end());
  if (in.size() != J.size()) throw Error(ErrorCode::InvalidArgument, "repeated node in subdiagram");
  for (int v : in)
    if (v < 1 || v > rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(v));
  if (!is_connected(rs, J)) throw Error(ErrorCode::DisconnectedSubdiagram, "subdiagram is not connected");

  std::map<int, std::vector<int>> nbrs;
  bool branch = false;
  for (int v : in) {
    for (int u : rs.neighbours(v))
      if (in.count(u)) nbrs[v].push_back(u);
    branch = branch || nbrs[v].size() >= 3;
  }
  std::vector<int> order;
  if (branch) {
    order.assign(in.begin(), in.end());
  } else {
    int start = *in.begin();
    for (int v : in)
      if (nbrs[v].size() <= 1) {
        start = v;
        break;
      }
    int prev = 0, cur = start;
    while (cur != 0) {
      order.push_back(cur);
      int next = 0;
      for (int u : nbrs[cur])
        if (u != prev) next = u;
      prev = cur;
      cur = next;
    }
  }

  const auto k = order.size();
  std::vector<std::vector<std::int64_t>> cartan(k, std::vector<std::int64_t>(k));
  std::vector<std::int64_t> d(k);
  bool asymmetric = false;
  for (std::size_t a = 0; a < k; ++a) {
    d[a] = rs.d(order[a]);
    for (std::size_t b = 0; b < k; ++b) {
      cartan[a][b] = rs.cartan(order[a], order[b]);
      asymmetric = asymmetric || rs.cartan(order[a], order[b]) != rs.cartan(order[b], order[a]);
    }
  }
  Series series = Series::A;
  if (branch) {
    series = Series::D;
  } else if (asymmetric) {
    series = cartan[k - 1][k - 2] == -2 ? Series::B : Series::C;
  }
  return {RootSystem(LieType{series, static_cast<int>(k)}, std::move(cartan), std::move(d)), std::move(order)};
}

LWeight restrict(const RootSystem& rs, const LWeight& m, const std::vector<int>& J) {
  const auto sub = subdiagram(rs, J);
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < sub.nodes.size(); ++k) relabel[sub.nodes[k]] = static_cast<int>(k) + 1;
  LWeight out;
  for (const auto& [key, mult] : m.factors()) {
    auto it = relabel.find(key.first);
    if (it != relabel.end()) out.add(it->second, key.second, mult);
  }
  return out;
}

}  // namespace minaff
