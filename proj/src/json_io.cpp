#include "minaff/json_io.hpp"

#include <charconv>
#include <sstream>

#include "minaff/error.hpp"

namespace minaff::io {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty() && item.front() == '+') item.erase(item.begin());
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::InvalidArgument, "expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Weight parse_weight(const std::string& text) { return Weight(parse_int_list(text)); }

json to_json(const Weight& w) { return json(w.coords()); }

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "a weight must be a JSON array of integers");
  std::vector<std::int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "a weight must be a JSON array of integers");
    v.push_back(x.get<std::int64_t>());
  }
  return Weight(std::move(v));
}

json bigint_to_json(const BigInt& v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

json to_json(const Character& c) {
  json terms = json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back({{"weight", to_json(w)}, {"mult", bigint_to_json(m)}});
  return {{"terms", terms}};
}

json to_json(const std::vector<std::pair<Weight, BigInt>>& constituents) {
  json out = json::array();
  for (const auto& [w, m] : constituents) out.push_back({{"weight", to_json(w)}, {"mult", bigint_to_json(m)}});
  return out;
}

json to_json(const LWeight& m) {
  json out = json::array();
  for (const auto& [k, mult] : m.factors()) out.push_back({k.first, k.second, mult});
  return out;
}

LWeight lweight_from_json(const json& j) {
  const std::string shape = "an l-weight must be a JSON array of [node, exponent, mult] triples";
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, shape);
  LWeight m;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::InvalidArgument, shape);
    for (const auto& x : t)
      if (!x.is_number_integer()) throw Error(ErrorCode::InvalidArgument, shape);
    m.add(t[0].get<int>(), t[1].get<std::int64_t>(), t[2].get<std::int64_t>());
  }
  return m;
}

LWeight parse_lweight(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return lweight_from_json(j);
}

json to_json(const GradedCharacter& g) {
  json out = json::array();
  for (const auto& [grade, piece] : g.pieces()) {
    json cs = json::array();
    for (const auto& [mu, m] : piece) cs.push_back({{"weight", to_json(mu)}, {"mult", m}});
    out.push_back({{"grade", grade}, {"constituents", cs}});
  }
  return out;
}

json to_json(const std::optional<MinAffMatch>& match) {
  if (!match) return {{"minimal", false}};
  json out = {{"minimal", true}, {"eps", match->eps}, {"anchor", match->anchor}};
  if (match->leg) out["leg"] = *match->leg;
  return out;
}

json to_json(const LRootCertificate& cert) {
  json out = json::array();
  for (const auto& t : cert) out.push_back({t.node, t.s, t.count});
  return out;
}

namespace {

std::string weight_field(const Weight& w) {
  std::string s = "\"";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "\"";
}

}  // namespace

std::string character_csv(const Character& c) {
  std::ostringstream out;
  out << "weight,mult\n";
  for (const auto& [w, m] : c.terms()) out << weight_field(w) << "," << m << "\n";
  return out.str();
}

std::string constituents_csv(const RootSystem& rs, const std::vector<std::pair<Weight, BigInt>>& parts) {
  std::ostringstream out;
  out << "weight,mult,dim\n";
  for (const auto& [w, m] : parts) out << weight_field(w) << "," << m << "," << weyl_dimension(rs, w) << "\n";
  return out.str();
}

std::string graded_csv(const RootSystem& rs, const GradedCharacter& g) {
  std::ostringstream out;
  out << "grade,weight,mult,dim\n";
  for (const auto& [grade, piece] : g.pieces())
    for (const auto& [mu, m] : piece)
      out << grade << "," << weight_field(mu) << "," << m << "," << weyl_dimension(rs, mu) << "\n";
  return out.str();
}

}  // namespace minaff::io
