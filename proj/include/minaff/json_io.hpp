#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minaff/affinization.hpp"
#include "minaff/char_ring.hpp"
#include "minaff/graded.hpp"
#include "minaff/lweight.hpp"

namespace minaff::io {

using nlohmann::json;

/// "1,0,2" -> Weight. Throws Error(InvalidArgument).
Weight parse_weight(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

/// Number when it fits in 64 bits, decimal string otherwise.
json bigint_to_json(const BigInt& v);

json to_json(const Character& c);
json to_json(const std::vector<std::pair<Weight, BigInt>>& constituents);

/// [[i, s, mult], ...] sorted by (i, s).
json to_json(const LWeight& m);
LWeight lweight_from_json(const json& j);
LWeight parse_lweight(const std::string& text);

json to_json(const GradedCharacter& g);
json to_json(const std::optional<MinAffMatch>& match);
json to_json(const LRootCertificate& cert);

std::string character_csv(const Character& c);
std::string constituents_csv(const RootSystem& rs, const std::vector<std::pair<Weight, BigInt>>& parts);
std::string graded_csv(const RootSystem& rs, const GradedCharacter& g);

}  // namespace minaff::io
