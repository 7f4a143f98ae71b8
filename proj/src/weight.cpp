#include "minaff/weight.hpp"

#include <algorithm>

#include "minaff/checked.hpp"
#include "minaff/error.hpp"

namespace minaff {

Weight Weight::fundamental(std::size_t rank, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > rank)
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node) + " outside 1.." + std::to_string(rank));
  Weight w(rank);
  w.coords_[static_cast<std::size_t>(node - 1)] = 1;
  return w;
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], other.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], other.coords_[i]);
  return *this;
}

Weight Weight::operator-() const {
  Weight out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = checked::sub(0, coords_[i]);
  return out;
}

Weight Weight::scaled(std::int64_t factor) const {
  Weight out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = checked::mul(coords_[i], factor);
  return out;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace minaff
