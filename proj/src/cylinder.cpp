#include "shiftlab/cylinder.hpp"

#include <stdexcept>

namespace shiftlab {

std::optional<Symbol> FinMap::get(std::int64_t position) const {
  auto it = entries_.find(position);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::int64_t FinMap::min_position() const {
  if (entries_.empty()) throw std::logic_error("min_position of empty FinMap");
  return entries_.begin()->first;
}

std::int64_t FinMap::max_position() const {
  if (entries_.empty()) throw std::logic_error("max_position of empty FinMap");
  return entries_.rbegin()->first;
}

FinMap FinMap::translated(std::int64_t n) const {
  FinMap out;
  for (const auto& [p, s] : entries_) out.set(p + n, s);
  return out;
}

bool contains(const FinMap& h, const BiSeq& x) {
  for (const auto& [p, s] : h.entries())
    if (x.at(p) != s) return false;
  return true;
}

JoinResult join(std::span<const FinMap> maps) {
  if (maps.empty()) throw std::invalid_argument("join of an empty list");
  FinMap out = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) {
    for (const auto& [p, s] : maps[i].entries()) {
      if (auto existing = out.get(p); existing && *existing != s)
        return JoinConflict{p, *existing, s};
      out.set(p, s);
    }
  }
  return out;
}

JoinResult join(const FinMap& a, const FinMap& b) {
  const FinMap both[] = {a, b};
  return join(std::span<const FinMap>(both, 2));
}

}  // namespace shiftlab
