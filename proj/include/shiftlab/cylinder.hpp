#pragma once

#include <map>
#include <span>
#include <variant>

#include "shiftlab/biseq.hpp"

namespace shiftlab {

/// A finite partial function Z -> Symbol; the datum of the cylinder
/// C(h) = { x : x|dom(h) = h }. An empty domain describes the full shift.
class FinMap {
 public:
  FinMap() = default;
  explicit FinMap(std::map<std::int64_t, Symbol> entries) : entries_(std::move(entries)) {}
  FinMap(std::initializer_list<std::pair<const std::int64_t, Symbol>> entries)
      : entries_(entries) {}

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::int64_t, Symbol>& entries() const { return entries_; }

  std::optional<Symbol> get(std::int64_t position) const;
  void set(std::int64_t position, Symbol value) { entries_[position] = value; }

  std::int64_t min_position() const;  // rejects empty
  std::int64_t max_position() const;  // rejects empty

  /// dom shifted by n: result(p + n) = h(p). Membership satisfies
  /// contains(translate(h, n), x) == contains(h, x shifted by n).
  FinMap translated(std::int64_t n) const;

  bool operator==(const FinMap&) const = default;
  bool operator<(const FinMap& other) const { return entries_ < other.entries_; }

 private:
  std::map<std::int64_t, Symbol> entries_;
};

/// x in C(h): the sequence agrees with h everywhere on dom(h).
bool contains(const FinMap& h, const BiSeq& x);

/// Two maps in a join disagreed at a shared position; the intersection of
/// their cylinders is empty.
struct JoinConflict {
  std::int64_t position = 0;
  Symbol existing = 0;
  Symbol incoming = 0;
};

using JoinResult = std::variant<FinMap, JoinConflict>;

/// Union of the partial functions when they pairwise agree on shared
/// positions; then C(join) is the intersection of the cylinders.
JoinResult join(std::span<const FinMap> maps);
JoinResult join(const FinMap& a, const FinMap& b);

}  // namespace shiftlab
