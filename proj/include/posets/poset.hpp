#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posets/errors.hpp"

namespace posets {

class Poset;
class Subset;

namespace detail {

using Word = std::uint64_t;

inline int word_count(int n) { return (n + 63) / 64; }

/// Immutable carrier shared by a Poset and every Subset it owns.
/// Subset ownership is pointer identity on this structure.
struct PosetData {
  std::vector<std::string> labels;
  int n = 0;
  int words = 0;
  // Row x of `up` is the bitset {y | x <= y}; row x of `down` is {y | y <= x}.
  std::vector<Word> up;
  std::vector<Word> down;
  // Transitive reduction, sorted by (lower, upper) index.
  std::vector<std::pair<int, int>> covers;
  std::optional<int> least;
  std::optional<int> greatest;

  std::span<const Word> up_row(int x) const {
    return {up.data() + static_cast<std::size_t>(x) * words, static_cast<std::size_t>(words)};
  }
  std::span<const Word> down_row(int x) const {
    return {down.data() + static_cast<std::size_t>(x) * words, static_cast<std::size_t>(words)};
  }
  bool leq(int x, int y) const {
    return (up[static_cast<std::size_t>(x) * words + y / 64] >> (y % 64)) & 1u;
  }
};

}  // namespace detail

/// A set of elements of one particular poset, stored as an index bitset.
/// Binary operations require both operands to belong to the same Poset
/// instance and raise Errc::owner_mismatch otherwise.
class Subset {
public:
  Subset() = default;

  int universe_size() const { return owner_ ? owner_->n : 0; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool any() const { return size() != 0; }
  bool is_full() const { return size() == universe_size(); }

  bool contains(int e) const;
  Subset& insert(int e);
  Subset& erase(int e);

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }
  bool subset_of(const Subset& other) const;
  bool proper_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  /// Set difference.
  Subset operator-(const Subset& other) const;
  /// Complement within the owner's carrier.
  Subset complement() const;

  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  Subset& operator-=(const Subset& other);

  /// Ascending element indices.
  std::vector<int> elements() const;
  std::vector<std::string> labels() const;
  /// "{a,b,c}" with labels in index order.
  std::string to_string() const;

  /// Smallest member index, if any.
  std::optional<int> first() const;

  Poset owner() const;
  bool same_owner(const Subset& other) const { return owner_ == other.owner_; }

  std::span<const detail::Word> words() const { return bits_; }

  /// Canonical order: by cardinality, then by the ascending index sequence.
  /// Requires the same owner.
  static bool canonical_less(const Subset& a, const Subset& b);

private:
  friend class Poset;
  Subset(std::shared_ptr<const detail::PosetData> owner, std::vector<detail::Word> bits)
      : owner_(std::move(owner)), bits_(std::move(bits)) {}

  void require_same_owner(const Subset& other) const;
  void require_element(int e) const;

  std::shared_ptr<const detail::PosetData> owner_;
  std::vector<detail::Word> bits_;
};

/// A finite partially ordered set. Immutable once constructed; cheap to
/// copy (copies share the underlying relation). All order operators are
/// pure functions of their arguments.
class Poset {
public:
  /// Largest accepted carrier.
  static constexpr int max_carrier = 4096;

  /// Builds a poset from element names and a list of `lower < upper`
  /// pairs. The order is the reflexive-transitive closure of the pairs;
  /// redundant (non-cover) pairs are accepted and normalized away, so the
  /// stored cover relation is always the transitive reduction.
  static Poset from_covers(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return data_->n; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(int e) const;
  std::optional<int> index_of(std::string_view label) const;
  /// Like index_of but raises Errc::unknown_element when absent.
  int require(std::string_view label) const;

  bool leq(int x, int y) const;
  /// Strict order.
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  Subset down_set(int a) const;
  Subset up_set(int a) const;
  /// Common lower bounds of all members of a non-empty subset.
  Subset lower_bounds(const Subset& xs) const;
  Subset upper_bounds(const Subset& xs) const;
  /// Binary L(a,b) / U(a,b).
  Subset lower_bounds(int a, int b) const;
  Subset upper_bounds(int a, int b) const;

  std::optional<int> least() const { return data_->least; }
  std::optional<int> greatest() const { return data_->greatest; }

  /// Members of a non-empty subset with no strictly greater member inside it.
  Subset maximal_elements(const Subset& s) const;
  Subset minimal_elements(const Subset& s) const;

  const std::vector<std::pair<int, int>>& covers() const { return data_->covers; }

  /// The order-reversed poset over the same labels.
  Poset dual() const;

  Subset empty_set() const;
  Subset full_set() const;
  Subset singleton(int e) const;
  Subset set_of(std::span<const int> elems) const;
  Subset set_of(std::initializer_list<int> elems) const;
  Subset set_of_labels(std::span<const std::string> labels) const;
  Subset set_of_labels(std::initializer_list<const char*> labels) const;
  /// Bit i of `mask` selects element i; requires size() <= 64.
  Subset set_from_mask(std::uint64_t mask) const;
  /// Re-owns a same-sized foreign subset, preserving indices.
  Subset adopt(const Subset& foreign) const;

  /// True when the other poset is this one (shared relation), so subsets
  /// are interchangeable between the two.
  bool same_carrier(const Poset& other) const { return data_ == other.data_; }
  /// Structural equality: identical labels and identical order relation.
  bool operator==(const Poset& other) const;
  bool operator!=(const Poset& other) const { return !(*this == other); }

  std::span<const detail::Word> up_row(int x) const;
  std::span<const detail::Word> down_row(int x) const;

private:
  friend class Subset;
  explicit Poset(std::shared_ptr<const detail::PosetData> data) : data_(std::move(data)) {}

  Subset make(std::vector<detail::Word> bits) const;
  void require_element(int e) const;
  void require_owned(const Subset& s) const;

  std::shared_ptr<const detail::PosetData> data_;
};

}  // namespace posets
