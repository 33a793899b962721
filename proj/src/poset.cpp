#include "posets/poset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace posets {

using detail::PosetData;
using detail::Word;
using detail::word_count;

namespace {

void bit_set(std::vector<Word>& words, std::size_t row_words, int row, int col) {
  words[static_cast<std::size_t>(row) * row_words + static_cast<std::size_t>(col) / 64] |=
      Word{1} << (col % 64);
}

bool bit_test(const std::vector<Word>& words, std::size_t row_words, int row, int col) {
  return (words[static_cast<std::size_t>(row) * row_words + static_cast<std::size_t>(col) / 64] >>
          (col % 64)) &
         1u;
}

int popcount_span(std::span<const Word> w) {
  int c = 0;
  for (Word x : w) c += std::popcount(x);
  return c;
}

bool span_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool span_intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::vector<Word> full_mask(int n) {
  std::vector<Word> m(word_count(n), ~Word{0});
  if (n % 64 != 0 && !m.empty()) m.back() = (Word{1} << (n % 64)) - 1;
  if (n == 0) m.assign(word_count(n), 0);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subset

int Subset::size() const { return popcount_span(bits_); }

bool Subset::contains(int e) const {
  require_element(e);
  return (bits_[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1u;
}

Subset& Subset::insert(int e) {
  require_element(e);
  bits_[static_cast<std::size_t>(e) / 64] |= Word{1} << (e % 64);
  return *this;
}

Subset& Subset::erase(int e) {
  require_element(e);
  bits_[static_cast<std::size_t>(e) / 64] &= ~(Word{1} << (e % 64));
  return *this;
}

void Subset::require_same_owner(const Subset& other) const {
  if (owner_ != other.owner_)
    throw Error(Errc::owner_mismatch, "subsets belong to different posets");
}

void Subset::require_element(int e) const {
  if (!owner_ || e < 0 || e >= owner_->n)
    throw Error(Errc::unknown_element, "element index out of range: " + std::to_string(e));
}

bool Subset::operator==(const Subset& other) const {
  require_same_owner(other);
  return bits_ == other.bits_;
}

bool Subset::subset_of(const Subset& other) const {
  require_same_owner(other);
  return span_subset(bits_, other.bits_);
}

bool Subset::proper_subset_of(const Subset& other) const {
  require_same_owner(other);
  return span_subset(bits_, other.bits_) && bits_ != other.bits_;
}

bool Subset::intersects(const Subset& other) const {
  require_same_owner(other);
  return span_intersects(bits_, other.bits_);
}

Subset Subset::operator&(const Subset& other) const {
  Subset r = *this;
  r &= other;
  return r;
}

Subset Subset::operator|(const Subset& other) const {
  Subset r = *this;
  r |= other;
  return r;
}

Subset Subset::operator-(const Subset& other) const {
  Subset r = *this;
  r -= other;
  return r;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_owner(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same_owner(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  require_same_owner(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
  return *this;
}

Subset Subset::complement() const {
  Subset r = *this;
  const auto mask = full_mask(owner_ ? owner_->n : 0);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = ~r.bits_[i] & mask[i];
  return r;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    Word x = bits_[w];
    while (x) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for (int e : elements()) out.push_back(owner_->labels[e]);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += owner_->labels[e];
    first = false;
  }
  out += "}";
  return out;
}

std::optional<int> Subset::first() const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w]) return static_cast<int>(w * 64) + std::countr_zero(bits_[w]);
  return std::nullopt;
}

Poset Subset::owner() const {
  if (!owner_) throw Error(Errc::bad_argument, "subset has no owner");
  return Poset(owner_);
}

bool Subset::canonical_less(const Subset& a, const Subset& b) {
  a.require_same_owner(b);
  const int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the set containing the lowest differing index comes
  // first (this matches lexicographic order on ascending index sequences).
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    const Word diff = a.bits_[i] ^ b.bits_[i];
    if (diff) {
      const Word lowest = diff & (~diff + 1);
      return a.bits_[i] & lowest;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n > max_carrier)
    throw Error(Errc::carrier_too_large,
                "carrier of " + std::to_string(n) + " elements exceeds the limit of " +
                    std::to_string(max_carrier));

  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < n; ++i) {
    if (labels[i].empty()) throw Error(Errc::duplicate_label, "empty element name");
    if (!index.emplace(labels[i], i).second)
      throw Error(Errc::duplicate_label, "duplicate element name: " + labels[i]);
  }

  const int w = word_count(n);
  auto data = std::make_shared<PosetData>();
  data->labels = labels;
  data->n = n;
  data->words = w;
  data->up.assign(static_cast<std::size_t>(n) * w, 0);

  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::unknown_label, "unknown element in cover: " + name);
    return it->second;
  };
  for (const auto& [lo, hi] : covers) bit_set(data->up, w, lookup(lo), lookup(hi));
  for (int i = 0; i < n; ++i) bit_set(data->up, w, i, i);

  // Warshall closure on the boolean matrix: row_i |= row_k whenever i <= k.
  for (int k = 0; k < n; ++k) {
    const auto rk = data->up_row(k);
    for (int i = 0; i < n; ++i) {
      if (i == k || !bit_test(data->up, w, i, k)) continue;
      Word* ri = data->up.data() + static_cast<std::size_t>(i) * w;
      for (int j = 0; j < w; ++j) ri[j] |= rk[j];
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bit_test(data->up, w, i, j) && bit_test(data->up, w, j, i))
        throw Error(Errc::cycle_detected,
                    "cover relation contains a cycle through " + labels[i] + " and " + labels[j]);

  data->down.assign(static_cast<std::size_t>(n) * w, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bit_test(data->up, w, i, j)) bit_set(data->down, w, j, i);

  // Transitive reduction: x < y is a cover iff nothing lies strictly between.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !bit_test(data->up, w, x, y)) continue;
      bool has_mid = false;
      const auto ux = data->up_row(x);
      const auto dy = data->down_row(y);
      for (int j = 0; j < w && !has_mid; ++j) {
        Word mid = ux[j] & dy[j];
        if (j == x / 64) mid &= ~(Word{1} << (x % 64));
        if (j == y / 64) mid &= ~(Word{1} << (y % 64));
        has_mid = mid != 0;
      }
      if (!has_mid) data->covers.emplace_back(x, y);
    }
  }
  std::sort(data->covers.begin(), data->covers.end());

  const auto full = full_mask(n);
  for (int i = 0; i < n; ++i) {
    if (std::equal(full.begin(), full.end(), data->up_row(i).begin())) data->least = i;
    if (std::equal(full.begin(), full.end(), data->down_row(i).begin())) data->greatest = i;
  }

  return Poset(std::move(data));
}

const std::string& Poset::label(int e) const {
  require_element(e);
  return data_->labels[e];
}

std::optional<int> Poset::index_of(std::string_view label) const {
  for (int i = 0; i < data_->n; ++i)
    if (data_->labels[i] == label) return i;
  return std::nullopt;
}

int Poset::require(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(Errc::unknown_element, "unknown element: " + std::string(label));
}

void Poset::require_owned(const Subset& s) const {
  if (s.owner_ != data_)
    throw Error(Errc::owner_mismatch, "subset belongs to a different poset");
}

void Poset::require_element(int e) const {
  if (e < 0 || e >= data_->n)
    throw Error(Errc::unknown_element, "element index out of range: " + std::to_string(e));
}

bool Poset::leq(int x, int y) const {
  require_element(x);
  require_element(y);
  return data_->leq(x, y);
}

Subset Poset::make(std::vector<Word> bits) const { return Subset(data_, std::move(bits)); }

Subset Poset::down_set(int a) const {
  require_element(a);
  auto row = data_->down_row(a);
  return make({row.begin(), row.end()});
}

Subset Poset::up_set(int a) const {
  require_element(a);
  auto row = data_->up_row(a);
  return make({row.begin(), row.end()});
}

Subset Poset::lower_bounds(const Subset& xs) const {
  require_owned(xs);
  if (xs.empty()) throw Error(Errc::empty_argument, "lower_bounds of an empty subset");
  auto acc = full_mask(data_->n);
  for (int e : xs.elements()) {
    auto row = data_->down_row(e);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= row[i];
  }
  return make(std::move(acc));
}

Subset Poset::upper_bounds(const Subset& xs) const {
  require_owned(xs);
  if (xs.empty()) throw Error(Errc::empty_argument, "upper_bounds of an empty subset");
  auto acc = full_mask(data_->n);
  for (int e : xs.elements()) {
    auto row = data_->up_row(e);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= row[i];
  }
  return make(std::move(acc));
}

Subset Poset::lower_bounds(int a, int b) const {
  require_element(a);
  require_element(b);
  auto ra = data_->down_row(a);
  auto rb = data_->down_row(b);
  std::vector<Word> acc(ra.begin(), ra.end());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= rb[i];
  return make(std::move(acc));
}

Subset Poset::upper_bounds(int a, int b) const {
  require_element(a);
  require_element(b);
  auto ra = data_->up_row(a);
  auto rb = data_->up_row(b);
  std::vector<Word> acc(ra.begin(), ra.end());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= rb[i];
  return make(std::move(acc));
}

Subset Poset::maximal_elements(const Subset& s) const {
  require_owned(s);
  if (s.empty()) throw Error(Errc::empty_argument, "maximal_elements of an empty subset");
  Subset out = empty_set();
  for (int e : s.elements()) {
    Subset above = up_set(e);
    above.erase(e);
    if (!above.intersects(s)) out.insert(e);
  }
  return out;
}

Subset Poset::minimal_elements(const Subset& s) const {
  require_owned(s);
  if (s.empty()) throw Error(Errc::empty_argument, "minimal_elements of an empty subset");
  Subset out = empty_set();
  for (int e : s.elements()) {
    Subset below = down_set(e);
    below.erase(e);
    if (!below.intersects(s)) out.insert(e);
  }
  return out;
}

Poset Poset::dual() const {
  auto data = std::make_shared<PosetData>();
  data->labels = data_->labels;
  data->n = data_->n;
  data->words = data_->words;
  data->up = data_->down;
  data->down = data_->up;
  data->least = data_->greatest;
  data->greatest = data_->least;
  for (auto [lo, hi] : data_->covers) data->covers.emplace_back(hi, lo);
  std::sort(data->covers.begin(), data->covers.end());
  return Poset(std::move(data));
}

Subset Poset::empty_set() const {
  return make(std::vector<Word>(static_cast<std::size_t>(data_->words), 0));
}

Subset Poset::full_set() const { return make(full_mask(data_->n)); }

Subset Poset::singleton(int e) const {
  Subset s = empty_set();
  s.insert(e);
  return s;
}

Subset Poset::set_of(std::span<const int> elems) const {
  Subset s = empty_set();
  for (int e : elems) s.insert(e);
  return s;
}

Subset Poset::set_of(std::initializer_list<int> elems) const {
  return set_of(std::span<const int>(elems.begin(), elems.size()));
}

Subset Poset::set_of_labels(std::span<const std::string> labels) const {
  Subset s = empty_set();
  for (const auto& l : labels) s.insert(require(l));
  return s;
}

Subset Poset::set_of_labels(std::initializer_list<const char*> labels) const {
  Subset s = empty_set();
  for (const char* l : labels) s.insert(require(l));
  return s;
}

Subset Poset::set_from_mask(std::uint64_t mask) const {
  if (data_->n > 64)
    throw Error(Errc::carrier_too_large, "mask construction requires a carrier of at most 64");
  std::vector<Word> bits(static_cast<std::size_t>(data_->words), 0);
  if (!bits.empty()) bits[0] = mask & full_mask(data_->n)[0];
  return make(std::move(bits));
}

Subset Poset::adopt(const Subset& foreign) const {
  if (foreign.universe_size() != data_->n)
    throw Error(Errc::owner_mismatch, "cannot adopt a subset of a different-sized poset");
  auto w = foreign.words();
  return make({w.begin(), w.end()});
}

bool Poset::operator==(const Poset& other) const {
  if (data_ == other.data_) return true;
  return data_->n == other.data_->n && data_->labels == other.data_->labels &&
         data_->up == other.data_->up;
}

std::span<const Word> Poset::up_row(int x) const {
  require_element(x);
  return data_->up_row(x);
}

std::span<const Word> Poset::down_row(int x) const {
  require_element(x);
  return data_->down_row(x);
}

}  // namespace posets
