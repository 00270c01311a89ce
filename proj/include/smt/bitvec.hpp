#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smt {

/// A fixed-length vector over Z_2, i.e. a subset mask of [0, n).
///
/// Bit i corresponds to variable i. Dimensions up to 4096 are supported;
/// storage is packed 64-bit words with all tail bits kept zero, so
/// word-level equality, hashing and popcount need no masking.
class BitVec {
 public:
  static constexpr int kMaxDim = 4096;

  BitVec() = default;

  explicit BitVec(int n) : n_(check_dim(n)), w_(words_for(n)) {}

  static BitVec zeros(int n) { return BitVec(n); }

  static BitVec ones(int n) {
    BitVec v(n);
    for (auto& w : v.w_) w = ~uint64_t{0};
    v.mask_tail();
    return v;
  }

  static BitVec unit(int n, int i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  /// Parses an n-char string of '0'/'1' where char i is variable i.
  static BitVec from_string(const std::string& s) {
    BitVec v(static_cast<int>(s.size()));
    for (int i = 0; i < v.n_; ++i) {
      if (s[i] == '1') {
        v.set(i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitVec: mask string must be 0/1");
      }
    }
    return v;
  }

  int dim() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i, bool value = true) {
    if (i < 0 || i >= n_) throw std::out_of_range("BitVec::set");
    const uint64_t bit = uint64_t{1} << (i & 63);
    if (value) {
      w_[i >> 6] |= bit;
    } else {
      w_[i >> 6] &= ~bit;
    }
  }

  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  /// True iff the supports overlap (this AND other is non-empty).
  bool intersects(const BitVec& other) const {
    require_same_dim(other);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  /// Partial order of the subset lattice: k <= m iff k_i <= m_i for all i.
  bool subset_of(const BitVec& m) const {
    require_same_dim(m);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~m.w_[i]) return false;
    return true;
  }

  BitVec operator|(const BitVec& o) const {
    require_same_dim(o);
    BitVec r(*this);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
  }

  BitVec operator&(const BitVec& o) const {
    require_same_dim(o);
    BitVec r(*this);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }

  BitVec& operator|=(const BitVec& o) {
    require_same_dim(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  /// Bit-wise negation within the n-bit universe.
  BitVec complement() const {
    BitVec r(*this);
    for (auto& w : r.w_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Mask-string order (variable 0 compared first). Used for the
  /// deterministic serialization ordering of sparse transforms.
  static bool lex_less(const BitVec& a, const BitVec& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t i = 0; i < a.w_.size(); ++i) {
      if (a.w_[i] != b.w_[i]) {
        // the lowest differing bit decides; the vector with a 0 there is smaller
        const uint64_t diff = a.w_[i] ^ b.w_[i];
        const int bit = std::countr_zero(diff);
        return ((a.w_[i] >> bit) & 1u) == 0;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  /// Integer encoding sum_i bit_i * 2^i; requires dim <= 64.
  uint64_t to_uint() const {
    if (n_ > 64) throw std::invalid_argument("BitVec::to_uint: dim > 64");
    return w_.empty() ? 0 : w_[0];
  }

  static BitVec from_uint(int n, uint64_t bits) {
    if (n > 64) throw std::invalid_argument("BitVec::from_uint: dim > 64");
    BitVec v(n);
    if (!v.w_.empty()) v.w_[0] = bits;
    v.mask_tail();
    return v;
  }

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ull ^ static_cast<uint64_t>(n_);
    for (uint64_t w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  static int check_dim(int n) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("BitVec: dim out of range");
    return n;
  }
  static size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }
  void require_same_dim(const BitVec& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVec: dimension mismatch");
  }
  void mask_tail() {
    const int rem = n_ & 63;
    if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitVecHash {
  size_t operator()(const BitVec& v) const { return static_cast<size_t>(v.hash()); }
};

struct BitVecLexLess {
  bool operator()(const BitVec& a, const BitVec& b) const { return BitVec::lex_less(a, b); }
};

/// A binary matrix stored as BitVec rows over a common column count.
struct BinMatrix {
  int cols = 0;
  std::vector<BitVec> rows;

  BinMatrix() = default;
  BinMatrix(int r, int c) : cols(c), rows(static_cast<size_t>(r), BitVec(c)) {}

  static BinMatrix identity(int n) {
    BinMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i].set(i);
    return m;
  }

  int row_count() const { return static_cast<int>(rows.size()); }

  bool is_identity() const {
    if (cols != row_count()) return false;
    for (int i = 0; i < cols; ++i)
      if (rows[i] != BitVec::unit(cols, i)) return false;
    return true;
  }
};

}  // namespace smt
