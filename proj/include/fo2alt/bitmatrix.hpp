// bitmatrix.hpp
// * Dense bit matrix used for relations on monoid elements.

#ifndef FO2ALT_BITMATRIX_HPP
#define FO2ALT_BITMATRIX_HPP

#include <cstdint>
#include <vector>

namespace fo2alt {

/// Rectangular bit matrix with rows packed into 64-bit words. Relations on a
/// carrier of size n are stored as n x n instances; exhaustive checks iterate
/// rows, so subset tests on whole rows are the hot operation.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        bits_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v = true) {
    uint64_t& w = bits_[static_cast<size_t>(r) * words_ + c / 64];
    if (v)
      w |= uint64_t{1} << (c % 64);
    else
      w &= ~(uint64_t{1} << (c % 64));
  }

  /// Row a is a subset of row b.
  bool row_subset(int a, int b) const {
    const uint64_t* ra = &bits_[static_cast<size_t>(a) * words_];
    const uint64_t* rb = &bits_[static_cast<size_t>(b) * words_];
    for (int w = 0; w < words_; ++w)
      if (ra[w] & ~rb[w]) return false;
    return true;
  }

  bool row_equal(int a, int b) const {
    const uint64_t* ra = &bits_[static_cast<size_t>(a) * words_];
    const uint64_t* rb = &bits_[static_cast<size_t>(b) * words_];
    for (int w = 0; w < words_; ++w)
      if (ra[w] != rb[w]) return false;
    return true;
  }

  void or_row(int dst, const BitMatrix& other, int src) {
    uint64_t* rd = &bits_[static_cast<size_t>(dst) * words_];
    const uint64_t* rs = &other.bits_[static_cast<size_t>(src) * other.words_];
    for (int w = 0; w < words_; ++w) rd[w] |= rs[w];
  }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

  /// In-place reflexive-transitive closure (Warshall), for square matrices.
  void transitive_closure() {
    for (int r = 0; r < rows_; ++r) set(r, r);
    for (int k = 0; k < rows_; ++k)
      for (int i = 0; i < rows_; ++i)
        if (at(i, k)) or_row(i, *this, k);
  }

  const std::vector<uint64_t>& raw() const { return bits_; }

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace fo2alt

#endif  // FO2ALT_BITMATRIX_HPP
