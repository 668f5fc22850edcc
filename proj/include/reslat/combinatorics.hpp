#pragma once

// Finite monotone-subsequence extraction for sequences of k-tuples of
// naturals: pick positions along which every coordinate is constant,
// strictly ascending or strictly descending.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace reslat {

struct NatVecSeq {
  std::size_t k = 0;
  std::vector<std::vector<std::uint64_t>> entries;

  // Throws InvalidArgument for k == 0 or a tuple of the wrong dimension.
  void validate() const;
};

// Strictly increasing 1-based positions, so n <= sigma(n) holds.
class SubseqIndex {
 public:
  SubseqIndex() = default;
  // Throws RangeError unless the positions are >= 1 and strictly increasing.
  explicit SubseqIndex(std::vector<std::size_t> positions);

  static SubseqIndex identity(std::size_t length);

  std::size_t length() const noexcept { return pos_.size(); }
  // sigma(n) for 1 <= n <= length().
  std::size_t operator()(std::size_t n) const;
  const std::vector<std::size_t>& positions() const noexcept { return pos_; }

  friend bool operator==(const SubseqIndex&, const SubseqIndex&) = default;

 private:
  std::vector<std::size_t> pos_;
};

// (outer o inner)(n) = outer(inner(n)). Throws RangeError when inner
// points past the end of outer.
SubseqIndex compose_indices(const SubseqIndex& outer, const SubseqIndex& inner);

enum class Trend { Constant, Ascending, Descending };

const char* trend_name(Trend t) noexcept;

struct OmegaExtraction {
  SubseqIndex index;
  std::vector<Trend> trends;  // one per coordinate
};

// Coordinate by coordinate, keeps the longest constant, strictly ascending
// or strictly descending subsequence of the survivors (ties prefer that
// order), then cuts the result to L positions. Returns nullopt when fewer
// than L positions survive. Requires L >= 1.
std::optional<OmegaExtraction> omega_extract(const NatVecSeq& seq, std::size_t length);

// True when every coordinate follows its trend along the positions.
bool follows_trends(const NatVecSeq& seq, const OmegaExtraction& x);

}  // namespace reslat
