#include "reslat/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "reslat/error.hpp"

namespace reslat {

void NatVecSeq::validate() const {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "tuple dimension must be positive");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != k) {
      throw Error(ErrorKind::InvalidArgument, "tuple " + std::to_string(i + 1) + " has " +
                                                  std::to_string(entries[i].size()) +
                                                  " components, expected " + std::to_string(k));
    }
  }
}

SubseqIndex::SubseqIndex(std::vector<std::size_t> positions) : pos_(std::move(positions)) {
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (pos_[i] < 1 || (i > 0 && pos_[i] <= pos_[i - 1])) {
      throw Error(ErrorKind::RangeError, "subsequence positions must be >= 1 and increasing");
    }
  }
}

SubseqIndex SubseqIndex::identity(std::size_t length) {
  std::vector<std::size_t> p(length);
  for (std::size_t i = 0; i < length; ++i) p[i] = i + 1;
  return SubseqIndex(std::move(p));
}

std::size_t SubseqIndex::operator()(std::size_t n) const {
  if (n < 1 || n > pos_.size()) {
    throw Error(ErrorKind::RangeError, "index " + std::to_string(n) + " outside 1.." +
                                           std::to_string(pos_.size()));
  }
  return pos_[n - 1];
}

SubseqIndex compose_indices(const SubseqIndex& outer, const SubseqIndex& inner) {
  std::vector<std::size_t> out;
  out.reserve(inner.length());
  for (std::size_t n = 1; n <= inner.length(); ++n) out.push_back(outer(inner(n)));
  return SubseqIndex(std::move(out));
}

const char* trend_name(Trend t) noexcept {
  switch (t) {
    case Trend::Constant: return "constant";
    case Trend::Ascending: return "ascending";
    case Trend::Descending: return "descending";
  }
  return "?";
}

namespace {

// Longest strictly monotone subsequence of values, as indices into values;
// earliest-ending optimum, O(n^2).
std::vector<std::size_t> longest_monotone(const std::vector<std::uint64_t>& values, bool ascending) {
  const std::size_t n = values.size();
  std::vector<std::size_t> len(n, 1);
  std::vector<std::size_t> prev(n, n);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool ok = ascending ? values[j] < values[i] : values[j] > values[i];
      if (ok && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = j;
      }
    }
    if (len[i] > len[best]) best = i;
  }
  std::vector<std::size_t> out;
  if (n == 0) return out;
  for (std::size_t i = best; i != n; i = prev[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

// Positions of the most frequent value; ties go to the smallest value.
std::vector<std::size_t> longest_constant(const std::vector<std::uint64_t>& values) {
  std::map<std::uint64_t, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < values.size(); ++i) at[values[i]].push_back(i);
  std::vector<std::size_t> best;
  for (auto& [value, where] : at) {
    if (where.size() > best.size()) best = where;
  }
  return best;
}

bool trend_holds(Trend t, std::uint64_t a, std::uint64_t b) {
  switch (t) {
    case Trend::Constant: return a == b;
    case Trend::Ascending: return a < b;
    case Trend::Descending: return a > b;
  }
  return false;
}

}  // namespace

std::optional<OmegaExtraction> omega_extract(const NatVecSeq& seq, std::size_t length) {
  seq.validate();
  if (length == 0) throw Error(ErrorKind::InvalidArgument, "target length must be positive");
  if (seq.entries.size() < length) return std::nullopt;

  std::vector<std::size_t> alive(seq.entries.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::vector<Trend> trends;
  for (std::size_t c = 0; c < seq.k; ++c) {
    std::vector<std::uint64_t> values;
    for (std::size_t i : alive) values.push_back(seq.entries[i][c]);
    const std::vector<std::size_t> candidates[] = {
        longest_constant(values), longest_monotone(values, true), longest_monotone(values, false)};
    std::size_t pick = 0;
    for (std::size_t t = 1; t < 3; ++t) {
      if (candidates[t].size() > candidates[pick].size()) pick = t;
    }
    std::vector<std::size_t> next;
    for (std::size_t i : candidates[pick]) next.push_back(alive[i]);
    alive = std::move(next);
    trends.push_back(static_cast<Trend>(pick));
    if (alive.size() < length) return std::nullopt;
  }

  alive.resize(length);
  std::vector<std::size_t> positions;
  for (std::size_t i : alive) positions.push_back(i + 1);
  if (length == 1) std::fill(trends.begin(), trends.end(), Trend::Constant);
  return OmegaExtraction{SubseqIndex(std::move(positions)), std::move(trends)};
}

bool follows_trends(const NatVecSeq& seq, const OmegaExtraction& x) {
  if (x.trends.size() != seq.k) return false;
  const auto& pos = x.index.positions();
  for (std::size_t p : pos) {
    if (p > seq.entries.size()) return false;
  }
  for (std::size_t c = 0; c < seq.k; ++c) {
    for (std::size_t i = 1; i < pos.size(); ++i) {
      if (!trend_holds(x.trends[c], seq.entries[pos[i - 1] - 1][c], seq.entries[pos[i] - 1][c])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace reslat
