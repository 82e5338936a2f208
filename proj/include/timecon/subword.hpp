#pragma once

#include <stdexcept>
#include <vector>

namespace timecon {

// Constant-time equality of equal-length subwords of an integer word, via a
// suffix array (doubling construction), the LCP array, and a sparse-table
// range minimum structure.
class SubwordEq {
 public:
  SubwordEq() = default;
  explicit SubwordEq(const std::vector<int>& word);

  // True iff word[i .. i+len) == word[j .. j+len).
  bool eq(int i, int j, int len) const;

  int size() const { return n_; }

 private:
  int lcp(int i, int j) const;  // longest common prefix of suffixes i, j

  int n_ = 0;
  std::vector<int> sa_;
  std::vector<int> rank_;
  std::vector<int> lcp_;               // lcp_[k] = lcp(sa_[k], sa_[k+1])
  std::vector<std::vector<int>> rmq_;  // sparse table over lcp_
  std::vector<int> log2_;
};

}  // namespace timecon
