#include "timecon/subword.hpp"

#include <algorithm>
#include <numeric>

namespace timecon {

SubwordEq::SubwordEq(const std::vector<int>& word) : n_(static_cast<int>(word.size())) {
  if (n_ == 0) return;

  // Rank compression of the raw symbols, then doubling rounds of counting
  // sort on (rank[i], rank[i + len]) pairs.
  sa_.resize(n_);
  rank_.resize(n_);
  {
    std::vector<int> sorted(word);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n_; ++i)
      rank_[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                                  sorted.begin());
  }

  std::vector<int> tmp(n_), aux(n_), count(std::max(n_ + 1, 2), 0);
  auto counting_sort = [&](const std::vector<int>& key, const std::vector<int>& in,
                           std::vector<int>& out) {
    std::fill(count.begin(), count.end(), 0);
    for (int i : in) ++count[key[i] + 1];
    for (size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (int i : in) out[count[key[i]]++] = i;
  };

  std::iota(aux.begin(), aux.end(), 0);
  counting_sort(rank_, aux, sa_);
  for (int len = 1;; len *= 2) {
    // Sort by second key implicitly: suffixes starting in the last `len`
    // positions have an empty second half and come first.
    aux.clear();
    for (int i = n_ - len; i < n_; ++i) aux.push_back(i);
    for (int i : sa_)
      if (i >= len) aux.push_back(i - len);
    counting_sort(rank_, aux, sa_);

    tmp[sa_[0]] = 0;
    int current = 0;
    for (int i = 1; i < n_; ++i) {
      int a = sa_[i - 1], b = sa_[i];
      int a2 = a + len < n_ ? rank_[a + len] : -1;
      int b2 = b + len < n_ ? rank_[b + len] : -1;
      if (rank_[a] != rank_[b] || a2 != b2) ++current;
      tmp[sa_[i]] = current;
    }
    rank_.swap(tmp);
    if (current == n_ - 1) break;
  }

  // Kasai LCP.
  lcp_.assign(std::max(n_ - 1, 0), 0);
  for (int i = 0, k = 0; i < n_; ++i) {
    if (k > 0) --k;
    if (rank_[i] == n_ - 1) {
      k = 0;
      continue;
    }
    int j = sa_[rank_[i] + 1];
    while (i + k < n_ && j + k < n_ && word[i + k] == word[j + k]) ++k;
    lcp_[rank_[i]] = k;
  }

  // Sparse table.
  int m = static_cast<int>(lcp_.size());
  log2_.assign(m + 1, 0);
  for (int i = 2; i <= m; ++i) log2_[i] = log2_[i / 2] + 1;
  int levels = m > 0 ? log2_[m] + 1 : 0;
  rmq_.assign(levels, {});
  if (m > 0) {
    rmq_[0] = lcp_;
    for (int j = 1; j < levels; ++j) {
      rmq_[j].resize(m - (1 << j) + 1);
      for (int i = 0; i + (1 << j) <= m; ++i)
        rmq_[j][i] = std::min(rmq_[j - 1][i], rmq_[j - 1][i + (1 << (j - 1))]);
    }
  }
}

int SubwordEq::lcp(int i, int j) const {
  if (i == j) return n_ - i;
  int a = rank_[i], b = rank_[j];
  if (a > b) std::swap(a, b);
  int len = b - a;
  int k = log2_[len];
  return std::min(rmq_[k][a], rmq_[k][b - (1 << k)]);
}

bool SubwordEq::eq(int i, int j, int len) const {
  if (i < 0 || j < 0 || len < 0 || i + len > n_ || j + len > n_)
    throw std::invalid_argument("SubwordEq::eq: range out of bounds");
  if (len == 0 || i == j) return true;
  return lcp(i, j) >= len;
}

}  // namespace timecon
