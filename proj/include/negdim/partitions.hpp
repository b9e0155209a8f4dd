#pragma once

// Young diagrams, transposition, dominance order and the run-length
// (Maya-like) block parametrization.

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace negdim {

class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts) : parts_(std::move(parts)) {  // NOLINT(google-explicit-constructor)
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "3,2,2,1"; "" or "0" is the empty diagram.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("Partition: bad part '" + item + "'");
      }
      if (used != item.size() || v < 0) throw std::invalid_argument("Partition: bad part '" + item + "'");
      parts.push_back(v);
    }
    return Partition(parts);
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// λ_i with 1-based index; zero past the end.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  /// Parts padded with zeros to exactly n entries.
  std::vector<int> padded(int n) const {
    if (n < length()) throw std::invalid_argument("Partition: more parts than the requested length");
    std::vector<int> out = parts_;
    out.resize(n, 0);
    return out;
  }

  std::string str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on parts (a linear extension of dominance).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline Partition transpose(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return {};
  for (int j = 1; j <= lambda[1]; ++j) {
    int c = 0;
    for (int p : lambda.parts()) c += p >= j ? 1 : 0;
    out.push_back(c);
  }
  return Partition(out);
}

/// Partial-sum comparison; requires equal weights.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw std::invalid_argument("dominance_leq: unequal weights");
  int sm = 0, sl = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu[i];
    sl += lambda[i];
    if (sm > sl) return false;
  }
  return true;
}

/// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) return {Partition()};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All partitions with weight 0..max_weight, by weight then decreasing lex.
inline std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& p : partitions_of(w)) out.push_back(std::move(p));
  return out;
}

/// Run-length encoding of rows (a) and columns (b) with prefix sums A, B.
/// A[0] = B[0] = 0; A.back() is the number of rows and B.back() the first row.
struct BlockParam {
  std::vector<int> a, b;
  std::vector<int> A, B;

  int blocks() const { return static_cast<int>(a.size()); }
  std::string str() const {
    auto list = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    return "{a:" + list(a) + ", b:" + list(b) + ", A:" + list(A) + ", B:" + list(B) + "}";
  }
  friend bool operator==(const BlockParam&, const BlockParam&) = default;
};

namespace detail {
inline std::vector<int> runs(const std::vector<int>& v) {
  std::vector<int> r;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    r.push_back(static_cast<int>(j - i));
    i = j;
  }
  return r;
}
inline std::vector<int> prefix(const std::vector<int>& v) {
  std::vector<int> p{0};
  for (int x : v) p.push_back(p.back() + x);
  return p;
}
}  // namespace detail

inline BlockParam block_param(const Partition& lambda) {
  BlockParam bp;
  bp.a = detail::runs(lambda.parts());
  // Columns of equal height, left to right, are the runs of λ'.
  bp.b = detail::runs(transpose(lambda).parts());
  bp.A = detail::prefix(bp.a);
  bp.B = detail::prefix(bp.b);
  if (bp.a.size() != bp.b.size()) throw std::logic_error("block_param: row and column run counts differ");
  return bp;
}

/// Rebuilds λ: the rows in the a-th run (top to bottom) have width B[k-a+1].
inline Partition from_block_param(const BlockParam& bp) {
  std::vector<int> parts;
  int k = bp.blocks();
  for (int i = 1; i <= k; ++i)
    for (int r = 0; r < bp.a[i - 1]; ++r) parts.push_back(bp.B[k - i + 1]);
  return Partition(parts);
}

inline bool block_transpose_swap(const Partition& lambda) {
  BlockParam x = block_param(lambda), y = block_param(transpose(lambda));
  return x.A == y.B && x.B == y.A && x.a == y.b && x.b == y.a;
}

inline Partition rectangle(int cols, int rows) {
  if (cols <= 0 || rows <= 0) throw std::invalid_argument("rectangle: sides must be positive");
  return Partition(std::vector<int>(rows, cols));
}

}  // namespace negdim
