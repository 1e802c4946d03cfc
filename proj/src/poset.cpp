#include "cusemi/poset.hpp"

namespace cusemi {

FinitePoset::FinitePoset(int n, std::vector<std::pair<int, int>> strict_pairs,
                         std::optional<int> basepoint)
    : n_(n), rel_(static_cast<size_t>(n) * n, 0), basepoint_(basepoint) {
  if (n <= 0) throw std::invalid_argument("FinitePoset: need at least one point");
  for (int i = 0; i < n; ++i) rel_[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : strict_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("FinitePoset: bad pair");
    rel_[static_cast<size_t>(a) * n + b] = 1;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel_[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (rel_[static_cast<size_t>(k) * n + j]) rel_[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j) && leq(j, i))
        throw std::invalid_argument("FinitePoset: relation has a cycle");
  if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= n))
    throw std::invalid_argument("FinitePoset: basepoint out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int m = 0; m < n && cover; ++m)
        if (m != a && m != b && leq(a, m) && leq(m, b)) cover = false;
      if (cover) covers_.push_back({a, b});
    }
  desc_ = "poset(" + std::to_string(n) + ")";
}

FinitePoset FinitePoset::antichain(int n) {
  FinitePoset p(n, {});
  p.desc_ = "antichain(" + std::to_string(n) + ")";
  return p;
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  FinitePoset p(n, pairs);
  p.desc_ = "chain(" + std::to_string(n) + ")";
  return p;
}

FinitePoset FinitePoset::pointed_antichain(int n) {
  FinitePoset p(n + 1, {}, n);
  p.desc_ = "pointed_antichain(" + std::to_string(n) + ")";
  return p;
}

FinitePoset FinitePoset::lambda() {
  FinitePoset p(3, {{0, 2}, {1, 2}});
  p.desc_ = "lambda";
  return p;
}

std::string FinitePoset::describe() const { return desc_; }

}  // namespace cusemi
