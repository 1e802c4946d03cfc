#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusemi {

/// Finite poset given by its full order relation. Points are indices 0..n-1.
/// An optional basepoint marks the coordinate that kernel presentations pin to zero.
class FinitePoset {
 public:
  FinitePoset(int n, std::vector<std::pair<int, int>> strict_pairs,
              std::optional<int> basepoint = std::nullopt);

  static FinitePoset antichain(int n);
  static FinitePoset chain(int n);  // 0 <= 1 <= ... <= n-1
  /// n discrete points plus a basepoint as the last index, all incomparable.
  static FinitePoset pointed_antichain(int n);
  /// Two closed points below one generic point: the smallest connected stand-in
  /// used by the sphere presentation (indices 0,1 below 2).
  static FinitePoset lambda();

  int size() const { return n_; }
  bool leq(int a, int b) const { return rel_[static_cast<size_t>(a) * n_ + b]; }
  std::optional<int> basepoint() const { return basepoint_; }

  /// Covering pairs a < b with nothing strictly between; used for table
  /// monotonicity constraints and dot output.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::string describe() const;

 private:
  int n_;
  std::vector<char> rel_;  // reflexive-transitive closure, row-major
  std::optional<int> basepoint_;
  std::vector<std::pair<int, int>> covers_;
  std::string desc_;
};

}  // namespace cusemi
