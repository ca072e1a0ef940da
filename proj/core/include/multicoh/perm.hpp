#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "multicoh/errors.hpp"

namespace multicoh {

/// A finite permutation in one-line notation. images()[j-1] = sigma(j),
/// 1-based, so [2,3,1] sends 1->2, 2->3, 3->1. Degree 0 is the empty
/// permutation. Immutable after construction.
class Perm {
 public:
  Perm() = default;  // degree 0

  /// Throws DegreeMismatch unless the images form a bijection on {1..n}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  /// sigma(j), 1-based.
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }

  std::span<const int> images() const { return images_; }

  bool is_identity() const;

  bool operator==(const Perm& other) const { return images_ == other.images_; }
  bool operator<(const Perm& other) const { return images_ < other.images_; }

  /// Bracketed one-line form, e.g. "[2,3,1]"; "[]" for degree 0.
  std::string str() const;

  /// Inverse of str(). Throws SchemaError on malformed input.
  static Perm parse(const std::string& text);

 private:
  std::vector<int> images_;
};

/// compose(sigma,tau)(j) = sigma(tau(j)). Acting on a list by sigma and then
/// by tau is the same as acting once by compose(sigma,tau).
Perm compose(const Perm& sigma, const Perm& tau);

Perm inverse(const Perm& sigma);

/// The permutation moving consecutive blocks: the source is split into blocks
/// of the given lengths (source order), and block sigma(j) becomes block j of
/// the result. Acting on <X_1,...,X_n> yields <X_{sigma(1)},...,X_{sigma(n)}>.
Perm shuffle_blocks(const Perm& sigma, std::span<const int> lengths);

/// The block permutation sigma<tau_1,...,tau_n>.  Block j of the result is
/// source block sigma(j), permuted internally by tau_j; tau_j carries the
/// degree of result block j, so the source splits into consecutive blocks of
/// lengths deg(tau_{sigma^-1(1)}), ..., deg(tau_{sigma^-1(n)}).  gamma of the
/// associative operad is exactly this operation, and with identity tau's it
/// degenerates to the pure block move of shuffle_blocks.
Perm block(const Perm& sigma, std::span<const Perm> inner);

/// <a>sigma: result[j] = xs[sigma(j)].
template <typename T>
std::vector<T> act_on_list(const Perm& sigma, std::span<const T> xs) {
  if (static_cast<int>(xs.size()) != sigma.degree())
    throw DegreeMismatch("act_on_list: list length " + std::to_string(xs.size()) +
                         " != degree " + std::to_string(sigma.degree()));
  std::vector<T> out;
  out.reserve(xs.size());
  for (int j = 1; j <= sigma.degree(); ++j) out.push_back(xs[static_cast<std::size_t>(sigma(j) - 1)]);
  return out;
}

template <typename T>
std::vector<T> act_on_list(const Perm& sigma, const std::vector<T>& xs) {
  return act_on_list(sigma, std::span<const T>(xs));
}

/// All elements of the symmetric group on n letters, lexicographic by
/// one-line notation; all_perms(0) = {empty}.
const std::vector<Perm>& all_perms(int n);

/// Lexicographic rank of sigma within all_perms(degree).
int perm_rank(const Perm& sigma);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace multicoh
