#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "hypermat/weights.hpp"

namespace hypermat {

/// A weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped; anything else out of order is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }
  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct ConjClass {
  Partition cycle_type;
  mpz_class class_size;
};

/// All partitions of d in lexicographically increasing order: (1^d) first, (d) last.
std::vector<Partition> partitions_of(int d);

/// Partitions of d with at most `max_rows` parts, same order as partitions_of.
std::vector<Partition> partitions_of(int d, std::size_t max_rows);

/// z(mu) = prod_i i^{m_i} m_i!
mpz_class centralizer_order(const Partition& cycle_type);

/// Conjugacy classes of the symmetric group on d letters, in the order of partitions_of(d).
std::vector<ConjClass> conjugacy_classes(int d);

mpz_class factorial(int n);

/// Irreducible characters of symmetric groups by the Murnaghan-Nakayama rule.
///
/// Values are memoized on (shape, remaining cycle type). The tables are guarded
/// by a shared mutex, so one instance may be queried from several threads.
class SymmetricCharacters {
 public:
  struct Config {
    int max_degree = 16;
  };

  SymmetricCharacters() : SymmetricCharacters(Config{}) {}
  explicit SymmetricCharacters(Config config) : config_(config) {}

  SymmetricCharacters(const SymmetricCharacters&) = delete;
  SymmetricCharacters& operator=(const SymmetricCharacters&) = delete;

  int max_degree() const { return config_.max_degree; }

  /// chi_lam evaluated at the class of cycle type `cls`.
  std::int64_t character_value(const Partition& lam, const Partition& cls);

  /// dim ([lam] (x) [mu] (x) [nu])^{S_d}, i.e. the Kronecker coefficient g(lam, mu, nu).
  std::int64_t kron_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu);

  std::size_t memo_size() const;

 private:
  std::int64_t character_rec(const std::vector<int>& shape, std::span<const int> cls);
  void check_degree(int d) const;

  Config config_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> characters_;
  std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> kronecker_;
  std::map<int, std::vector<ConjClass>> classes_;
};

/// Process-wide instance used by the free functions below.
SymmetricCharacters& default_characters();

std::int64_t character_value(const Partition& lam, const Partition& cls);
std::int64_t kron_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu);

/// Weyl dimension of S_{(a,b)} of GL_2: a - b + 1. Throws for non-dominant input.
std::int64_t schur_dim_gl2(const Weight2& w);

/// (a, b) with a >= b >= 0 as a partition with at most two parts.
Partition to_partition(const Weight2& w);

}  // namespace hypermat
