#include "hypermat/symchar.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hypermat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '[';
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
  return os << ']';
}

std::vector<Partition> partitions_of(int d, std::size_t max_rows) {
  if (d < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == max_rows) return;
    for (int part = 1; part <= std::min(remaining, bound); ++part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(d, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int d) { return partitions_of(d, static_cast<std::size_t>(std::max(d, 0))); }

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class centralizer_order(const Partition& cycle_type) {
  mpz_class z = 1;
  std::size_t i = 0;
  const auto& parts = cycle_type.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto multiplicity = static_cast<int>(j - i);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    i = j;
  }
  return z;
}

std::vector<ConjClass> conjugacy_classes(int d) {
  const mpz_class order = factorial(d);
  std::vector<ConjClass> out;
  for (auto& p : partitions_of(d)) {
    mpz_class size = order / centralizer_order(p);
    out.push_back({std::move(p), std::move(size)});
  }
  return out;
}

void SymmetricCharacters::check_degree(int d) const {
  if (d > config_.max_degree) {
    throw std::domain_error("partition size " + std::to_string(d) + " exceeds configured cap " +
                            std::to_string(config_.max_degree));
  }
}

std::int64_t SymmetricCharacters::character_value(const Partition& lam, const Partition& cls) {
  if (lam.size() != cls.size()) throw std::invalid_argument("partition sizes differ");
  check_degree(lam.size());
  return character_rec(lam.parts(), cls.parts());
}

// Border strips are removed on the beta-set (first-column hook lengths): a strip
// of length k corresponds to moving one bead from position b to b - k.
std::int64_t SymmetricCharacters::character_rec(const std::vector<int>& shape, std::span<const int> cls) {
  if (cls.empty()) return shape.empty() ? 1 : 0;

  auto key = std::make_pair(shape, std::vector<int>(cls.begin(), cls.end()));
  {
    std::shared_lock lock(mutex_);
    if (auto it = characters_.find(key); it != characters_.end()) return it->second;
  }

  const int k = cls.front();
  const auto rest = cls.subspan(1);
  const auto n = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < n; ++i) beta[i] = shape[i] + (n - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossed;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller(shape.size());
    for (int j = 0; j < n; ++j) smaller[j] = moved[j] - (n - 1 - j);
    while (!smaller.empty() && smaller.back() == 0) smaller.pop_back();
    const std::int64_t value = character_rec(smaller, rest);
    total += (crossed % 2 == 0) ? value : -value;
  }

  std::unique_lock lock(mutex_);
  characters_.emplace(std::move(key), total);
  return total;
}

std::int64_t SymmetricCharacters::kron_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() || lam.size() != nu.size()) throw std::invalid_argument("partition sizes differ");
  const int d = lam.size();
  check_degree(d);

  std::array<Partition, 3> sorted{lam, mu, nu};
  std::sort(sorted.begin(), sorted.end());
  auto key = std::make_tuple(sorted[0], sorted[1], sorted[2]);

  const std::vector<ConjClass>* classes = nullptr;
  {
    std::shared_lock lock(mutex_);
    if (auto it = kronecker_.find(key); it != kronecker_.end()) return it->second;
    if (auto it = classes_.find(d); it != classes_.end()) classes = &it->second;
  }
  if (classes == nullptr) {
    auto fresh = conjugacy_classes(d);
    std::unique_lock lock(mutex_);
    classes = &classes_.try_emplace(d, std::move(fresh)).first->second;
  }

  mpz_class sum = 0;
  for (const auto& c : *classes) {
    const std::int64_t a = character_value(lam, c.cycle_type);
    if (a == 0) continue;
    const std::int64_t b = character_value(mu, c.cycle_type);
    if (b == 0) continue;
    const std::int64_t e = character_value(nu, c.cycle_type);
    mpz_class term = c.class_size;
    term *= static_cast<long>(a);
    term *= static_cast<long>(b);
    term *= static_cast<long>(e);
    sum += term;
  }
  const mpz_class order = factorial(d);
  if (mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()) == 0) {
    throw std::logic_error("internal invariant violation: character sum not divisible by d!");
  }
  const mpz_class quotient = sum / order;
  if (quotient < 0 || !quotient.fits_slong_p()) {
    throw std::logic_error("internal invariant violation: invariant dimension out of range");
  }
  const std::int64_t value = quotient.get_si();

  std::unique_lock lock(mutex_);
  kronecker_.emplace(std::move(key), value);
  return value;
}

std::size_t SymmetricCharacters::memo_size() const {
  std::shared_lock lock(mutex_);
  return characters_.size();
}

SymmetricCharacters& default_characters() {
  static SymmetricCharacters instance;
  return instance;
}

std::int64_t character_value(const Partition& lam, const Partition& cls) {
  return default_characters().character_value(lam, cls);
}

std::int64_t kron_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu) {
  return default_characters().kron_invariant_dim(lam, mu, nu);
}

std::int64_t schur_dim_gl2(const Weight2& w) {
  if (!is_dominant(w)) throw std::invalid_argument("weight " + to_string(w) + " is not dominant");
  return checked_add(checked_sub(w.a, w.b), 1);
}

Partition to_partition(const Weight2& w) {
  if (w.b < 0 || w.a < w.b) throw std::invalid_argument("weight " + to_string(w) + " is not a partition");
  if (w.a > std::numeric_limits<int>::max()) throw std::overflow_error("partition part too large");
  return Partition({static_cast<int>(w.a), static_cast<int>(w.b)});
}

}  // namespace hypermat
