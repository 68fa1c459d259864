#include "dtcodes/average_enumerator.hpp"

#include <mutex>

#include "dtcodes/errors.hpp"
#include "dtcodes/structured_codes.hpp"

namespace dtc {

namespace {

// Rows of Pascal's triangle, grown on demand and shared by all threads.
class PascalCache {
 public:
  BigInt get(int n, int j) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const std::size_t r = rows_.size();
      std::vector<BigInt> row(r + 1, BigInt(1));
      for (std::size_t i = 1; i < r; ++i) row[i] = rows_[r - 1][i - 1] + rows_[r - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

PascalCache& pascal() {
  static PascalCache cache;
  return cache;
}

}  // namespace

BigInt binomial(int n, int j) {
  if (n < 0 || j < 0 || j > n) return BigInt(0);
  return pascal().get(n, j);
}

BigInt average_coefficient(const Field& field, int n, int j) {
  require_even_length(n);
  const auto q = static_cast<unsigned>(field.q());
  if (j < 0 || j > n) return BigInt(0);
  if (j == 0) return ipow(q, static_cast<unsigned>(n - 1));
  const int half = n / 2;
  const BigInt count = j <= half ? binomial(n, j) - binomial(half, j) : binomial(n, j);
  return ipow(q, static_cast<unsigned>(half - 1)) * count * ipow(q - 1, static_cast<unsigned>(j));
}

WeightEnumerator average_weight_enumerator(const Field& field, int n) {
  require_even_length(n);
  WeightEnumerator we;
  we.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) we.coeffs.push_back(average_coefficient(field, n, j));
  return we;
}

WeightEnumerator average_weight_enumerator_bruteforce(const Field& field, int n, const EnumerationBudget& budget) {
  require_even_length(n);
  require_within_budget(field.q(), (n - 1) + n / 2, budget, "average enumerator oracle");
  const TripleSpace space(field, n);
  std::vector<std::uint64_t> sum(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const std::vector<std::uint64_t> counts = weight_distribution(pack_double_toeplitz(space.at(i)));
    for (std::size_t j = 0; j < counts.size(); ++j) sum[j] += counts[j];
  }
  WeightEnumerator we;
  we.coeffs.assign(sum.begin(), sum.end());
  return we;
}

bool existence_bound_holds(const Field& field, int n, int d) {
  require_even_length(n);
  if (d < 1) throw DomainError("distance must be positive, got " + std::to_string(d));
  BigInt low;
  for (int i = 1; i < d && i <= n; ++i) low += average_coefficient(field, n, i);
  const auto q = static_cast<unsigned>(field.q());
  return low < ipow(q, static_cast<unsigned>(n - 1)) * (q - 1);
}

ThresholdResult minimal_guaranteed_length(const Field& field, int d, int horizon) {
  if (d < 1 || d > kMaxThresholdDistance) {
    throw DomainError("distance must lie in [1, " + std::to_string(kMaxThresholdDistance) + "], got " +
                      std::to_string(d));
  }
  if (horizon < 0) throw DomainError("horizon must be nonnegative");
  const int needed = horizon / 2 + 1;  // even lengths in [n, n + horizon]
  std::vector<int> hits;
  int run_start = 0;
  int run = 0;
  for (int n = 2;; n += 2) {
    if (existence_bound_holds(field, n, d)) {
      if (run == 0) run_start = n;
      ++run;
      hits.push_back(n);
      if (run == needed) break;
    } else {
      run = 0;
    }
  }
  ThresholdResult result;
  result.length = run_start;
  for (const int n : hits) {
    if (n < run_start) result.isolated_lengths.push_back(n);
  }
  return result;
}

}  // namespace dtc
