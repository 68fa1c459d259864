#pragma once

#include <vector>

#include "dtcodes/bigint.hpp"
#include "dtcodes/finite_field.hpp"
#include "dtcodes/linear_code.hpp"

namespace dtc {

/// C(n, j) in arbitrary precision; zero when j < 0 or j > n.
BigInt binomial(int n, int j);

/// Coefficient of y^j in the sum of W_C(y) over all double Toeplitz [n, n/2]
/// codes over the given field, from the closed form.
BigInt average_coefficient(const Field& field, int n, int j);

/// All n + 1 coefficients of the closed form. Throws DomainError for odd n.
WeightEnumerator average_weight_enumerator(const Field& field, int n);

/// The same sum obtained by enumerating every code. Needs q^(3n/2 - 1)
/// codeword visits within the budget.
WeightEnumerator average_weight_enumerator_bruteforce(const Field& field, int n,
                                                      const EnumerationBudget& budget = {});

/// True iff psi_1 + ... + psi_{d-1} < q^(n-1) (q - 1), which guarantees a
/// double Toeplitz [n, n/2] code of minimum weight at least d.
bool existence_bound_holds(const Field& field, int n, int d);

inline constexpr int kThresholdHorizon = 200;
inline constexpr int kMaxThresholdDistance = 50;

struct ThresholdResult {
  /// Smallest even n such that the bound holds at every even length in [n, n + horizon].
  int length = 0;
  /// Even lengths below `length` where the bound holds anyway. Nonempty means
  /// the indicator is not monotone in n.
  std::vector<int> isolated_lengths;
};

/// Throws DomainError unless 1 <= d <= kMaxThresholdDistance.
ThresholdResult minimal_guaranteed_length(const Field& field, int d, int horizon = kThresholdHorizon);

}  // namespace dtc
