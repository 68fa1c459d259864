#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtcodes/bigint.hpp"
#include "dtcodes/linear_code.hpp"

namespace dtc {

/// Column j of the source goes to column perm[j] after multiplication by scales[j].
struct MonomialMap {
  std::vector<int> perm;
  std::vector<Element> scales;

  static MonomialMap identity(int n);
};

/// x -> xP with (xP)_{perm[j]} = scales[j] * x_j. Throws DomainError on a
/// length mismatch, a non-bijective perm or a zero scale.
FqVector apply_monomial(const FqVector& x, const MonomialMap& map);
GeneratorCode apply_monomial(const GeneratorCode& code, const MonomialMap& map);

/// Entrywise x -> x^2. Only nontrivial over F4.
FqVector frobenius(const FqVector& x);
GeneratorCode frobenius(const GeneratorCode& code);

/// True iff both generate the same set of codewords.
bool same_code(const GeneratorCode& x, const GeneratorCode& y);

/// Monomial-invariant fingerprint used to rule out equivalence cheaply.
struct CodeSignature {
  int n = 0;
  int k = 0;
  std::vector<BigInt> enumerator;
  /// Smallest weight w such that the codewords of weight <= w span the code.
  int spanning_weight = 0;
  /// Per column, the number of minimum-weight codewords (up to scalars) that
  /// are nonzero there; sorted.
  std::vector<std::uint64_t> column_profile;
  /// Hash of the sorted support-intersection profiles of the spanning set.
  std::uint64_t intersection_hash = 0;

  friend bool operator==(const CodeSignature&, const CodeSignature&) = default;
  friend auto operator<=>(const CodeSignature& x, const CodeSignature& y) {
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (auto c = x.k <=> y.k; c != 0) return c;
    if (x.enumerator != y.enumerator) return x.enumerator < y.enumerator ? std::strong_ordering::less
                                                                         : std::strong_ordering::greater;
    if (auto c = x.spanning_weight <=> y.spanning_weight; c != 0) return c;
    if (auto c = x.column_profile <=> y.column_profile; c != 0) return c;
    return x.intersection_hash <=> y.intersection_hash;
  }
};

/// Needs k >= 1 and q^k within the budget.
CodeSignature signature(const GeneratorCode& code, const EnumerationBudget& budget = {});

enum class EquivalenceMode {
  monomial,
  /// Diagnostic only: also allows the Frobenius automorphism of F4.
  semimonomial,
};

struct EquivalenceOptions {
  EquivalenceMode mode = EquivalenceMode::monomial;
  std::uint64_t node_cap = 100'000'000;
  EnumerationBudget budget;
};

struct EquivalenceWitness {
  MonomialMap map;
  /// Set when the map applies to the Frobenius image of the first code.
  bool frobenius = false;
};

/// A map taking the first code onto the second, or nullopt when none exists.
/// Throws Undecided when the node cap is hit and BudgetExceeded when the
/// codes are too large to enumerate.
std::optional<EquivalenceWitness> find_equivalence(const GeneratorCode& x, const GeneratorCode& y,
                                                   const EquivalenceOptions& options = {});

bool are_equivalent(const GeneratorCode& x, const GeneratorCode& y, const EquivalenceOptions& options = {});

/// Same as find_equivalence with precomputed signatures.
std::optional<EquivalenceWitness> find_equivalence(const GeneratorCode& x, const CodeSignature& sx,
                                                   const GeneratorCode& y, const CodeSignature& sy,
                                                   const EquivalenceOptions& options = {});

/// Partitions codes into equivalence classes. Classes are ordered by their
/// first member and list member indices in increasing order, so the first
/// member of each class is its representative. The result does not depend
/// on the number of workers.
std::vector<std::vector<std::size_t>> dedupe_into_classes(const std::vector<GeneratorCode>& codes,
                                                          const EquivalenceOptions& options = {},
                                                          int workers = 1);

}  // namespace dtc
