#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtcodes/bigint.hpp"
#include "dtcodes/finite_field.hpp"
#include "dtcodes/packed.hpp"

namespace dtc {

/// A vector over F_q.
class FqVector {
 public:
  FqVector() : field_(&Field::of(2)) {}
  FqVector(const Field& field, std::vector<Element> elems);
  FqVector(const Field& field, std::initializer_list<int> codes);

  static FqVector zeros(const Field& field, int length);
  static FqVector unit(const Field& field, int length, int position);

  const Field& field() const { return *field_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  Element operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
  void set(int i, Element x) { elems_[static_cast<std::size_t>(i)] = x; }
  const std::vector<Element>& elements() const { return elems_; }

  bool is_zero() const;

  friend bool operator==(const FqVector& x, const FqVector& y) {
    return x.field_->q() == y.field_->q() && x.elems_ == y.elems_;
  }

 private:
  const Field* field_;
  std::vector<Element> elems_;
};

/// Number of nonzero coordinates.
int weight(const FqVector& x);

FqVector operator+(const FqVector& x, const FqVector& y);
FqVector operator*(Element s, const FqVector& x);
/// Standard inner product.
Element dot(const FqVector& x, const FqVector& y);

/// "(1,w,0,v)". An empty vector renders as "()".
std::string render_vector(const FqVector& x);
/// Accepts "(1,w,0)" with optional whitespace; parentheses are required.
FqVector parse_vector(const Field& field, std::string_view text);

Word pack(const FqVector& x);
FqVector unpack(const Field& field, const Word& w, int length);

/// Exact weight distribution: coeffs[j] counts the weight-j terms.
struct WeightEnumerator {
  std::vector<BigInt> coeffs;

  int length() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt total() const;
  /// JSON array of decimal strings.
  std::string to_json() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Upper bound on the number of messages q^k an operation may enumerate.
struct EnumerationBudget {
  std::uint64_t max_messages = std::uint64_t{1} << 26;
};

/// Throws BudgetExceeded if q^k > budget.max_messages.
void require_within_budget(int q, int k, const EnumerationBudget& budget, std::string_view what);

/// An [n, k] code given by k linearly independent rows.
class GeneratorCode {
 public:
  /// Throws DomainError if a row has the wrong length or the rows are dependent.
  GeneratorCode(const Field& field, int length, std::vector<FqVector> rows);

  const Field& field() const { return *field_; }
  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<FqVector>& rows() const { return rows_; }

  /// Reduced row-echelon form of the generator matrix and its pivot columns.
  const std::vector<FqVector>& echelon_rows() const { return echelon_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// m * G. Throws DomainError on length mismatch.
  FqVector encode(const FqVector& message) const;
  bool contains(const FqVector& x) const;

  bool has_packed() const { return packed_.has_value(); }
  /// Throws BudgetExceeded when n exceeds kMaxPackedLength.
  const PackedCode& packed() const;

  /// One row per line, columns comma-separated.
  std::string to_text() const;
  static GeneratorCode parse(const Field& field, std::string_view text);

 private:
  const Field* field_;
  int n_;
  std::vector<FqVector> rows_;
  std::vector<FqVector> echelon_;
  std::vector<int> pivots_;
  std::optional<PackedCode> packed_;
};

/// Reduced row-echelon form of a list of equal-length vectors; dependent rows are dropped.
/// pivots receives the pivot column of each returned row.
std::vector<FqVector> row_reduce(const Field& field, std::vector<FqVector> rows, std::vector<int>& pivots);

int rank(const Field& field, const std::vector<FqVector>& rows);

/// Packs a GeneratorCode-free (I | A) presentation directly; used by hot search loops.
PackedCode pack_systematic(const Field& field, const std::vector<FqVector>& right_block);

WeightEnumerator weight_enumerator(const GeneratorCode& code, const EnumerationBudget& budget = {});
int minimum_weight(const GeneratorCode& code, const EnumerationBudget& budget = {});
bool min_weight_at_least(const GeneratorCode& code, int d, const EnumerationBudget& budget = {});
GeneratorCode dual_code(const GeneratorCode& code);
bool is_formally_self_dual(const GeneratorCode& code, const EnumerationBudget& budget = {});

// Packed-level kernels. They perform no budget checks.

/// Raw weight distribution, odometer order over message digits.
std::vector<std::uint64_t> weight_distribution(const PackedCode& code);
/// Exact minimum weight; k must be at least 1.
int minimum_weight(const PackedCode& code);
/// Stops at the first nonzero codeword of weight below d.
bool min_weight_at_least(const PackedCode& code, int d);
/// All nonzero codewords of weight <= max_weight. With projective set only
/// the multiple whose first nonzero coordinate is 1 is reported.
std::vector<Word> codewords_up_to_weight(const PackedCode& code, int max_weight, bool projective);

}  // namespace dtc
