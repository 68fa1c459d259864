#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dtcodes/bigint.hpp"
#include "dtcodes/linear_code.hpp"

namespace dtc {

/// Square matrix stored as its rows.
using Matrix = std::vector<FqVector>;

/// Parameters (t, a, b) of the m x m Toeplitz matrix with diagonal t,
/// entries a_1..a_{m-1} above the diagonal and b_1..b_{m-1} below it.
class ToeplitzTriple {
 public:
  /// The 1 x 1 zero matrix over F2.
  ToeplitzTriple() : field_(&Field::of(2)) {}
  ToeplitzTriple(const Field& field, Element t, FqVector a, FqVector b);

  const Field& field() const { return *field_; }
  int block_size() const { return a_.size() + 1; }
  Element t() const { return t_; }
  const FqVector& a() const { return a_; }
  const FqVector& b() const { return b_; }

  /// (alpha t, alpha a, alpha b)
  ToeplitzTriple scaled(Element alpha) const;
  /// (t, b, a)
  ToeplitzTriple swapped() const;

  friend bool operator==(const ToeplitzTriple& x, const ToeplitzTriple& y) {
    return x.field_->q() == y.field_->q() && x.t_ == y.t_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  const Field* field_;
  Element t_;
  FqVector a_;
  FqVector b_;
};

enum class Sign { circulant, negacirculant };

/// First row r of a circulant (mu = +1) or negacirculant (mu = -1) matrix.
struct CirculantSpec {
  FqVector r;
  Sign sign = Sign::circulant;

  const Field& field() const { return r.field(); }
  int block_size() const { return r.size(); }
};

enum class TripleKind { circulant, negacirculant, both, neither };

std::string to_string(TripleKind kind);

Matrix toeplitz_matrix(const ToeplitzTriple& triple);
Matrix circulant_matrix(const CirculantSpec& spec);

/// Generator (I_m | T(t, a, b)).
GeneratorCode double_toeplitz_code(const ToeplitzTriple& triple);
/// Requires spec.sign == Sign::circulant.
GeneratorCode double_circulant_code(const CirculantSpec& spec);
/// Requires spec.sign == Sign::negacirculant.
GeneratorCode double_negacirculant_code(const CirculantSpec& spec);
/// Either of the two above, by sign.
GeneratorCode double_code(const CirculantSpec& spec);

/// Packed (I | T) without building a GeneratorCode.
PackedCode pack_double_toeplitz(const ToeplitzTriple& triple);

ToeplitzTriple triple_of_circulant(const CirculantSpec& spec);
TripleKind classify_triple(const ToeplitzTriple& triple);

/// (u, v) lies in the double Toeplitz code iff A^T u^T = v^T.
bool contains_vector(const ToeplitzTriple& triple, const FqVector& u, const FqVector& v);

/// Closed-form number of double Toeplitz [n, n/2] codes containing (u, v).
BigInt count_codes_containing(const Field& field, int n, const FqVector& u, const FqVector& v);
/// Same count obtained by testing every triple.
BigInt count_codes_containing_bruteforce(const Field& field, int n, const FqVector& u, const FqVector& v,
                                         const EnumerationBudget& budget = {});

/// Throws DomainError unless n is even and at least 2.
void require_even_length(int n);

/// Enumerates the q^(n-1) triples for length n in lexicographic order of
/// the digit string (t, a_1..a_{m-1}, b_1..b_{m-1}): t slowest, b fastest.
/// Partition p groups the q^(m-1) triples sharing the (t, a) prefix p.
class TripleSpace {
 public:
  TripleSpace(const Field& field, int n);

  const Field& field() const { return *field_; }
  int length() const { return 2 * m_; }
  int block_size() const { return m_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t partition_count() const { return size_ / partition_size_; }
  std::uint64_t partition_size() const { return partition_size_; }

  ToeplitzTriple at(std::uint64_t index) const;
  std::uint64_t index_of(const ToeplitzTriple& triple) const;

 private:
  const Field* field_;
  int m_;
  std::uint64_t size_;
  std::uint64_t partition_size_;
};

/// "t;a;b", e.g. "0;(1,1,0,1,0);(1,1,1,0,0)".
std::string render_triple(const ToeplitzTriple& triple);
ToeplitzTriple parse_triple(const Field& field, std::string_view text);

/// "C:(r)" or "N:(r)".
std::string render_circulant(const CirculantSpec& spec);
CirculantSpec parse_circulant(const Field& field, std::string_view text);

}  // namespace dtc
