#include "dtcodes/structured_codes.hpp"

#include "dtcodes/errors.hpp"
#include "text_util.hpp"

namespace dtc {

ToeplitzTriple::ToeplitzTriple(const Field& field, Element t, FqVector a, FqVector b)
    : field_(&field), t_(t), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) {
    throw DomainError("Toeplitz bands differ in length (" + std::to_string(a_.size()) + " vs " +
                      std::to_string(b_.size()) + ")");
  }
  if (t.code >= field.q()) throw DomainError("diagonal element out of range for " + field.name());
  if ((!a_.empty() && a_.field().q() != field.q()) || (!b_.empty() && b_.field().q() != field.q())) {
    throw DomainError("Toeplitz bands over the wrong field");
  }
}

ToeplitzTriple ToeplitzTriple::scaled(Element alpha) const {
  return ToeplitzTriple(*field_, field_->mul(alpha, t_), alpha * a_, alpha * b_);
}

ToeplitzTriple ToeplitzTriple::swapped() const { return ToeplitzTriple(*field_, t_, b_, a_); }

std::string to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::circulant:
      return "circulant";
    case TripleKind::negacirculant:
      return "negacirculant";
    case TripleKind::both:
      return "both";
    case TripleKind::neither:
      break;
  }
  return "neither";
}

void require_even_length(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("length must be even and at least 2, got " + std::to_string(n));
}

Matrix toeplitz_matrix(const ToeplitzTriple& triple) {
  const Field& f = triple.field();
  const int m = triple.block_size();
  Matrix rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<Element> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        row[static_cast<std::size_t>(j)] = triple.t();
      } else if (j > i) {
        row[static_cast<std::size_t>(j)] = triple.a()[j - i - 1];
      } else {
        row[static_cast<std::size_t>(j)] = triple.b()[i - j - 1];
      }
    }
    rows.emplace_back(f, std::move(row));
  }
  return rows;
}

Matrix circulant_matrix(const CirculantSpec& spec) {
  const Field& f = spec.field();
  const int m = spec.block_size();
  const Element mu = spec.sign == Sign::circulant ? kOne : f.neg(kOne);
  Matrix rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<Element> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      row[static_cast<std::size_t>(j)] = j >= i ? spec.r[j - i] : f.mul(mu, spec.r[m + j - i]);
    }
    rows.emplace_back(f, std::move(row));
  }
  return rows;
}

namespace {

GeneratorCode systematic_code(const Field& f, const Matrix& right) {
  const int m = static_cast<int>(right.size());
  std::vector<FqVector> rows;
  rows.reserve(right.size());
  for (int i = 0; i < m; ++i) {
    std::vector<Element> row(static_cast<std::size_t>(2 * m), kZero);
    row[static_cast<std::size_t>(i)] = kOne;
    for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(m + j)] = right[static_cast<std::size_t>(i)][j];
    rows.emplace_back(f, std::move(row));
  }
  return GeneratorCode(f, 2 * m, std::move(rows));
}

}  // namespace

GeneratorCode double_toeplitz_code(const ToeplitzTriple& triple) {
  return systematic_code(triple.field(), toeplitz_matrix(triple));
}

GeneratorCode double_circulant_code(const CirculantSpec& spec) {
  if (spec.sign != Sign::circulant) throw DomainError("double circulant code needs a circulant spec");
  if (spec.r.empty()) throw DomainError("first row must be nonempty");
  return systematic_code(spec.field(), circulant_matrix(spec));
}

GeneratorCode double_negacirculant_code(const CirculantSpec& spec) {
  if (spec.sign != Sign::negacirculant) throw DomainError("double negacirculant code needs a negacirculant spec");
  if (spec.r.empty()) throw DomainError("first row must be nonempty");
  return systematic_code(spec.field(), circulant_matrix(spec));
}

GeneratorCode double_code(const CirculantSpec& spec) {
  return spec.sign == Sign::circulant ? double_circulant_code(spec) : double_negacirculant_code(spec);
}

PackedCode pack_double_toeplitz(const ToeplitzTriple& triple) {
  return pack_systematic(triple.field(), toeplitz_matrix(triple));
}

ToeplitzTriple triple_of_circulant(const CirculantSpec& spec) {
  const Field& f = spec.field();
  const int m = spec.block_size();
  if (m < 1) throw DomainError("first row must be nonempty");
  const Element mu = spec.sign == Sign::circulant ? kOne : f.neg(kOne);
  std::vector<Element> a(static_cast<std::size_t>(m - 1));
  std::vector<Element> b(static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) {
    a[static_cast<std::size_t>(i - 1)] = spec.r[i];
    b[static_cast<std::size_t>(i - 1)] = f.mul(mu, spec.r[m - i]);
  }
  return ToeplitzTriple(f, spec.r[0], FqVector(f, std::move(a)), FqVector(f, std::move(b)));
}

TripleKind classify_triple(const ToeplitzTriple& triple) {
  const Field& f = triple.field();
  const int m = triple.block_size();
  bool circulant = true;
  bool negacirculant = true;
  for (int i = 1; i < m; ++i) {
    const Element ai = triple.a()[i - 1];
    const Element bmi = triple.b()[m - i - 1];
    if (ai != bmi) circulant = false;
    if (ai != f.neg(bmi)) negacirculant = false;
  }
  if (circulant && negacirculant) return TripleKind::both;
  if (circulant) return TripleKind::circulant;
  if (negacirculant) return TripleKind::negacirculant;
  return TripleKind::neither;
}

bool contains_vector(const ToeplitzTriple& triple, const FqVector& u, const FqVector& v) {
  const int m = triple.block_size();
  if (u.size() != m || v.size() != m) {
    throw DomainError("vectors must have length " + std::to_string(m) + " to test membership");
  }
  const Field& f = triple.field();
  const Matrix a = toeplitz_matrix(triple);
  // Row j of A^T is column j of A.
  for (int j = 0; j < m; ++j) {
    Element acc = kZero;
    for (int i = 0; i < m; ++i) acc = f.add(acc, f.mul(a[static_cast<std::size_t>(i)][j], u[i]));
    if (acc != v[j]) return false;
  }
  return true;
}

namespace {

void require_block_vectors(int n, const FqVector& u, const FqVector& v) {
  require_even_length(n);
  if (u.size() != n / 2 || v.size() != n / 2) {
    throw DomainError("u and v must have length n/2 = " + std::to_string(n / 2));
  }
}

}  // namespace

BigInt count_codes_containing(const Field& field, int n, const FqVector& u, const FqVector& v) {
  require_block_vectors(n, u, v);
  const auto q = static_cast<unsigned>(field.q());
  if (weight(u) == 0) return weight(v) == 0 ? ipow(q, static_cast<unsigned>(n - 1)) : BigInt(0);
  return ipow(q, static_cast<unsigned>(n / 2 - 1));
}

BigInt count_codes_containing_bruteforce(const Field& field, int n, const FqVector& u, const FqVector& v,
                                         const EnumerationBudget& budget) {
  require_block_vectors(n, u, v);
  require_within_budget(field.q(), n - 1, budget, "triple enumeration");
  const TripleSpace space(field, n);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (contains_vector(space.at(i), u, v)) ++count;
  }
  return BigInt(count);
}

// ---------------------------------------------------------------------------
// TripleSpace

TripleSpace::TripleSpace(const Field& field, int n) : field_(&field), m_(n / 2) {
  require_even_length(n);
  const int digits = 2 * m_ - 1;
  const int bits_per_digit = field.q() == 2 ? 1 : 2;
  if (digits * bits_per_digit > 62) {
    throw BudgetExceeded("triple space for q=" + std::to_string(field.q()) + ", n=" + std::to_string(n) +
                         " is too large to index");
  }
  size_ = 1;
  for (int i = 0; i < digits; ++i) size_ *= static_cast<std::uint64_t>(field.q());
  partition_size_ = 1;
  for (int i = 0; i < m_ - 1; ++i) partition_size_ *= static_cast<std::uint64_t>(field.q());
}

ToeplitzTriple TripleSpace::at(std::uint64_t index) const {
  const auto q = static_cast<std::uint64_t>(field_->q());
  std::vector<Element> a(static_cast<std::size_t>(m_ - 1));
  std::vector<Element> b(static_cast<std::size_t>(m_ - 1));
  for (int i = m_ - 2; i >= 0; --i) {
    b[static_cast<std::size_t>(i)] = Element{static_cast<std::uint8_t>(index % q)};
    index /= q;
  }
  for (int i = m_ - 2; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = Element{static_cast<std::uint8_t>(index % q)};
    index /= q;
  }
  const Element t{static_cast<std::uint8_t>(index)};
  return ToeplitzTriple(*field_, t, FqVector(*field_, std::move(a)), FqVector(*field_, std::move(b)));
}

std::uint64_t TripleSpace::index_of(const ToeplitzTriple& triple) const {
  if (triple.block_size() != m_ || triple.field().q() != field_->q()) {
    throw DomainError("triple does not belong to this triple space");
  }
  const auto q = static_cast<std::uint64_t>(field_->q());
  std::uint64_t index = triple.t().code;
  for (int i = 0; i < m_ - 1; ++i) index = index * q + triple.a()[i].code;
  for (int i = 0; i < m_ - 1; ++i) index = index * q + triple.b()[i].code;
  return index;
}

// ---------------------------------------------------------------------------
// Text forms

std::string render_triple(const ToeplitzTriple& triple) {
  return triple.field().render(triple.t()) + ";" + render_vector(triple.a()) + ";" + render_vector(triple.b());
}

ToeplitzTriple parse_triple(const Field& field, std::string_view text) {
  const std::vector<std::string_view> parts = detail::split(text, ';');
  if (parts.size() != 3) {
    throw ParseError("expected a triple of the form t;(a);(b), got '" + std::string(text) + "'");
  }
  const Element t = field.parse(detail::trim(parts[0]));
  FqVector a = parse_vector(field, parts[1]);
  FqVector b = parse_vector(field, parts[2]);
  if (a.size() != b.size()) {
    throw ParseError("triple bands differ in length in '" + std::string(text) + "'");
  }
  return ToeplitzTriple(field, t, std::move(a), std::move(b));
}

std::string render_circulant(const CirculantSpec& spec) {
  return std::string(spec.sign == Sign::circulant ? "C:" : "N:") + render_vector(spec.r);
}

CirculantSpec parse_circulant(const Field& field, std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.size() < 2 || s[1] != ':' || (s[0] != 'C' && s[0] != 'N')) {
    throw ParseError("expected C:(r) or N:(r), got '" + std::string(text) + "'");
  }
  CirculantSpec spec{parse_vector(field, s.substr(2)), s[0] == 'C' ? Sign::circulant : Sign::negacirculant};
  if (spec.r.empty()) throw ParseError("first row must be nonempty in '" + std::string(text) + "'");
  return spec;
}

}  // namespace dtc
