#include "dtcodes/linear_code.hpp"

#include <algorithm>
#include <sstream>

#include "dtcodes/errors.hpp"
#include "text_util.hpp"

namespace dtc {

// ---------------------------------------------------------------------------
// FqVector

FqVector::FqVector(const Field& field, std::vector<Element> elems) : field_(&field), elems_(std::move(elems)) {
  for (const Element x : elems_) {
    if (x.code >= field.q()) {
      throw DomainError("element code " + std::to_string(x.code) + " out of range for " + field.name());
    }
  }
}

FqVector::FqVector(const Field& field, std::initializer_list<int> codes) : field_(&field) {
  elems_.reserve(codes.size());
  for (const int c : codes) elems_.push_back(field.element(c));
}

FqVector FqVector::zeros(const Field& field, int length) {
  return FqVector(field, std::vector<Element>(static_cast<std::size_t>(length), kZero));
}

FqVector FqVector::unit(const Field& field, int length, int position) {
  FqVector e = zeros(field, length);
  e.set(position, kOne);
  return e;
}

bool FqVector::is_zero() const {
  return std::all_of(elems_.begin(), elems_.end(), [](Element x) { return x.is_zero(); });
}

int weight(const FqVector& x) {
  return static_cast<int>(
      std::count_if(x.elements().begin(), x.elements().end(), [](Element e) { return !e.is_zero(); }));
}

FqVector operator+(const FqVector& x, const FqVector& y) {
  if (x.size() != y.size()) throw DomainError("vector length mismatch in addition");
  const Field& f = x.field();
  std::vector<Element> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = f.add(x[i], y[i]);
  return FqVector(f, std::move(out));
}

FqVector operator*(Element s, const FqVector& x) {
  const Field& f = x.field();
  std::vector<Element> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = f.mul(s, x[i]);
  return FqVector(f, std::move(out));
}

Element dot(const FqVector& x, const FqVector& y) {
  if (x.size() != y.size()) throw DomainError("vector length mismatch in inner product");
  const Field& f = x.field();
  Element acc = kZero;
  for (int i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

std::string render_vector(const FqVector& x) {
  std::string out = "(";
  for (int i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += x.field().render(x[i]);
  }
  out += ')';
  return out;
}

FqVector parse_vector(const Field& field, std::string_view text) {
  const std::string_view body = detail::trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw ParseError("expected a parenthesized vector such as (1,0,1), got '" + std::string(text) + "'");
  }
  const std::string_view inner = detail::trim(body.substr(1, body.size() - 2));
  std::vector<Element> elems;
  if (!inner.empty()) {
    for (const std::string_view token : detail::split(inner, ',')) elems.push_back(field.parse(detail::trim(token)));
  }
  return FqVector(field, std::move(elems));
}

Word pack(const FqVector& x) {
  if (x.size() > kMaxPackedLength) {
    throw BudgetExceeded("vector length " + std::to_string(x.size()) + " exceeds the packed limit of " +
                         std::to_string(kMaxPackedLength));
  }
  Word w;
  for (int j = 0; j < x.size(); ++j) set_value(w, j, x[j]);
  return w;
}

FqVector unpack(const Field& field, const Word& w, int length) {
  std::vector<Element> out(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) out[static_cast<std::size_t>(j)] = value_at(w, j);
  return FqVector(field, std::move(out));
}

// ---------------------------------------------------------------------------
// WeightEnumerator

BigInt WeightEnumerator::total() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs) sum += c;
  return sum;
}

std::string WeightEnumerator::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + to_decimal(coeffs[i]) + '"';
  }
  out += ']';
  return out;
}

void require_within_budget(int q, int k, const EnumerationBudget& budget, std::string_view what) {
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget.max_messages / static_cast<std::uint64_t>(q)) {
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(k) +
                           " messages exceed the enumeration limit of " + std::to_string(budget.max_messages));
    }
    total *= static_cast<std::uint64_t>(q);
  }
  if (total > budget.max_messages) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(k) +
                         " messages exceed the enumeration limit of " + std::to_string(budget.max_messages));
  }
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<FqVector> row_reduce(const Field& field, std::vector<FqVector> rows, std::vector<int>& pivots) {
  pivots.clear();
  if (rows.empty()) return rows;
  const int n = rows.front().size();
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    rows[r] = field.inv(rows[r][col]) * rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      rows[i] = rows[i] + field.neg(rows[i][col]) * rows[r];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank(const Field& field, const std::vector<FqVector>& rows) {
  std::vector<int> pivots;
  return static_cast<int>(row_reduce(field, rows, pivots).size());
}

// ---------------------------------------------------------------------------
// GeneratorCode

GeneratorCode::GeneratorCode(const Field& field, int length, std::vector<FqVector> rows)
    : field_(&field), n_(length), rows_(std::move(rows)) {
  if (length <= 0) throw DomainError("code length must be positive");
  for (const FqVector& row : rows_) {
    if (row.size() != length) {
      throw DomainError("generator row of length " + std::to_string(row.size()) + " in a code of length " +
                        std::to_string(length));
    }
    if (row.field().q() != field.q()) throw DomainError("generator row over the wrong field");
  }
  echelon_ = row_reduce(field, rows_, pivots_);
  if (echelon_.size() != rows_.size()) {
    throw DomainError("generator rows are linearly dependent (rank " + std::to_string(echelon_.size()) + " < " +
                      std::to_string(rows_.size()) + ")");
  }
  if (n_ <= kMaxPackedLength) {
    PackedCode p;
    p.q = field.q();
    p.n = n_;
    p.k = dimension();
    p.pivots = pivots_;
    for (const FqVector& row : echelon_) p.rows.push_back(pack(row));
    p.build_multiples();
    packed_ = std::move(p);
  }
}

const PackedCode& GeneratorCode::packed() const {
  if (!packed_) {
    throw BudgetExceeded("code length " + std::to_string(n_) + " exceeds the enumeration limit of " +
                         std::to_string(kMaxPackedLength) + " columns");
  }
  return *packed_;
}

FqVector GeneratorCode::encode(const FqVector& message) const {
  if (message.size() != dimension()) {
    throw DomainError("message length " + std::to_string(message.size()) + " does not match dimension " +
                      std::to_string(dimension()));
  }
  FqVector c = FqVector::zeros(*field_, n_);
  for (int i = 0; i < dimension(); ++i) {
    if (!message[i].is_zero()) c = c + message[i] * rows_[static_cast<std::size_t>(i)];
  }
  return c;
}

bool GeneratorCode::contains(const FqVector& x) const {
  if (x.size() != n_) return false;
  FqVector residual = x;
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const Element coeff = residual[pivots_[i]];
    if (!coeff.is_zero()) residual = residual + field_->neg(coeff) * echelon_[i];
  }
  return residual.is_zero();
}

std::string GeneratorCode::to_text() const {
  std::string out;
  for (const FqVector& row : rows_) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ',';
      out += field_->render(row[j]);
    }
    out += '\n';
  }
  return out;
}

GeneratorCode GeneratorCode::parse(const Field& field, std::string_view text) {
  std::vector<FqVector> rows;
  int length = -1;
  for (std::string_view line : detail::split(text, '\n')) {
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '(' && line.back() == ')') line = line.substr(1, line.size() - 2);
    std::vector<Element> elems;
    for (const std::string_view token : detail::split(line, ',')) elems.push_back(field.parse(detail::trim(token)));
    if (length >= 0 && static_cast<int>(elems.size()) != length) {
      throw ParseError("generator matrix rows have different lengths");
    }
    length = static_cast<int>(elems.size());
    rows.emplace_back(field, std::move(elems));
  }
  if (rows.empty()) throw ParseError("generator matrix text has no rows");
  return GeneratorCode(field, length, std::move(rows));
}

PackedCode pack_systematic(const Field& field, const std::vector<FqVector>& right_block) {
  PackedCode p;
  p.q = field.q();
  p.k = static_cast<int>(right_block.size());
  p.n = p.k + (right_block.empty() ? 0 : right_block.front().size());
  if (p.n > kMaxPackedLength) throw BudgetExceeded("code length exceeds the packed limit");
  p.rows.resize(static_cast<std::size_t>(p.k));
  p.pivots.resize(static_cast<std::size_t>(p.k));
  for (int i = 0; i < p.k; ++i) {
    Word& w = p.rows[static_cast<std::size_t>(i)];
    set_value(w, i, kOne);
    const FqVector& a = right_block[static_cast<std::size_t>(i)];
    for (int j = 0; j < a.size(); ++j) set_value(w, p.k + j, a[j]);
    p.pivots[static_cast<std::size_t>(i)] = i;
  }
  p.build_multiples();
  return p;
}

// ---------------------------------------------------------------------------
// Enumeration kernels

namespace {

template <int Q>
std::vector<std::uint64_t> weight_distribution_impl(const PackedCode& code) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n) + 1, 0);
  counts[0] = 1;
  const int k = code.k;
  if (k == 0) return counts;
  const Field& f = Field::of(Q);

  // step[i][x] is added when message digit i moves from code x to code (x + 1) mod q.
  std::vector<std::array<Word, 4>> step(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < Q; ++x) {
      const Element delta = f.sub(f.element((x + 1) % Q), f.element(x));
      step[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] =
          code.multiples[static_cast<std::size_t>(i)][delta.code];
    }
  }

  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= Q;

  std::vector<std::uint8_t> digits(static_cast<std::size_t>(k), 0);
  Word acc;
  for (std::uint64_t m = 1; m < total; ++m) {
    std::size_t i = 0;
    while (digits[i] == Q - 1) {
      acc = add<Q>(acc, step[i][Q - 1]);
      digits[i] = 0;
      ++i;
    }
    acc = add<Q>(acc, step[i][digits[i]]);
    ++digits[i];
    ++counts[static_cast<std::size_t>(weight(acc))];
  }
  return counts;
}

// Depth-first enumeration of messages by increasing support. The first
// nonzero message coefficient is fixed to 1, so every projective point is
// visited exactly once. A message of weight w yields a codeword of weight
// at least w, which bounds how deep each search has to go.
template <int Q>
struct MinimumWeightSearch {
  const PackedCode& code;
  int best;

  void run(int start, const Word& acc, int depth) {
    for (int i = start; i < code.k; ++i) {
      const auto& mult = code.multiples[static_cast<std::size_t>(i)];
      for (int s = 1; s < (depth == 0 ? 2 : Q); ++s) {
        const Word w = add<Q>(acc, mult[static_cast<std::size_t>(s)]);
        const int wt = weight(w);
        if (wt < best) best = wt;
        if (depth + 2 < best) run(i + 1, w, depth + 1);
      }
    }
  }
};

template <int Q>
struct LowWeightProbe {
  const PackedCode& code;
  int d;

  // Returns false as soon as a nonzero codeword of weight < d shows up.
  bool run(int start, const Word& acc, int depth) const {
    for (int i = start; i < code.k; ++i) {
      const auto& mult = code.multiples[static_cast<std::size_t>(i)];
      for (int s = 1; s < (depth == 0 ? 2 : Q); ++s) {
        const Word w = add<Q>(acc, mult[static_cast<std::size_t>(s)]);
        if (weight(w) < d) return false;
        if (depth + 2 < d && !run(i + 1, w, depth + 1)) return false;
      }
    }
    return true;
  }
};

template <int Q>
struct LowWeightCollector {
  const PackedCode& code;
  int max_weight;
  std::vector<Word>& out;

  void run(int start, const Word& acc, int depth) {
    for (int i = start; i < code.k; ++i) {
      const auto& mult = code.multiples[static_cast<std::size_t>(i)];
      for (int s = 1; s < (depth == 0 ? 2 : Q); ++s) {
        const Word w = add<Q>(acc, mult[static_cast<std::size_t>(s)]);
        if (weight(w) <= max_weight) out.push_back(w);
        if (depth + 2 <= max_weight) run(i + 1, w, depth + 1);
      }
    }
  }
};

template <template <int> class Kernel, typename... Args>
auto dispatch(int q, Args&&... args) {
  switch (q) {
    case 3:
      return Kernel<3>::call(std::forward<Args>(args)...);
    case 4:
      return Kernel<4>::call(std::forward<Args>(args)...);
    default:
      return Kernel<2>::call(std::forward<Args>(args)...);
  }
}

template <int Q>
struct DistributionKernel {
  static std::vector<std::uint64_t> call(const PackedCode& c) { return weight_distribution_impl<Q>(c); }
};

template <int Q>
struct MinimumKernel {
  static int call(const PackedCode& c) {
    MinimumWeightSearch<Q> s{c, c.n + 1};
    s.run(0, Word{}, 0);
    return s.best;
  }
};

template <int Q>
struct ProbeKernel {
  static bool call(const PackedCode& c, int d) { return LowWeightProbe<Q>{c, d}.run(0, Word{}, 0); }
};

template <int Q>
struct CollectKernel {
  static std::vector<Word> call(const PackedCode& c, int max_weight) {
    std::vector<Word> out;
    LowWeightCollector<Q>{c, max_weight, out}.run(0, Word{}, 0);
    return out;
  }
};

}  // namespace

std::vector<std::uint64_t> weight_distribution(const PackedCode& code) {
  return dispatch<DistributionKernel>(code.q, code);
}

int minimum_weight(const PackedCode& code) {
  if (code.k == 0) throw DomainError("minimum weight of the zero code is undefined");
  return dispatch<MinimumKernel>(code.q, code);
}

bool min_weight_at_least(const PackedCode& code, int d) {
  if (d <= 1 || code.k == 0) return true;
  return dispatch<ProbeKernel>(code.q, code, d);
}

std::vector<Word> codewords_up_to_weight(const PackedCode& code, int max_weight, bool projective) {
  std::vector<Word> found = dispatch<CollectKernel>(code.q, code, max_weight);
  for (Word& w : found) w = normalize(code.q, w);
  if (projective || code.q == 2) return found;
  const Field& f = Field::of(code.q);
  std::vector<Word> all;
  all.reserve(found.size() * static_cast<std::size_t>(code.q - 1));
  for (const Word& w : found) {
    for (const Element s : f.nonzero()) all.push_back(scale(code.q, w, s));
  }
  return all;
}

// ---------------------------------------------------------------------------
// Code-level operations

WeightEnumerator weight_enumerator(const GeneratorCode& code, const EnumerationBudget& budget) {
  require_within_budget(code.field().q(), code.dimension(), budget, "weight enumerator");
  const std::vector<std::uint64_t> counts = weight_distribution(code.packed());
  WeightEnumerator we;
  we.coeffs.assign(counts.begin(), counts.end());
  return we;
}

int minimum_weight(const GeneratorCode& code, const EnumerationBudget& budget) {
  if (code.dimension() == 0) throw DomainError("minimum weight of the zero code is undefined");
  require_within_budget(code.field().q(), code.dimension(), budget, "minimum weight");
  return minimum_weight(code.packed());
}

bool min_weight_at_least(const GeneratorCode& code, int d, const EnumerationBudget& budget) {
  if (d < 1) throw DomainError("weight threshold must be positive");
  if (d == 1) return true;
  require_within_budget(code.field().q(), code.dimension(), budget, "minimum weight");
  return min_weight_at_least(code.packed(), d);
}

GeneratorCode dual_code(const GeneratorCode& code) {
  const Field& f = code.field();
  const int n = code.length();
  const std::vector<int>& pivots = code.pivots();
  const std::vector<FqVector>& echelon = code.echelon_rows();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (const int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<FqVector> rows;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    FqVector y = FqVector::unit(f, n, c);
    for (std::size_t i = 0; i < pivots.size(); ++i) y.set(pivots[i], f.neg(echelon[i][c]));
    rows.push_back(std::move(y));
  }
  return GeneratorCode(f, n, std::move(rows));
}

bool is_formally_self_dual(const GeneratorCode& code, const EnumerationBudget& budget) {
  const GeneratorCode dual = dual_code(code);
  require_within_budget(code.field().q(), dual.dimension(), budget, "dual weight enumerator");
  return weight_enumerator(code, budget) == weight_enumerator(dual, budget);
}

}  // namespace dtc
