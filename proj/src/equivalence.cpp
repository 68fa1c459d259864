#include "dtcodes/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dtcodes/errors.hpp"
#include "parallel.hpp"

namespace dtc {

MonomialMap MonomialMap::identity(int n) {
  MonomialMap m;
  m.perm.resize(static_cast<std::size_t>(n));
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.scales.assign(static_cast<std::size_t>(n), kOne);
  return m;
}

namespace {

void check_map(const MonomialMap& map, int n) {
  if (static_cast<int>(map.perm.size()) != n || static_cast<int>(map.scales.size()) != n) {
    throw DomainError("monomial map has length " + std::to_string(map.perm.size()) + ", expected " +
                      std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    const int p = map.perm[static_cast<std::size_t>(j)];
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw DomainError("monomial map is not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
    if (map.scales[static_cast<std::size_t>(j)].is_zero()) throw DomainError("monomial map has a zero scale");
  }
}

Element frobenius(Element x) {
  if (x.code == 2) return Element{3};
  if (x.code == 3) return Element{2};
  return x;
}

// (b0 + b1 w)^2 = (b0 + b1) + b1 w
Word frobenius(const Word& x) { return Word{x.lo ^ x.hi, x.hi}; }

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

int rank_of_words(int q, int n, const std::vector<Word>& words) {
  const Field& f = Field::of(q);
  std::vector<FqVector> rows;
  rows.reserve(words.size());
  for (const Word& w : words) rows.push_back(unpack(f, w, n));
  return rank(f, rows);
}

struct TestSet {
  int weight_limit = 0;
  int minimum = 0;
  std::vector<Word> projective;
};

// Codewords of the smallest weights that together span the code.
TestSet spanning_test_set(const GeneratorCode& code) {
  const PackedCode& packed = code.packed();
  TestSet ts;
  ts.minimum = minimum_weight(packed);
  for (int w = ts.minimum; w <= code.length(); ++w) {
    ts.projective = codewords_up_to_weight(packed, w, true);
    if (rank_of_words(packed.q, packed.n, ts.projective) == code.dimension()) {
      ts.weight_limit = w;
      break;
    }
  }
  std::sort(ts.projective.begin(), ts.projective.end());
  return ts;
}

std::vector<Word> all_multiples(int q, const std::vector<Word>& projective) {
  if (q == 2) return projective;
  const Field& f = Field::of(q);
  std::vector<Word> out;
  out.reserve(projective.size() * static_cast<std::size_t>(q - 1));
  for (const Word& w : projective) {
    for (const Element s : f.nonzero()) out.push_back(scale(q, w, s));
  }
  return out;
}

CodeSignature signature_with(const GeneratorCode& code, const TestSet& ts, const EnumerationBudget& budget) {
  CodeSignature sig;
  sig.n = code.length();
  sig.k = code.dimension();
  sig.enumerator = weight_enumerator(code, budget).coeffs;
  sig.spanning_weight = ts.weight_limit;

  sig.column_profile.assign(static_cast<std::size_t>(sig.n), 0);
  for (const Word& w : ts.projective) {
    if (weight(w) != ts.minimum) continue;
    const std::uint64_t s = support(w);
    for (int j = 0; j < sig.n; ++j) {
      if ((s >> j) & 1U) ++sig.column_profile[static_cast<std::size_t>(j)];
    }
  }
  std::sort(sig.column_profile.begin(), sig.column_profile.end());

  std::vector<std::vector<int>> profiles;
  profiles.reserve(ts.projective.size());
  for (const Word& x : ts.projective) {
    std::vector<int> p;
    p.reserve(ts.projective.size() + 1);
    const std::uint64_t sx = support(x);
    for (const Word& y : ts.projective) p.push_back(std::popcount(sx & support(y)));
    std::sort(p.begin(), p.end());
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  std::uint64_t h = 0;
  for (const auto& p : profiles) {
    h = mix(h, p.size());
    for (const int v : p) h = mix(h, static_cast<std::uint64_t>(v));
  }
  sig.intersection_hash = h;
  return sig;
}

// Backtracking over column assignments. The two test sets are kept as
// aligned partitions: a cell pairs the words of the first set with the words
// of the second that agree with them on every column assigned so far.
class Matcher {
 public:
  Matcher(const GeneratorCode& source, const GeneratorCode& target, std::vector<Word> w1, std::vector<Word> w2,
          std::uint64_t node_cap, std::uint64_t& nodes)
      : source_(source),
        target_(target),
        q_(source.field().q()),
        n_(source.length()),
        w1_(std::move(w1)),
        w2_(std::move(w2)),
        node_cap_(node_cap),
        nodes_(nodes) {}

  std::optional<MonomialMap> run() {
    if (w1_.size() != w2_.size()) return std::nullopt;
    State s;
    s.a1.resize(w1_.size());
    s.a2.resize(w2_.size());
    std::iota(s.a1.begin(), s.a1.end(), 0);
    std::iota(s.a2.begin(), s.a2.end(), 0);
    auto by_weight = [](const std::vector<Word>& w) {
      return [&w](int x, int y) { return weight(w[static_cast<std::size_t>(x)]) < weight(w[static_cast<std::size_t>(y)]); };
    };
    std::stable_sort(s.a1.begin(), s.a1.end(), by_weight(w1_));
    std::stable_sort(s.a2.begin(), s.a2.end(), by_weight(w2_));
    for (std::size_t i = 0; i < s.a1.size(); ++i) {
      const int x = weight(w1_[static_cast<std::size_t>(s.a1[i])]);
      if (x != weight(w2_[static_cast<std::size_t>(s.a2[i])])) return std::nullopt;
      if (i + 1 == s.a1.size() || weight(w1_[static_cast<std::size_t>(s.a1[i + 1])]) != x) {
        s.cell_end.push_back(static_cast<int>(i + 1));
      }
    }
    map_ = MonomialMap{std::vector<int>(static_cast<std::size_t>(n_), -1),
                       std::vector<Element>(static_cast<std::size_t>(n_), kZero)};
    used_.assign(static_cast<std::size_t>(n_), false);
    if (search(s, 0)) return map_;
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<int> a1;
    std::vector<int> a2;
    std::vector<int> cell_end;
  };

  struct Candidate {
    int column;
    Element scale;
  };

  Element relabel(const Word& w, int column, Element inv_scale) const {
    return Field::of(q_).mul(inv_scale, value_at(w, column));
  }

  bool feasible(const State& s, int j, int j2, Element inv_scale) const {
    int begin = 0;
    for (const int end : s.cell_end) {
      std::array<int, 4> count{};
      for (int i = begin; i < end; ++i) {
        ++count[value_at(w1_[static_cast<std::size_t>(s.a1[static_cast<std::size_t>(i)])], j).code];
        --count[relabel(w2_[static_cast<std::size_t>(s.a2[static_cast<std::size_t>(i)])], j2, inv_scale).code];
      }
      for (const int c : count) {
        if (c != 0) return false;
      }
      begin = end;
    }
    return true;
  }

  State split(const State& s, int j, int j2, Element inv_scale) const {
    State out;
    out.a1.reserve(s.a1.size());
    out.a2.reserve(s.a2.size());
    int begin = 0;
    for (const int end : s.cell_end) {
      for (int v = 0; v < q_; ++v) {
        bool any = false;
        for (int i = begin; i < end; ++i) {
          const int x = s.a1[static_cast<std::size_t>(i)];
          if (value_at(w1_[static_cast<std::size_t>(x)], j).code == v) {
            out.a1.push_back(x);
            any = true;
          }
        }
        for (int i = begin; i < end; ++i) {
          const int y = s.a2[static_cast<std::size_t>(i)];
          if (relabel(w2_[static_cast<std::size_t>(y)], j2, inv_scale).code == v) out.a2.push_back(y);
        }
        if (any) out.cell_end.push_back(static_cast<int>(out.a1.size()));
      }
      begin = end;
    }
    return out;
  }

  bool search(const State& s, int assigned) {
    if (++nodes_ > node_cap_) throw Undecided("equivalence search exceeded " + std::to_string(node_cap_) + " nodes");
    if (assigned == n_) return verify();

    const Field& f = Field::of(q_);
    int best_column = -1;
    std::vector<Candidate> best;
    for (int j = 0; j < n_; ++j) {
      if (map_.perm[static_cast<std::size_t>(j)] >= 0) continue;
      std::vector<Candidate> cands;
      for (int j2 = 0; j2 < n_; ++j2) {
        if (used_[static_cast<std::size_t>(j2)]) continue;
        for (const Element lambda : f.nonzero()) {
          if (assigned == 0 && lambda != kOne) continue;
          if (feasible(s, j, j2, f.inv(lambda))) cands.push_back({j2, lambda});
        }
      }
      if (cands.empty()) return false;
      if (best_column < 0 || cands.size() < best.size()) {
        best_column = j;
        best = std::move(cands);
      }
    }

    for (const Candidate& c : best) {
      map_.perm[static_cast<std::size_t>(best_column)] = c.column;
      map_.scales[static_cast<std::size_t>(best_column)] = c.scale;
      used_[static_cast<std::size_t>(c.column)] = true;
      if (search(split(s, best_column, c.column, f.inv(c.scale)), assigned + 1)) return true;
      used_[static_cast<std::size_t>(c.column)] = false;
    }
    map_.perm[static_cast<std::size_t>(best_column)] = -1;
    map_.scales[static_cast<std::size_t>(best_column)] = kZero;
    return false;
  }

  bool verify() const {
    for (const FqVector& row : source_.rows()) {
      if (!target_.contains(apply_monomial(row, map_))) return false;
    }
    return true;
  }

  const GeneratorCode& source_;
  const GeneratorCode& target_;
  int q_;
  int n_;
  std::vector<Word> w1_;
  std::vector<Word> w2_;
  std::uint64_t node_cap_;
  std::uint64_t& nodes_;
  MonomialMap map_;
  std::vector<bool> used_;
};

void require_comparable(const GeneratorCode& x, const GeneratorCode& y) {
  if (x.field().q() != y.field().q() || x.length() != y.length() || x.dimension() != y.dimension()) {
    throw DomainError("equivalence needs codes with the same field, length and dimension");
  }
  if (x.dimension() == 0) throw DomainError("equivalence of zero codes is not supported");
}

std::optional<EquivalenceWitness> match(const GeneratorCode& x, const TestSet& tx, const GeneratorCode& y,
                                        const TestSet& ty, const EquivalenceOptions& options) {
  const int q = x.field().q();
  const std::vector<Word> w2 = all_multiples(q, ty.projective);
  std::uint64_t nodes = 0;
  {
    Matcher m(x, y, all_multiples(q, tx.projective), w2, options.node_cap, nodes);
    if (auto map = m.run()) return EquivalenceWitness{std::move(*map), false};
  }
  if (options.mode == EquivalenceMode::semimonomial && q == 4) {
    const GeneratorCode fx = frobenius(x);
    std::vector<Word> w1;
    for (const Word& w : tx.projective) w1.push_back(frobenius(w));
    Matcher m(fx, y, all_multiples(q, w1), w2, options.node_cap, nodes);
    if (auto map = m.run()) return EquivalenceWitness{std::move(*map), true};
  }
  return std::nullopt;
}

}  // namespace

FqVector apply_monomial(const FqVector& x, const MonomialMap& map) {
  const int n = x.size();
  check_map(map, n);
  const Field& f = x.field();
  std::vector<Element> out(static_cast<std::size_t>(n), kZero);
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(map.perm[static_cast<std::size_t>(j)])] =
        f.mul(map.scales[static_cast<std::size_t>(j)], x[j]);
  }
  return FqVector(f, std::move(out));
}

GeneratorCode apply_monomial(const GeneratorCode& code, const MonomialMap& map) {
  check_map(map, code.length());
  std::vector<FqVector> rows;
  rows.reserve(code.rows().size());
  for (const FqVector& r : code.rows()) rows.push_back(apply_monomial(r, map));
  return GeneratorCode(code.field(), code.length(), std::move(rows));
}

FqVector frobenius(const FqVector& x) {
  std::vector<Element> out = x.elements();
  if (x.field().q() == 4) {
    for (Element& e : out) e = frobenius(e);
  }
  return FqVector(x.field(), std::move(out));
}

GeneratorCode frobenius(const GeneratorCode& code) {
  std::vector<FqVector> rows;
  rows.reserve(code.rows().size());
  for (const FqVector& r : code.rows()) rows.push_back(frobenius(r));
  return GeneratorCode(code.field(), code.length(), std::move(rows));
}

bool same_code(const GeneratorCode& x, const GeneratorCode& y) {
  if (x.field().q() != y.field().q() || x.length() != y.length() || x.dimension() != y.dimension()) return false;
  return std::all_of(x.rows().begin(), x.rows().end(), [&](const FqVector& r) { return y.contains(r); });
}

CodeSignature signature(const GeneratorCode& code, const EnumerationBudget& budget) {
  if (code.dimension() == 0) throw DomainError("signature of the zero code is undefined");
  require_within_budget(code.field().q(), code.dimension(), budget, "code signature");
  return signature_with(code, spanning_test_set(code), budget);
}

std::optional<EquivalenceWitness> find_equivalence(const GeneratorCode& x, const CodeSignature& sx,
                                                   const GeneratorCode& y, const CodeSignature& sy,
                                                   const EquivalenceOptions& options) {
  require_comparable(x, y);
  // Frobenius preserves every component of the signature, so the pre-filter
  // stays valid in the semimonomial mode.
  if (!(sx == sy)) return std::nullopt;
  require_within_budget(x.field().q(), x.dimension(), options.budget, "equivalence test");
  auto witness = match(x, spanning_test_set(x), y, spanning_test_set(y), options);
  if (witness && sx.enumerator != sy.enumerator) {
    throw Error("internal error: equivalent codes with different weight enumerators");
  }
  return witness;
}

std::optional<EquivalenceWitness> find_equivalence(const GeneratorCode& x, const GeneratorCode& y,
                                                   const EquivalenceOptions& options) {
  require_comparable(x, y);
  return find_equivalence(x, signature(x, options.budget), y, signature(y, options.budget), options);
}

bool are_equivalent(const GeneratorCode& x, const GeneratorCode& y, const EquivalenceOptions& options) {
  return find_equivalence(x, y, options).has_value();
}

std::vector<std::vector<std::size_t>> dedupe_into_classes(const std::vector<GeneratorCode>& codes,
                                                          const EquivalenceOptions& options, int workers) {
  if (codes.empty()) return {};
  for (const GeneratorCode& c : codes) require_comparable(codes.front(), c);

  std::vector<CodeSignature> sigs(codes.size());
  std::vector<TestSet> tests(codes.size());
  detail::parallel_for(codes.size(), workers, [&](std::uint64_t i) {
    require_within_budget(codes[i].field().q(), codes[i].dimension(), options.budget, "code signature");
    tests[i] = spanning_test_set(codes[i]);
    sigs[i] = signature_with(codes[i], tests[i], options.budget);
  });

  // Buckets of equal signature, in order of first appearance.
  std::map<CodeSignature, std::size_t> bucket_of;
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto [it, inserted] = bucket_of.try_emplace(sigs[i], buckets.size());
    if (inserted) buckets.emplace_back();
    buckets[it->second].push_back(i);
  }

  std::vector<std::vector<std::vector<std::size_t>>> per_bucket(buckets.size());
  detail::parallel_for(buckets.size(), workers, [&](std::uint64_t b) {
    auto& classes = per_bucket[b];
    for (const std::size_t i : buckets[b]) {
      bool placed = false;
      for (auto& cls : classes) {
        const std::size_t rep = cls.front();
        if (match(codes[rep], tests[rep], codes[i], tests[i], options)) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
  });

  std::vector<std::vector<std::size_t>> out;
  for (auto& classes : per_bucket) {
    for (auto& cls : classes) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace dtc
