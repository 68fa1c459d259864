#include "dtcodes/packed.hpp"

namespace dtc {

Word add(int q, const Word& x, const Word& y) {
  return q == 3 ? add<3>(x, y) : add<2>(x, y);
}

Word scale(int q, const Word& x, Element s) {
  switch (q) {
    case 3:
      return scale<3>(x, s);
    case 4:
      return scale<4>(x, s);
    default:
      return s.is_zero() ? Word{} : x;
  }
}

Word scale_columns(int q, const Word& x, const std::vector<Element>& scales) {
  const Field& f = Field::of(q);
  Word out;
  for (int j = 0; j < static_cast<int>(scales.size()); ++j) {
    const Element v = value_at(x, j);
    if (!v.is_zero()) set_value(out, j, f.mul(scales[static_cast<std::size_t>(j)], v));
  }
  return out;
}

Word normalize(int q, const Word& x) {
  const std::uint64_t s = support(x);
  if (s == 0 || q == 2) return x;
  const Element lead = value_at(x, std::countr_zero(s));
  if (lead.code == 1) return x;
  return scale(q, x, Field::of(q).inv(lead));
}

void PackedCode::build_multiples() {
  const Field& f = Field::of(q);
  multiples.assign(rows.size(), {});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int s = 0; s < q; ++s) multiples[i][static_cast<std::size_t>(s)] = scale(q, rows[i], f.element(s));
  }
}

}  // namespace dtc
