#include "helicity/numerics.hpp"

namespace helicity {

BlockMat4View BlockMat4View::of(const ComplexMat4& m) {
  BlockMat4View v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      v.tl(i, j) = m(i, j);
      v.tr(i, j) = m(i, j + 2);
      v.bl(i, j) = m(i + 2, j);
      v.br(i, j) = m(i + 2, j + 2);
    }
  return v;
}

ComplexMat4 BlockMat4View::recompose() const { return from_blocks(tl, tr, bl, br); }

ComplexMat4 from_blocks(const ComplexMat2& tl, const ComplexMat2& tr,
                        const ComplexMat2& bl, const ComplexMat2& br) {
  ComplexMat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = tl(i, j);
      m(i, j + 2) = tr(i, j);
      m(i + 2, j) = bl(i, j);
      m(i + 2, j + 2) = br(i, j);
    }
  return m;
}

ComplexMat2 block_partial_trace(const ComplexMat4& m) {
  const auto blocks = BlockMat4View::of(m);
  return blocks.tl + blocks.br;
}

}  // namespace helicity
