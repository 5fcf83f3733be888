#include "asmshape/sixvertex.hpp"

#include <string>

namespace asmshape {

namespace {

std::string coords(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

VertexType vertex_type_at(const SixVertexConfig& c, int i, int j) {
  const bool left_in = c.hedge(i, j) == HArrow::Right;       // edge left of vertex
  const bool right_in = c.hedge(i, j + 1) == HArrow::Left;   // edge right of vertex
  const bool top_in = c.vedge(i, j) == VArrow::Down;         // edge above
  const bool bottom_in = c.vedge(i + 1, j) == VArrow::Up;    // edge below
  const int in = int(left_in) + int(right_in) + int(top_in) + int(bottom_in);
  if (in != 2) {
    throw ValidationError("ice rule violated at vertex " + coords(i, j) + ": " +
                          std::to_string(in) + " incoming arrows");
  }
  if (left_in && right_in) return {VertexKind::C1};
  if (top_in && bottom_in) return {VertexKind::C2};
  // Straight-through types: both horizontal arrows agree, both vertical agree.
  if (left_in && bottom_in) return {VertexKind::A1};  // right/right, up/up
  if (left_in) return {VertexKind::B1};               // right/right, down/down
  if (top_in) return {VertexKind::A2};                // left/left, down/down
  return {VertexKind::B2};                            // left/left, up/up
}

void validate_config(const SixVertexConfig& c) {
  if (c.n < 1) throw ValidationError("lattice dimension must be positive");
  for (int i = 0; i < c.n; ++i) {
    if (c.hedge(i, 0) != HArrow::Left) {
      throw ValidationError("DWBC violated: left external edge of row " +
                            std::to_string(i) + " must point left");
    }
    if (c.hedge(i, c.n) != HArrow::Right) {
      throw ValidationError("DWBC violated: right external edge of row " +
                            std::to_string(i) + " must point right");
    }
  }
  for (int j = 0; j < c.n; ++j) {
    if (c.vedge(0, j) != VArrow::Down) {
      throw ValidationError("DWBC violated: top external edge of column " +
                            std::to_string(j) + " must point down");
    }
    if (c.vedge(c.n, j) != VArrow::Up) {
      throw ValidationError("DWBC violated: bottom external edge of column " +
                            std::to_string(j) + " must point up");
    }
  }
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) vertex_type_at(c, i, j);
}

SixVertexConfig asm_to_sixvertex(const Asm& m) {
  validate_asm(m);
  const int n = m.n;
  SixVertexConfig c(n);
  // Horizontal arrow right iff the row prefix sum is 1, left iff 0.
  for (int i = 0; i < n; ++i) {
    int prefix = 0;
    c.hedge(i, 0) = HArrow::Left;
    for (int j = 0; j < n; ++j) {
      prefix += m.at(i, j);
      c.hedge(i, j + 1) = prefix == 1 ? HArrow::Right : HArrow::Left;
    }
  }
  // Vertical arrow up iff the column prefix sum is 1, down iff 0.
  for (int j = 0; j < n; ++j) {
    int prefix = 0;
    c.vedge(0, j) = VArrow::Down;
    for (int i = 0; i < n; ++i) {
      prefix += m.at(i, j);
      c.vedge(i + 1, j) = prefix == 1 ? VArrow::Up : VArrow::Down;
    }
  }
  return c;
}

Asm sixvertex_to_asm(const SixVertexConfig& c) {
  validate_config(c);
  Asm m(c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      m.at(i, j) = static_cast<signed char>(vertex_type_at(c, i, j).asm_entry());
  validate_asm(m);
  return m;
}

}  // namespace asmshape
