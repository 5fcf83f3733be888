#ifndef ASMSHAPE_SIXVERTEX_HPP
#define ASMSHAPE_SIXVERTEX_HPP

#include <vector>

#include "asmshape/asm_matrix.hpp"

namespace asmshape {

enum class HArrow : unsigned char { Left, Right };
enum class VArrow : unsigned char { Up, Down };

// Arrow assignment on the N x N lattice. Horizontal edge (i, e), e = 0..N,
// sits to the left of vertex column e (e = 0 and e = N are external).
// Vertical edge (d, j), d = 0..N, sits above vertex row d (d = 0 top external,
// d = N bottom external). Rows count from the top, columns from the left.
struct SixVertexConfig {
  int n = 0;
  std::vector<HArrow> horizontal;  // n rows x (n+1) edges
  std::vector<VArrow> vertical;    // (n+1) rows x n columns

  SixVertexConfig() = default;
  explicit SixVertexConfig(int size)
      : n(size),
        horizontal(size_t(size) * (size + 1), HArrow::Left),
        vertical(size_t(size + 1) * size, VArrow::Up) {}

  HArrow hedge(int i, int e) const { return horizontal[size_t(i) * (n + 1) + e]; }
  HArrow& hedge(int i, int e) { return horizontal[size_t(i) * (n + 1) + e]; }
  VArrow vedge(int d, int j) const { return vertical[size_t(d) * n + j]; }
  VArrow& vedge(int d, int j) { return vertical[size_t(d) * n + j]; }

  bool operator==(const SixVertexConfig& o) const = default;
};

// The six vertex types in the left-to-right order of the weight table:
// A1 (right/right, up/up), A2 (left/left, down/down), B1 (right/right,
// down/down), B2 (left/left, up/up), C1 (horizontal in, vertical out, ASM
// entry -1), C2 (horizontal out, vertical in, ASM entry +1).
enum class VertexKind : unsigned char { A1, A2, B1, B2, C1, C2 };

struct VertexType {
  VertexKind kind;

  char weight_class() const {
    switch (kind) {
      case VertexKind::A1:
      case VertexKind::A2: return 'a';
      case VertexKind::B1:
      case VertexKind::B2: return 'b';
      default: return 'c';
    }
  }
  int asm_entry() const {
    if (kind == VertexKind::C1) return -1;
    if (kind == VertexKind::C2) return +1;
    return 0;
  }
};

// Classifies vertex (i, j); throws ValidationError with coordinates if the
// ice rule is violated there.
VertexType vertex_type_at(const SixVertexConfig& c, int i, int j);

// Ice rule at every vertex + domain-wall boundary (horizontal external arrows
// outward, vertical external arrows inward).
void validate_config(const SixVertexConfig& c);

SixVertexConfig asm_to_sixvertex(const Asm& m);
Asm sixvertex_to_asm(const SixVertexConfig& c);

}  // namespace asmshape

#endif
