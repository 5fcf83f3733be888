#include "asmshape/asm_matrix.hpp"

namespace asmshape {

int minus_count(const Asm& m) {
  int k = 0;
  for (signed char e : m.entries) k += (e == -1);
  return k;
}

namespace {

// Checks one line (row or column) for the alternating-sign structure:
// nonzero entries alternate, first and last nonzero are +1 (hence sum 1).
void check_line(const Asm& m, bool row, int idx) {
  int expected = +1;  // next nonzero must have this sign
  int nonzeros = 0;
  for (int k = 0; k < m.n; ++k) {
    int e = row ? m.at(idx, k) : m.at(k, idx);
    if (e < -1 || e > 1) {
      throw ValidationError((row ? "row " : "column ") + std::to_string(idx) +
                            ": entry out of {-1,0,1}");
    }
    if (e == 0) continue;
    ++nonzeros;
    if (e != expected) {
      throw ValidationError((row ? "row " : "column ") + std::to_string(idx) +
                            ": sign alternation violated at index " + std::to_string(k));
    }
    expected = -expected;
  }
  // last nonzero must be +1 <=> an odd count of alternating entries
  if (nonzeros % 2 == 0) {
    throw ValidationError((row ? "row " : "column ") + std::to_string(idx) +
                          (nonzeros == 0 ? ": no nonzero entry" : ": last nonzero entry is -1"));
  }
}

}  // namespace

void validate_asm(const Asm& m) {
  if (m.n < 1) throw ValidationError("matrix dimension must be positive");
  if (m.entries.size() != size_t(m.n) * size_t(m.n)) {
    throw ValidationError("entry storage does not match dimension");
  }
  for (int i = 0; i < m.n; ++i) check_line(m, true, i);
  for (int j = 0; j < m.n; ++j) check_line(m, false, j);
}

bool is_valid_asm(const Asm& m) {
  try {
    validate_asm(m);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace asmshape
