#ifndef ASMSHAPE_ASM_MATRIX_HPP
#define ASMSHAPE_ASM_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace asmshape {

// Structured validation failure, carries the offending location in the message.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class BoundError : public std::runtime_error {
 public:
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// N x N matrix over {-1, 0, +1}. Rows are indexed from the top, columns from
// the left, both 0-based in code; "position r from the right" used throughout
// the probabilistic layer means column index n - r.
struct Asm {
  int n = 0;
  std::vector<signed char> entries;  // row-major, n*n

  Asm() = default;
  explicit Asm(int size) : n(size), entries(size_t(size) * size_t(size), 0) {}

  signed char at(int i, int j) const { return entries[size_t(i) * n + j]; }
  signed char& at(int i, int j) { return entries[size_t(i) * n + j]; }

  bool operator==(const Asm& o) const = default;
};

// Number of -1 entries (the q-enumeration exponent).
int minus_count(const Asm& m);

// Throws ValidationError naming the offending row or column.
void validate_asm(const Asm& m);
bool is_valid_asm(const Asm& m);

}  // namespace asmshape

#endif
