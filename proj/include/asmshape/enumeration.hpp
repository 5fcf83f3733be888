#ifndef ASMSHAPE_ENUMERATION_HPP
#define ASMSHAPE_ENUMERATION_HPP

#include <functional>
#include <vector>

#include "asmshape/asm_matrix.hpp"
#include "asmshape/rational.hpp"

namespace asmshape {

// Above this size full enumeration is refused rather than left to crawl;
// raise explicitly (CLI: env ASM_MAX_N) if you know what you are doing.
inline constexpr int kDefaultMaxN = 8;

// Visits every ASM of size n exactly once, in lexicographic order of the
// row-by-row column-partial-sum masks (monotone-triangle backtracking).
void enumerate_asms(int n, const std::function<void(const Asm&)>& visit,
                    int max_n = kDefaultMaxN);

std::vector<Asm> all_asms(int n, int max_n = kDefaultMaxN);

// Sum over ASMs of q^(number of -1 entries).
Rational weighted_count(int n, const Rational& q, int max_n = kDefaultMaxN);

// Identical to weighted_count; the physical partition function differs only
// by the overall factor c^N = q^(N/2) when a = b = 1, c = sqrt(q), which is
// deliberately not applied here.
Rational partition_function(int n, const Rational& q, int max_n = kDefaultMaxN);

// Component r-1 is H_N^(r): the q-weighted probability that the single
// first-row +1 sits at position r from the right. Components sum to 1.
std::vector<Rational> boundary_correlation(int n, const Rational& q,
                                           int max_n = kDefaultMaxN);

// Probability that the s topmost horizontal arrows on the edge between the
// r-th and (r+1)-th vertical lines from the right all point left. Evaluated
// at arrow level: the prefix sum of the first n-r entries of each of the top
// s rows must vanish.
Rational efp_oracle(int n, int r, int s, const Rational& q,
                    int max_n = kDefaultMaxN);

// Indicator pair used to probe the equivalence of the arrow-level event with
// the all-zero top-left (n-r) x s block condition.
bool efp_event_arrows(const Asm& m, int r, int s);
bool efp_event_zero_block(const Asm& m, int r, int s);

}  // namespace asmshape

#endif
