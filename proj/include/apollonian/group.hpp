#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollonian/mat4.hpp"

namespace apollonian::group {

// The eight generators: reflections S1..S4 and inversions S1'..S4'
// (primes are the transposed generators, written S_i^perp elsewhere).
enum class Gen : std::uint8_t { S1, S2, S3, S4, S1p, S2p, S3p, S4p };

inline int gen_index(Gen g) { return static_cast<int>(g) % 4; }  // 0..3
inline bool gen_transposed(Gen g) { return static_cast<int>(g) >= 4; }
inline Gen make_gen(int index, bool transposed) {
    return static_cast<Gen>(index + (transposed ? 4 : 0));
}

// A word is stored in matrix-product order: word[0] is the leftmost letter,
// i.e. the one applied last. "12'3" parses to [S1, S2p, S3] with S3 applied
// first.
using Word = std::vector<Gen>;

Mat4Q generator_matrix(Gen g);

/// Product of generator matrices in word order; empty word is the identity.
Mat4Q word_to_matrix(const Word& w);

/// Normal form per the Coxeter presentation: cancel equal adjacent letters
/// and move transposed letters as far right (toward earliest application)
/// as the commutation S_i S_j' = S_j' S_i (i != j) allows.
Word normal_form(Word w);

bool is_normal_form(const Word& w);

/// All normal-form words of length exactly n; count is 9*5^(n-1) - 1.
/// Lexicographic in the generator order S1<S2<S3<S4<S1'<S2'<S3'<S4'.
std::vector<Word> enumerate_normal_forms(int n, int cap = 8);

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);

struct RowSumReport {
    bool ok = true;
    std::string detail;
    Vec4Q row_sums{};
    Rational total;  // f(U) = 1^T U 1
};

/// Row-sum invariants of the presentation proof for a nonempty normal-form
/// word: pairwise row-sum positivity, the head-letter sign and triangle
/// conditions, f(U) >= 8, and strict growth of f along the suffix chain.
RowSumReport row_sum_invariants(const Word& w);

/// D^T g D with D = -Q_D; swaps plain and transposed generators.
Mat4Q conjugate_by_duality(const Mat4Q& g);

}  // namespace apollonian::group
