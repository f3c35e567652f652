#include "apollonian/group.hpp"

#include <stdexcept>

#include "apollonian/config.hpp"
#include "apollonian/forms.hpp"

namespace apollonian::group {

Mat4Q generator_matrix(Gen g) {
    // S_i: row i becomes -e_i + 2*sum of the others; other rows identity.
    // S_i' is the transpose. The printed S2 with zero rows in the source
    // text is a typo; the permutation rule is what Aut(Q_D) membership and
    // invertibility force.
    int i = gen_index(g);
    Mat4Q m = Mat4Q::identity();
    for (int j = 0; j < 4; ++j) m(i, j) = (j == i) ? -1 : 2;
    return gen_transposed(g) ? m.transpose() : m;
}

Mat4Q word_to_matrix(const Word& w) {
    Mat4Q u = Mat4Q::identity();
    for (Gen g : w) u = u * generator_matrix(g);
    return u;
}

bool is_normal_form(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == w[k + 1]) return false;
        // A transposed letter may not sit immediately left of a plain
        // letter with a different index.
        if (gen_transposed(w[k]) && !gen_transposed(w[k + 1]) &&
            gen_index(w[k]) != gen_index(w[k + 1]))
            return false;
    }
    return true;
}

Word normal_form(Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == w[k + 1]) {
                w.erase(w.begin() + k, w.begin() + k + 2);
                changed = true;
                break;
            }
            if (gen_transposed(w[k]) && !gen_transposed(w[k + 1]) &&
                gen_index(w[k]) != gen_index(w[k + 1])) {
                std::swap(w[k], w[k + 1]);
                changed = true;
            }
        }
    }
    return w;
}

namespace {

void extend(std::vector<Word>& out, Word& cur, int remaining) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int t = 0; t < 8; ++t) {
        Gen g = static_cast<Gen>(t);
        if (!cur.empty()) {
            Gen prev = cur.back();  // the letter to the left of g
            if (prev == g) continue;
            if (gen_transposed(prev) && !gen_transposed(g) &&
                gen_index(prev) != gen_index(g))
                continue;
        }
        cur.push_back(g);
        extend(out, cur, remaining - 1);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_normal_forms(int n, int cap) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    if (n > cap) throw std::invalid_argument("enumeration length over cap");
    std::vector<Word> out;
    Word cur;
    extend(out, cur, n);
    return out;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (Gen g : w) {
        s += static_cast<char>('1' + gen_index(g));
        if (gen_transposed(g)) s += '\'';
    }
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c < '1' || c > '4') throw std::invalid_argument("bad word letter");
        bool prime = (k + 1 < text.size() && (text[k + 1] == '\'' || text[k + 1] == 'p'));
        if (prime) ++k;
        w.push_back(make_gen(c - '1', prime));
    }
    return w;
}

RowSumReport row_sum_invariants(const Word& w) {
    RowSumReport rep;
    if (w.empty() || !is_normal_form(w)) {
        rep.ok = false;
        rep.detail = "word must be nonempty and in normal form";
        return rep;
    }
    Mat4Q u = word_to_matrix(w);
    Vec4Q one{1, 1, 1, 1};
    rep.row_sums = u * one;
    rep.total = rep.row_sums[0] + rep.row_sums[1] + rep.row_sums[2] + rep.row_sums[3];
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.detail = "word " + word_to_string(w) + ": " + why;
    };

    for (int i = 0; i < 4 && rep.ok; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (rep.row_sums[i] + rep.row_sums[j] <= 0) {
                fail("pairwise row-sum not positive");
                break;
            }

    int h = gen_index(w.front());
    bool transposed = gen_transposed(w.front());
    if (rep.ok) {
        if (!transposed && rep.row_sums[h] <= 0) fail("head S_h needs r_h > 0");
        if (transposed && rep.row_sums[h] >= 0) fail("head S_h' needs r_h < 0");
    }
    if (rep.ok) {
        for (int i = 0; i < 4; ++i) {
            if (i == h) continue;
            Rational others = rep.total - rep.row_sums[i];
            if (rep.row_sums[i] >= others) {
                fail("triangle inequality on row sums");
                break;
            }
        }
    }
    if (rep.ok && rep.total < 8) fail("f(U) < 8");
    if (rep.ok) {
        // f strictly increases as letters are appended on the left.
        Rational prev = 4;  // f(I)
        for (std::size_t k = w.size(); k-- > 0;) {
            Word suffix(w.begin() + k, w.end());
            Mat4Q us = word_to_matrix(suffix);
            Vec4Q r = us * one;
            Rational f = r[0] + r[1] + r[2] + r[3];
            if (f <= prev) {
                fail("f did not strictly increase");
                break;
            }
            prev = f;
        }
    }
    return rep;
}

Mat4Q conjugate_by_duality(const Mat4Q& g) {
    Mat4Q d = config::duality_operator();
    return d.transpose() * g * d;
}

}  // namespace apollonian::group
