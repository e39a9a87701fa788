#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcnet {

/// One-line notation: w[i-1] = w(i), values 1..n.
using Perm = std::vector<int>;
/// Letters in [-k,-1] and [1,k]; negative letters act in the first copy.
using DoubleWord = std::vector<int>;

Perm identity_perm(int n);
/// (a*b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
bool is_perm(const Perm& w);
/// w(n+1-i) = n+1-w(i) for all i.
bool centralizes_w0(const Perm& w);

/// s_1..s_k of C_{S_n}(w0).
std::vector<Perm> gens(int n);

int inv_count(const Perm& w); // throws NotCentralizing
int neg_count(const Perm& w);
/// (inv + (-1)^n neg) / 2.
int length(const Perm& w);

/// s_{i1} ... s_{im} for positive letters.
Perm word_product(int n, const std::vector<int>& word);
/// A word of length(w) letters, peeling right descents with the smallest index first.
std::vector<int> reduced_word(const Perm& w);
bool is_reduced(int n, const std::vector<int>& word);
/// Every reduced word of w; exponential, for small n.
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

/// Elements of the group generated by gens(n) with their Cayley distance from the identity.
std::map<Perm, int> cayley_distances(int n);

/// (u, v): u from the negative letters, v from the positive ones.
std::pair<Perm, Perm> word_to_pair(int n, const DoubleWord& dw);
bool is_reduced_double(int n, const DoubleWord& dw);
/// Signed letters in adjacent transpositions (i, i+1); s_k for odd n becomes k, k+1, k.
std::vector<int> type_a_expand(int n, const DoubleWord& dw); // throws NotReduced

/// Every reduced double word of length <= max_len over [-k,-1] and [1,k].
std::vector<DoubleWord> reduced_double_words(int n, int max_len);

DoubleWord parse_word(const std::string& text); // "1 -2 2", throws BadWord
std::string word_str(const std::vector<int>& w);
Perm parse_perm(const std::string& text); // throws BadPermutation

} // namespace bcnet
