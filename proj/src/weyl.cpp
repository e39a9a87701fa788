#include "bcnet/weyl.hpp"

#include "bcnet/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace bcnet {

namespace {

void require(const Perm& w) {
    if (!is_perm(w)) fail("BadPermutation", "not a permutation: " + word_str(w));
    if (!centralizes_w0(w)) fail("NotCentralizing", "permutation does not commute with w0: " + word_str(w));
}

Perm swap_values(Perm w, int a, int b) {
    std::swap(w[a - 1], w[b - 1]);
    return w;
}

} // namespace

Perm identity_perm(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return w;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) fail("ShapeMismatch", "permutations of different sizes");
    Perm c(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

bool is_perm(const Perm& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

bool centralizes_w0(const Perm& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 1; i <= n; ++i)
        if (w[n - i] != n + 1 - w[i - 1]) return false;
    return true;
}

std::vector<Perm> gens(int n) {
    if (n < 2) fail("BadRank", "gens needs n >= 2");
    const int k = n / 2;
    std::vector<Perm> s;
    for (int i = 1; i < k; ++i) s.push_back(swap_values(swap_values(identity_perm(n), i, i + 1), n - i, n - i + 1));
    s.push_back(n % 2 ? swap_values(identity_perm(n), k, k + 2) : swap_values(identity_perm(n), k, k + 1));
    return s;
}

int inv_count(const Perm& w) {
    require(w);
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

int neg_count(const Perm& w) {
    require(w);
    const int n = static_cast<int>(w.size());
    int c = 0;
    // i < (n+1)/2 < w(i), doubled to stay in integers
    for (int i = 1; 2 * i < n + 1; ++i)
        if (2 * w[i - 1] > n + 1) ++c;
    return c;
}

int length(const Perm& w) {
    const int n = static_cast<int>(w.size());
    int s = inv_count(w) + (n % 2 ? -1 : 1) * neg_count(w);
    return s / 2;
}

Perm word_product(int n, const std::vector<int>& word) {
    std::vector<Perm> s = gens(n);
    Perm w = identity_perm(n);
    for (int i : word) {
        if (i < 1 || i > static_cast<int>(s.size())) fail("LetterOutOfRange", "letter " + std::to_string(i));
        w = compose(w, s[i - 1]);
    }
    return w;
}

std::vector<int> reduced_word(const Perm& w) {
    require(w);
    const int n = static_cast<int>(w.size());
    std::vector<Perm> s = gens(n);
    std::vector<int> word;
    Perm cur = w;
    int len = length(cur);
    while (len > 0) {
        bool found = false;
        for (std::size_t i = 0; i < s.size() && !found; ++i) {
            Perm next = compose(cur, s[i]);
            if (length(next) < len) {
                word.push_back(static_cast<int>(i) + 1);
                cur = next;
                --len;
                found = true;
            }
        }
        if (!found) fail("ExtractionFailed", "no descent at " + word_str(cur));
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool is_reduced(int n, const std::vector<int>& word) {
    return length(word_product(n, word)) == static_cast<int>(word.size());
}

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Perm> s = gens(n);
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    std::function<void(const Perm&, int)> go = [&](const Perm& cur, int len) {
        if (len == 0) {
            out.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            Perm next = compose(cur, s[i]);
            if (length(next) < len) {
                suffix.push_back(static_cast<int>(i) + 1);
                go(next, len - 1);
                suffix.pop_back();
            }
        }
    };
    go(w, length(w));
    return out;
}

std::map<Perm, int> cayley_distances(int n) {
    std::vector<Perm> s = gens(n);
    std::map<Perm, int> dist{{identity_perm(n), 0}};
    std::deque<Perm> queue{identity_perm(n)};
    while (!queue.empty()) {
        Perm w = queue.front();
        queue.pop_front();
        for (const Perm& g : s) {
            Perm x = compose(w, g);
            if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
        }
    }
    return dist;
}

std::pair<Perm, Perm> word_to_pair(int n, const DoubleWord& dw) {
    std::vector<int> neg, pos;
    for (int i : dw) {
        if (i == 0) fail("LetterOutOfRange", "letter 0");
        (i < 0 ? neg : pos).push_back(std::abs(i));
    }
    return {word_product(n, neg), word_product(n, pos)};
}

bool is_reduced_double(int n, const DoubleWord& dw) {
    auto [u, v] = word_to_pair(n, dw);
    long nneg = std::count_if(dw.begin(), dw.end(), [](int i) { return i < 0; });
    return length(u) == nneg && length(v) == static_cast<long>(dw.size()) - nneg;
}

std::vector<int> type_a_expand(int n, const DoubleWord& dw) {
    if (!is_reduced_double(n, dw)) fail("NotReduced", "double word " + word_str(dw) + " is not reduced");
    const int k = n / 2;
    std::vector<int> out;
    for (int letter : dw) {
        const int i = std::abs(letter), sg = letter < 0 ? -1 : 1;
        if (i < k) {
            out.push_back(sg * i);
            out.push_back(sg * (n - i));
        } else if (n % 2 == 0) {
            out.push_back(sg * k);
        } else {
            for (int j : {k, k + 1, k}) out.push_back(sg * j);
        }
    }
    return out;
}

std::vector<DoubleWord> reduced_double_words(int n, int max_len) {
    const int k = n / 2;
    std::vector<DoubleWord> out{{}};
    std::vector<DoubleWord> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<DoubleWord> next;
        for (const DoubleWord& w : layer)
            for (int letter = -k; letter <= k; ++letter) {
                if (letter == 0) continue;
                DoubleWord x = w;
                x.push_back(letter);
                if (is_reduced_double(n, x)) next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

DoubleWord parse_word(const std::string& text) {
    std::istringstream is(text);
    DoubleWord w;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("BadWord", "bad letter '" + tok + "'");
        }
        if (used != tok.size() || v == 0) fail("BadWord", "bad letter '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

std::string word_str(const std::vector<int>& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    return os.str();
}

Perm parse_perm(const std::string& text) {
    Perm w;
    try {
        w = parse_word(text);
    } catch (const Error&) {
        fail("BadPermutation", "bad permutation '" + text + "'");
    }
    if (!is_perm(w)) fail("BadPermutation", "not a permutation: " + text);
    return w;
}

} // namespace bcnet
