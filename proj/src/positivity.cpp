#include "bcnet/positivity.hpp"

#include <cstdlib>

namespace bcnet {

namespace {

SMatrix elementary_a(int n, int a, const Scalar& t) {
    SMatrix m = SMatrix::identity(n);
    m(a - 1, a) = t;
    return m;
}

std::vector<std::vector<int>> subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

SMatrix block(const SMatrix& m, int r0, int r1, int c0, int c1) {
    SMatrix b(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) b(i - r0, j - c0) = m(i, j);
    return b;
}

// #{c >= j : w(c) <= i}, 1-based
int corner_rank(const Perm& w, int i, int j) {
    int r = 0;
    for (int c = j; c <= static_cast<int>(w.size()); ++c)
        if (w[c - 1] <= i) ++r;
    return r;
}

/// Rows and columns of a nonsingular maximal minor of m restricted to rows [0, rows), columns [c0, n).
std::pair<std::vector<int>, std::vector<int>> maximal_minor(const SMatrix& m, int rows, int c0) {
    const int n = static_cast<int>(m.cols());
    std::vector<int> rs, cs;
    std::vector<int> all_cols;
    for (int c = c0; c < n; ++c) all_cols.push_back(c);
    std::size_t r = 0;
    for (int i = 0; i < rows; ++i) {
        std::vector<int> trial = rs;
        trial.push_back(i);
        SMatrix sub(trial.size(), all_cols.size());
        for (std::size_t a = 0; a < trial.size(); ++a)
            for (std::size_t b = 0; b < all_cols.size(); ++b) sub(a, b) = m(trial[a], all_cols[b]);
        if (rank(sub) > r) {
            rs = trial;
            ++r;
        }
    }
    for (int c : all_cols) {
        std::vector<int> trial = cs;
        trial.push_back(c);
        SMatrix sub(rs.size(), trial.size());
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = 0; b < trial.size(); ++b) sub(a, b) = m(rs[a], trial[b]);
        if (rank(sub) == trial.size()) cs = trial;
        if (cs.size() == rs.size()) break;
    }
    return {rs, cs};
}

/// Parameter t with u = u' x_a(t), where u' lies in the cell of w s_a.
Scalar peel(const SMatrix& u, const Perm& w, int a) {
    const int n = static_cast<int>(u.rows());
    Perm next = compose(w, swap_perm(n, a));
    for (int i = 1; i <= n; ++i) {
        if (corner_rank(w, i, a + 1) == corner_rank(next, i, a + 1)) continue;
        auto [rs, cs] = maximal_minor(u, i, a);
        std::vector<int> swapped = cs;
        for (int& c : swapped)
            if (c == a) c = a - 1;
        Scalar den = minor(u, rs, swapped);
        if (rs.empty() || den.is_zero()) break;
        return minor(u, rs, cs) / den;
    }
    fail("ExtractionFailed", "no rank drop at letter " + std::to_string(a));
}

/// Upper unitriangular u in G(Omega_n) as a product of X_i(t), t > 0.
std::vector<CertFactor> extract_upper(const GroupContext& ctx, const SMatrix& u) {
    const int n = ctx.n, k = ctx.k;
    Perm w = bruhat_datum(u);
    if (!centralizes_w0(w)) fail("ExtractionFailed", "Bruhat datum " + word_str(w) + " does not commute with w0");
    std::vector<int> word = reduced_word(w);
    std::vector<CertFactor> out(word.size());
    SMatrix cur = u;
    for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
        const int i = word[j];
        std::vector<int> expansion = type_a_expand(n, {i});
        std::vector<Scalar> ts(expansion.size());
        for (int p = static_cast<int>(expansion.size()) - 1; p >= 0; --p) {
            const int a = expansion[p];
            ts[p] = peel(cur, w, a);
            if (ts[p].sign() <= 0) fail("ExtractionFailed", "nonpositive parameter " + ts[p].str());
            cur = cur * elementary_a(n, a, -ts[p]);
            w = compose(w, swap_perm(n, a));
        }
        CertFactor f;
        f.letter = i;
        f.type_a = ts;
        if (i < k) {
            f.case_no = 1;
            if (ts[0] != ts[1]) fail("ExtractionFailed", "case 1 parameters differ: " + ts[0].str() + ", " + ts[1].str());
            f.t = ts[0];
        } else if (n % 2 == 0) {
            f.case_no = 2;
            f.t = ts[0];
        } else {
            f.case_no = 3;
            if (ts[1] != Scalar(2) * ts[0] || ts[2] != ts[0])
                fail("ExtractionFailed", "case 3 parameters break the fixed pattern");
            f.t = Scalar::sqrt2() * ts[0];
        }
        out[j] = f;
    }
    if (cur != SMatrix::identity(n)) fail("ExtractionFailed", "residual after peeling is not the identity");
    return out;
}

} // namespace

Perm swap_perm(int n, int a) {
    Perm p = identity_perm(n);
    std::swap(p[a - 1], p[a]);
    return p;
}

bool is_tnn(const SMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const int n = static_cast<int>(a.rows());
    auto subs = subsets(n);
    for (const auto& rs : subs)
        for (const auto& cs : subs)
            if (rs.size() == cs.size() && minor(a, rs, cs).sign() < 0) return false;
    return true;
}

std::tuple<SMatrix, SMatrix, SMatrix> ldu(const SMatrix& a) {
    if (a.rows() != a.cols()) fail("ShapeMismatch", "ldu needs a square matrix");
    const std::size_t n = a.rows();
    SMatrix l = SMatrix::identity(n), u = a;
    for (std::size_t c = 0; c < n; ++c) {
        if (u(c, c).is_zero()) fail("ZeroLeadingMinor", "leading principal minor " + std::to_string(c + 1) + " vanishes");
        for (std::size_t r = c + 1; r < n; ++r) {
            if (u(r, c).is_zero()) continue;
            Scalar f = u(r, c) / u(c, c);
            l(r, c) = f;
            for (std::size_t j = c; j < n; ++j) u(r, j) -= f * u(c, j);
        }
    }
    SMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = u(i, i);
        Scalar inv = u(i, i).inverse();
        for (std::size_t j = i; j < n; ++j) u(i, j) *= inv;
    }
    return {l, d, u};
}

std::vector<Scalar> tau_elementary(int case_no, const std::vector<Scalar>& p) {
    switch (case_no) {
    case 1:
        if (p.size() != 2) break;
        return {p[1], p[0]};
    case 2:
        if (p.size() != 1) break;
        return p;
    case 3: {
        if (p.size() != 3) break;
        Scalar s = p[0] + p[2];
        if (s.is_zero()) fail("ZeroDenominator", "t + t'' vanishes");
        return {p[1] * p[2] / s, s, p[0] * p[1] / s};
    }
    default:
        fail("BadCase", "case must be 1, 2 or 3");
    }
    fail("LengthMismatch", "wrong number of parameters for case " + std::to_string(case_no));
}

SMatrix case_matrix(int n, int case_no, int i, const std::vector<Scalar>& p) {
    switch (case_no) {
    case 1: return elementary_a(n, i, p.at(0)) * elementary_a(n, n - i, p.at(1));
    case 2: return elementary_a(n, i, p.at(0));
    case 3: return elementary_a(n, i, p.at(0)) * elementary_a(n, i + 1, p.at(1)) * elementary_a(n, i, p.at(2));
    }
    fail("BadCase", "case must be 1, 2 or 3");
}

SMatrix TNNCertificate::product(const GroupContext& ctx) const {
    SMatrix m = SMatrix::identity(ctx.n);
    for (const CertFactor& f : factors) m = m * (f.letter == 0 ? SMatrix::diag(f.torus) : x_elem(ctx, f.letter, f.t));
    return m;
}

Perm bruhat_datum(const SMatrix& u) {
    const int n = static_cast<int>(u.rows());
    // r[i][j] = rank of rows 1..i, columns j..n
    std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 2, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r[i][j] = static_cast<int>(rank(block(u, 0, i, j - 1, n)));
    Perm w(n, 0);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (r[i][j] - r[i][j + 1] - (r[i - 1][j] - r[i - 1][j + 1]) == 1) {
                w[j - 1] = i;
                break;
            }
    if (!is_perm(w)) fail("ExtractionFailed", "rank pattern is not a permutation");
    return w;
}

TNNCertificate tnn_membership(const GroupContext& ctx, const SMatrix& a) {
    if (ctx.type == GroupType::A) fail("UnsupportedType", "membership is decided for types B and C");
    if (static_cast<int>(a.rows()) != ctx.n || !in_group(a)) fail("NotInGroup", "matrix is not in G(Omega_" + std::to_string(ctx.n) + ")");
    if (!is_tnn(a)) fail("NotTNN", "matrix has a negative minor");
    auto [l, d, u] = ldu(a);
    std::vector<Scalar> h;
    for (int i = 0; i < ctx.n; ++i) {
        if (d(i, i).sign() <= 0) fail("ExtractionFailed", "torus part is not positive");
        h.push_back(d(i, i));
    }
    TNNCertificate cert;
    std::vector<CertFactor> lower = extract_upper(ctx, l.transpose());
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
        CertFactor f = *it;
        f.letter = -f.letter;
        cert.factors.push_back(f);
    }
    CertFactor torus;
    torus.torus = h;
    cert.factors.push_back(torus);
    for (const CertFactor& f : extract_upper(ctx, u)) cert.factors.push_back(f);
    if (cert.product(ctx) != a) fail("ExtractionFailed", "certificate does not reproduce the matrix");
    return cert;
}

} // namespace bcnet
