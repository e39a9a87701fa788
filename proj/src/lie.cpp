#include "bcnet/lie.hpp"

namespace bcnet {

GroupContext GroupContext::gl(int n) {
    if (n < 1) fail("BadRank", "n must be positive");
    return {GroupType::A, n, n - 1};
}

GroupContext GroupContext::make(GroupType t, int rank) {
    if (rank < 1) fail("BadRank", "rank must be positive");
    switch (t) {
    case GroupType::A: return {t, rank + 1, rank};
    case GroupType::B: return {t, 2 * rank + 1, rank};
    case GroupType::C: return {t, 2 * rank, rank};
    }
    fail("BadRank");
}

GroupContext GroupContext::for_valency(int n) {
    if (n < 2) fail("BadRank", "valency must be at least 2");
    return n % 2 ? make(GroupType::B, n / 2) : make(GroupType::C, n / 2);
}

std::string GroupContext::name() const {
    switch (type) {
    case GroupType::A: return "GL" + std::to_string(n);
    case GroupType::B: return "B" + std::to_string(k);
    case GroupType::C: return "C" + std::to_string(k);
    }
    return {};
}

SMatrix omega_form(int n) {
    SMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i - 1, n - i) = Scalar(i % 2 ? 1 : -1);
    return m;
}

SMatrix d_form(int n) {
    SMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = Scalar(i % 2 ? 1 : -1);
    return m;
}

SMatrix w0_form(int n) {
    SMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = Scalar(1);
    return m;
}

SMatrix tau(const SMatrix& a) {
    const int n = static_cast<int>(a.rows());
    SMatrix om = omega_form(n);
    return om * inverse(a).transpose() * inverse(om);
}

bool in_group(const SMatrix& a) {
    if (a.rows() != a.cols()) return false;
    SMatrix om = omega_form(static_cast<int>(a.rows()));
    return a * om * a.transpose() == om;
}

SMatrix chevalley(const GroupContext& ctx, int letter) {
    const int n = ctx.n, k = ctx.k;
    int i = letter < 0 ? -letter : letter;
    if (i < 1 || i > k) fail("LetterOutOfRange", "letter " + std::to_string(letter) + " outside [-k,k]");
    SMatrix e(n, n);
    if (ctx.type == GroupType::A) {
        e = SMatrix::unit(n, i, i + 1);
    } else if (i < k) {
        e = SMatrix::unit(n, i, i + 1) + SMatrix::unit(n, n - i, n + 1 - i);
    } else if (ctx.type == GroupType::C) {
        e = SMatrix::unit(n, k, k + 1);
    } else {
        e = (SMatrix::unit(n, k, k + 1) + SMatrix::unit(n, k + 1, k + 2)) * Scalar::sqrt2();
    }
    return letter < 0 ? e.transpose() : e;
}

template <class T>
Matrix<T> x_elem(const GroupContext& ctx, int letter, const T& t) {
    SMatrix e = chevalley(ctx, letter);
    SMatrix e2 = e * e;
    Matrix<T> out = Matrix<T>::identity(ctx.n);
    for (int r = 0; r < ctx.n; ++r)
        for (int c = 0; c < ctx.n; ++c) {
            if (!e(r, c).is_zero()) out(r, c) = out(r, c) + T(e(r, c)) * t;
            if (!e2(r, c).is_zero()) out(r, c) = out(r, c) + T(e2(r, c) / Scalar(2)) * t * t;
        }
    return out;
}

template SMatrix x_elem<Scalar>(const GroupContext&, int, const Scalar&);
template EMatrix x_elem<Expr>(const GroupContext&, int, const Expr&);

std::vector<Rational> coweight(const GroupContext& ctx, int i) {
    const int n = ctx.n, k = ctx.k;
    if (i < 1 || i > k) fail("LetterOutOfRange", "coweight index out of range");
    std::vector<Rational> h(n, Rational(0));
    if (ctx.type == GroupType::A) {
        // GL_n: H^i = sum_{j<=i} E_jj, defined up to the centre
        for (int j = 0; j < i; ++j) h[j] = 1;
        return h;
    }
    Rational c = (ctx.type == GroupType::C && i == k) ? Rational(1, 2) : Rational(1);
    for (int j = 1; j <= i; ++j) {
        h[j - 1] += c;
        h[n - j] -= c;
    }
    return h;
}

template <class T>
Matrix<T> y_cochar(const GroupContext& ctx, int i, const T& u) {
    if constexpr (std::is_same_v<T, Scalar>)
        if (u.is_zero()) fail("ZeroParameter", "cocharacter parameter must be nonzero");
    std::vector<Rational> h = coweight(ctx, i);
    std::vector<T> d;
    for (const Rational& x : h) {
        Rational e2 = 2 * x; // exponent of u
        long e = e2.get_num().get_si();
        d.push_back(pow(u, e));
    }
    return Matrix<T>::diag(d);
}

template SMatrix y_cochar<Scalar>(const GroupContext&, int, const Scalar&);
template EMatrix y_cochar<Expr>(const GroupContext&, int, const Expr&);

namespace {

Scalar trace_product(const SMatrix& a, const SMatrix& b) {
    Scalar s(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !b(j, i).is_zero()) s += a(i, j) * b(j, i);
    return s;
}

// Orthogonal projection onto the Lie algebra for the trace form.
SMatrix project(const GroupContext& ctx, const SMatrix& m) {
    if (ctx.type == GroupType::A) return m;
    const int n = ctx.n;
    SMatrix om = omega_form(n);
    return (m - om * m.transpose() * inverse(om)) * Scalar::frac(1, 2);
}

SMatrix r_matrix(const SMatrix& x) {
    SMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (i < j) out(i, j) = x(i, j);
            else if (i > j) out(i, j) = -x(i, j);
        }
    return out;
}

} // namespace

Scalar std_bracket_linear(const GroupContext& ctx, const SMatrix& g, const SMatrix& m1, const SMatrix& m2) {
    if (det(g).is_zero()) fail("Singular", "bracket at a singular point");
    // f(g xi) = Tr(m g xi): the left-translated gradient is m g, the right one g m
    SMatrix l1 = project(ctx, m1 * g), l2 = project(ctx, m2 * g);
    SMatrix r1 = project(ctx, g * m1), r2 = project(ctx, g * m2);
    return (trace_product(r_matrix(l1), l2) - trace_product(r_matrix(r1), r2)) * Scalar::frac(1, 2);
}

Scalar std_bracket(const GroupContext& ctx, const SMatrix& g, std::pair<int, int> ij, std::pair<int, int> kl) {
    const int n = static_cast<int>(g.rows());
    SMatrix m1 = SMatrix::unit(n, ij.second + 1, ij.first + 1);
    SMatrix m2 = SMatrix::unit(n, kl.second + 1, kl.first + 1);
    return std_bracket_linear(ctx, g, m1, m2);
}

bool multiplicativity_check(const GroupContext& ctx, const SMatrix& a, const SMatrix& b) {
    const int n = static_cast<int>(a.rows());
    SMatrix ab = a * b;
    for (int p = 0; p < n * n; ++p)
        for (int q = p + 1; q < n * n; ++q) {
            SMatrix u = SMatrix::unit(n, p % n + 1, p / n + 1); // (AB)_{p/n, p%n} = Tr(u AB)
            SMatrix v = SMatrix::unit(n, q % n + 1, q / n + 1);
            Scalar lhs = std_bracket_linear(ctx, ab, u, v);
            Scalar rhs = std_bracket_linear(ctx, a, b * u, b * v) + std_bracket_linear(ctx, b, u * a, v * a);
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace bcnet
