#include <doctest.h>

#include "bcnet/lie.hpp"

#include <random>

using namespace bcnet;

namespace {

SMatrix random_matrix(int n, std::mt19937_64& rng) {
    SMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_rational(rng, 7);
    return m;
}

SMatrix random_group_element(const GroupContext& ctx, std::mt19937_64& rng, int factors) {
    SMatrix a = SMatrix::identity(ctx.n);
    for (int f = 0; f < factors; ++f) {
        int i = 1 + static_cast<int>(rng() % ctx.k);
        a = a * x_elem(ctx, rng() % 2 ? i : -i, random_rational(rng, 5));
    }
    return a;
}

/// Differential of X -> tau(X)_{ij} at a, as m with d = Tr(m dX).
SMatrix tau_entry_differential(const SMatrix& a, int i, int j) {
    const int n = static_cast<int>(a.rows());
    SMatrix om = omega_form(n), omi = inverse(om), ai = inverse(a);
    SMatrix m(n, n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            SMatrix dx = SMatrix::unit(n, p, q);
            SMatrix d = om * (Scalar(-1) * ai * dx * ai).transpose() * omi;
            m(q - 1, p - 1) = d(i, j);
        }
    return m;
}

} // namespace

TEST_CASE("forms") {
    for (int n = 1; n <= 8; ++n) {
        SMatrix om = omega_form(n);
        CHECK((om.transpose() == Scalar(-1) * om) == (n % 2 == 0));
        CHECK((om.transpose() == om) == (n % 2 == 1));
        SMatrix w0 = w0_form(n);
        CHECK(w0 * d_form(n) * w0 == Scalar(n % 2 ? 1 : -1) * d_form(n));
    }
    CHECK(omega_form(3)(0, 2) == Scalar(1));
    CHECK(omega_form(3)(1, 1) == Scalar(-1));
}

TEST_CASE("contexts and generators") {
    CHECK(GroupContext::for_valency(5).name() == "B2");
    CHECK(GroupContext::for_valency(4).name() == "C2");
    CHECK(GroupContext::make(GroupType::B, 1).n == 3);
    CHECK_THROWS_AS(GroupContext::make(GroupType::C, 0), Error);
    for (const auto& ctx : {GroupContext::make(GroupType::B, 2), GroupContext::make(GroupType::C, 3)})
        for (int i = 1; i <= ctx.k; ++i) CHECK(chevalley(ctx, -i) == chevalley(ctx, i).transpose());
    CHECK_THROWS_WITH_AS(chevalley(GroupContext::make(GroupType::C, 2), 3), doctest::Contains("outside"), Error);
}

TEST_CASE("x elements") {
    const Scalar t(3);
    GroupContext c2 = GroupContext::make(GroupType::C, 2);
    CHECK(x_elem(c2, 2, t) == SMatrix::identity(4) + t * SMatrix::unit(4, 2, 3));
    CHECK(x_elem(c2, 1, t) == SMatrix::identity(4) + t * (SMatrix::unit(4, 1, 2) + SMatrix::unit(4, 3, 4)));

    GroupContext b1 = GroupContext::make(GroupType::B, 1);
    SMatrix x = x_elem(b1, 1, t);
    CHECK(x(0, 2) == t * t);
    CHECK(x(0, 1) == Scalar::sqrt2() * t);
    CHECK(x(1, 2) == Scalar::sqrt2() * t);
    CHECK(x_elem(b1, -1, Scalar(0)) == SMatrix::identity(3));

    std::mt19937_64 rng(1);
    for (const auto& ctx : {b1, c2, GroupContext::make(GroupType::B, 2), GroupContext::make(GroupType::C, 3)})
        for (int i = 1; i <= ctx.k; ++i)
            for (int letter : {i, -i}) {
                SMatrix a = x_elem(ctx, letter, random_rational(rng, 9));
                CHECK(in_group(a));
                CHECK(tau(a) == a);
            }
}

TEST_CASE("tau") {
    CHECK(tau(SMatrix::identity(4)) == SMatrix::identity(4));
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 5; ++n) {
        SMatrix a = random_matrix(n, rng);
        if (det(a).is_zero()) continue;
        CHECK(tau(tau(a)) == a);
        CHECK_FALSE(in_group(a));
    }
    // a torus element is in the group iff d_i d_{n+1-i} = 1
    SMatrix h = SMatrix::diag({Scalar(2), Scalar(-1), Scalar::frac(1, 2)});
    CHECK(in_group(h));
    CHECK(tau(h) == h);
    CHECK_THROWS_AS(tau(SMatrix(2, 2)), Error);
}

TEST_CASE("cocharacters") {
    GroupContext b2 = GroupContext::make(GroupType::B, 2);
    CHECK(y_cochar(b2, 1, Scalar(2)) == SMatrix::diag({Scalar(4), Scalar(1), Scalar(1), Scalar(1), Scalar::frac(1, 4)}));
    CHECK(y_cochar(b2, 2, Scalar(1)) == SMatrix::identity(5));
    GroupContext c2 = GroupContext::make(GroupType::C, 2);
    CHECK(y_cochar(c2, 2, Scalar(2)) == SMatrix::diag({Scalar(2), Scalar(2), Scalar::frac(1, 2), Scalar::frac(1, 2)}));
    CHECK(y_cochar(c2, 1, Scalar(3)) == SMatrix::diag({Scalar(9), Scalar(1), Scalar(1), Scalar::frac(1, 9)}));
    for (int i = 1; i <= 2; ++i) CHECK(in_group(y_cochar(c2, i, Scalar(5))));
    CHECK_THROWS_WITH_AS(y_cochar(c2, 1, Scalar(0)), doctest::Contains("nonzero"), Error);
}

TEST_CASE("standard bracket on coordinates") {
    GroupContext gl2 = GroupContext::gl(2);
    CHECK(std_bracket(gl2, SMatrix::identity(2), {0, 1}, {1, 0}) == Scalar(0));
    CHECK(std_bracket(gl2, SMatrix::identity(2), {0, 0}, {0, 1}) == Scalar(0));
    SMatrix a = SMatrix::identity(2);
    a(0, 1) = Scalar(1);
    CHECK(std_bracket(gl2, a, {0, 0}, {0, 1}) == Scalar::frac(1, 2));

    // {a11, a12} = a11 a12 / 2 and {a12, a21} = 0 on GL_2
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        SMatrix g = random_matrix(2, rng);
        if (det(g).is_zero()) continue;
        CHECK(std_bracket(gl2, g, {0, 0}, {0, 1}) == g(0, 0) * g(0, 1) / Scalar(2));
        CHECK(std_bracket(gl2, g, {0, 1}, {1, 0}) == Scalar(0));
        CHECK(std_bracket(gl2, g, {0, 0}, {1, 1}) == g(0, 1) * g(1, 0));
    }
    for (const auto& ctx : {GroupContext::gl(3), GroupContext::make(GroupType::B, 1), GroupContext::make(GroupType::C, 2)}) {
        SMatrix g = ctx.type == GroupType::A ? random_matrix(ctx.n, rng) : random_group_element(ctx, rng, 5);
        for (int p = 0; p < ctx.n * ctx.n; ++p) {
            CHECK(std_bracket(ctx, g, {p / ctx.n, p % ctx.n}, {p / ctx.n, p % ctx.n}) == Scalar(0));
            for (int q = 0; q < ctx.n * ctx.n; ++q)
                CHECK(std_bracket(ctx, g, {p / ctx.n, p % ctx.n}, {q / ctx.n, q % ctx.n}) ==
                      -std_bracket(ctx, g, {q / ctx.n, q % ctx.n}, {p / ctx.n, p % ctx.n}));
        }
    }
    CHECK_THROWS_AS(std_bracket(gl2, SMatrix(2, 2), {0, 0}, {0, 1}), Error);
}

TEST_CASE("tau is a Poisson map") {
    std::mt19937_64 rng(4);
    for (const auto& ctx : {GroupContext::gl(3), GroupContext::make(GroupType::B, 1), GroupContext::make(GroupType::C, 2)}) {
        const int n = ctx.n;
        for (int t = 0; t < 3; ++t) {
            SMatrix a = ctx.type == GroupType::A ? random_matrix(n, rng) : random_group_element(ctx, rng, 6);
            if (det(a).is_zero()) continue;
            SMatrix ta = tau(a);
            for (int p = 0; p < n * n; ++p)
                for (int q = p + 1; q < n * n; ++q) {
                    Scalar lhs = std_bracket_linear(ctx, a, tau_entry_differential(a, p / n, p % n),
                                                    tau_entry_differential(a, q / n, q % n));
                    CHECK(lhs == std_bracket(ctx, ta, {p / n, p % n}, {q / n, q % n}));
                }
        }
    }
}

TEST_CASE("multiplication is Poisson") {
    std::mt19937_64 rng(5);
    GroupContext gl3 = GroupContext::gl(3);
    CHECK(multiplicativity_check(gl3, SMatrix::identity(3), SMatrix::identity(3)));
    CHECK(multiplicativity_check(gl3, SMatrix::diag({Scalar(2), Scalar(3), Scalar(5)}),
                                 SMatrix::diag({Scalar(7), Scalar::frac(1, 2), Scalar(-1)})));
    CHECK(multiplicativity_check(gl3, random_matrix(3, rng), random_matrix(3, rng)));
    for (const auto& ctx : {GroupContext::make(GroupType::B, 1), GroupContext::make(GroupType::C, 2)})
        CHECK(multiplicativity_check(ctx, random_group_element(ctx, rng, 4), random_group_element(ctx, rng, 4)));
}
