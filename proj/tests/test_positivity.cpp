#include <doctest.h>

#include "bcnet/cells.hpp"
#include "bcnet/positivity.hpp"

#include <random>

using namespace bcnet;

namespace {

GroupContext B(int k) { return GroupContext::make(GroupType::B, k); }
GroupContext C(int k) { return GroupContext::make(GroupType::C, k); }

Scalar positive(std::mt19937_64& rng) {
    Scalar x = random_rational(rng, 7, true);
    while (x.is_zero()) x = random_rational(rng, 7, true);
    return x;
}

} // namespace

TEST_CASE("total nonnegativity") {
    CHECK(is_tnn(SMatrix::identity(3)));
    CHECK(is_tnn(x_elem(B(1), 1, Scalar(2))));
    CHECK_FALSE(is_tnn(x_elem(B(1), 1, Scalar(-2))));
    SMatrix m = SMatrix::identity(2);
    m(0, 1) = Scalar(1);
    m(1, 0) = Scalar(2);
    CHECK_FALSE(is_tnn(m)); // det = -1
}

TEST_CASE("ldu") {
    SMatrix a = x_elem(C(2), -1, Scalar(3)) * SMatrix::diag({Scalar(2), Scalar(5), Scalar::frac(1, 5), Scalar::frac(1, 2)}) *
                x_elem(C(2), 2, Scalar(7));
    auto [l, d, u] = ldu(a);
    CHECK(l * d * u == a);
    CHECK(l == x_elem(C(2), -1, Scalar(3)));
    CHECK(u == x_elem(C(2), 2, Scalar(7)));
    SMatrix w(2, 2);
    w(0, 1) = Scalar(1);
    w(1, 0) = Scalar(1);
    CHECK_THROWS_WITH_AS(ldu(w), doctest::Contains("vanishes"), Error);
}

TEST_CASE("tau acts on the elementary factors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar t = positive(rng), t1 = positive(rng), t2 = positive(rng);
        CHECK(tau(case_matrix(6, 1, 1, {t, t1})) == case_matrix(6, 1, 1, tau_elementary(1, {t, t1})));
        CHECK(tau(case_matrix(6, 2, 3, {t})) == case_matrix(6, 2, 3, tau_elementary(2, {t})));
        CHECK(tau(case_matrix(5, 3, 2, {t, t1, t2})) == case_matrix(5, 3, 2, tau_elementary(3, {t, t1, t2})));
    }
    auto fixed = tau_elementary(3, {Scalar(1), Scalar(2), Scalar(1)});
    CHECK(fixed == std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(1)});
    CHECK_THROWS_WITH_AS(tau_elementary(3, {Scalar(1), Scalar(2), Scalar(-1)}), doctest::Contains("vanishes"), Error);
}

TEST_CASE("Bruhat datum") {
    CHECK(bruhat_datum(SMatrix::identity(3)) == identity_perm(3));
    CHECK(bruhat_datum(x_elem(GroupContext::gl(3), 1, Scalar(2))) == Perm{2, 1, 3});
    SMatrix u = x_elem(GroupContext::gl(3), 1, Scalar(2)) * x_elem(GroupContext::gl(3), 2, Scalar(3));
    CHECK(bruhat_datum(u) == compose(swap_perm(3, 1), swap_perm(3, 2)));
}

TEST_CASE("certificates reproduce random positive products") {
    std::mt19937_64 rng(6);
    for (const auto& ctx : {B(1), C(2), B(2), C(3)})
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Scalar> h(ctx.n, Scalar(1));
            for (int j = 0; j < ctx.k; ++j) {
                h[j] = positive(rng);
                h[ctx.n - 1 - j] = h[j].inverse();
            }
            SMatrix a = SMatrix::diag(h);
            int len = std::uniform_int_distribution<int>(0, 6)(rng);
            for (int j = 0; j < len; ++j) {
                int i = std::uniform_int_distribution<int>(1, ctx.k)(rng);
                a = a * x_elem(ctx, rng() % 2 ? i : -i, positive(rng));
            }
            TNNCertificate cert = tnn_membership(ctx, a);
            CHECK(cert.product(ctx) == a);
            for (const CertFactor& f : cert.factors) {
                if (f.letter == 0) continue;
                CHECK(f.t.sign() > 0);
                if (f.case_no == 3) {
                    CHECK(f.type_a[1] == Scalar(2) * f.type_a[0]);
                    CHECK(f.type_a[2] == f.type_a[0]);
                }
            }
        }
}

TEST_CASE("membership failures") {
    CHECK_THROWS_WITH_AS(tnn_membership(C(2), x_elem(C(2), 1, Scalar(-1))), doctest::Contains("negative minor"), Error);
    CHECK_THROWS_WITH_AS(tnn_membership(C(2), SMatrix::diag({Scalar(2), Scalar(1), Scalar(1), Scalar(1)})),
                         doctest::Contains("not in G"), Error);
    SMatrix torus = SMatrix::diag({Scalar(3), Scalar(1), Scalar::frac(1, 3)});
    TNNCertificate cert = tnn_membership(B(1), torus);
    REQUIRE(cert.factors.size() == 1);
    CHECK(cert.factors[0].torus == std::vector<Scalar>{Scalar(3), Scalar(1), Scalar::frac(1, 3)});
}
