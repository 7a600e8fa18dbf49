#include <catch2/catch_amalgamated.hpp>

#include <conifold/fp.hpp>
#include <conifold/matrix.hpp>
#include <conifold/rational.hpp>
#include <conifold/rng.hpp>

using namespace conifold;

TEST_CASE("Fp arithmetic and inverses") {
    FpField F(101);
    Fp a = F.from_int(37), b = F.from_int(90);

    REQUIRE((a + b).value() == 26);
    REQUIRE((a - b).value() == 48);
    REQUIRE((a * b).value() == (37 * 90) % 101);
    REQUIRE((-a).value() == 64);
    REQUIRE(F.from_int(-1).value() == 100);

    SECTION("Fermat inverse") {
        for (int x = 1; x < 101; ++x) {
            Fp v = F.from_int(x);
            REQUIRE((v * inv(v)) == F.one());
        }
        REQUIRE_THROWS_AS(inv(F.zero()), std::domain_error);
    }

    SECTION("mixed moduli are rejected") {
        FpField G(103);
        REQUIRE_THROWS_AS(a + G.one(), std::invalid_argument);
    }

    SECTION("field validation") {
        REQUIRE_THROWS_AS(FpField(91), std::invalid_argument);   // 7 * 13
        REQUIRE_THROWS_AS(FpField(2), std::invalid_argument);    // even
        REQUIRE_THROWS_AS(FpField(1), std::invalid_argument);
        REQUIRE_NOTHROW(FpField(2147483647));
    }
}

TEST_CASE("Rational field context") {
    RationalField Q;
    REQUIRE(Q.from_int(6) / Q.from_int(4) == Rational(3, 2));
    REQUIRE(is_zero(Q.zero()));
    REQUIRE(inv(Rational(3, 7)) == Rational(7, 3));
    REQUIRE_THROWS_AS(inv(Rational(0)), std::domain_error);

    SECTION("bounded random draws respect the height") {
        SeededRng rng(42);
        RationalField Qh(10);
        for (int i = 0; i < 200; ++i) {
            Rational x = Qh.random(rng);
            REQUIRE(abs(numerator(x)) <= 10 * 10);  // numerator after reduction vs num*den bound
            REQUIRE(denominator(x) >= 1);
            REQUIRE(denominator(x) <= 10);
        }
    }

    SECTION("unbounded-height draws are invalid") {
        SeededRng rng(1);
        RationalField Qunbounded(0);
        REQUIRE_THROWS_AS(Qunbounded.random(rng), std::invalid_argument);
    }
}

TEST_CASE("pinned deterministic draws") {
    // Engine identity: std::mt19937_64 + rejection sampling. These vectors
    // freeze the exact sequences; any change to the draw path breaks them.
    SECTION("first U(0,101) draw at seed 0 is 24") {
        SeededRng rng(0);
        FpField F(101);
        REQUIRE(F.random(rng).value() == 24);
    }
    SECTION("U(0,101) sequence at seed 0") {
        SeededRng rng(0);
        const std::uint64_t expect[5] = {24, 81, 46, 85, 19};
        for (std::uint64_t e : expect) REQUIRE(rng.below(101) == e);
    }
    SECTION("default-prime sequence at seed 0") {
        SeededRng rng(0);
        const std::uint64_t expect[4] = {487738314, 976973447, 74796265, 13553400};
        for (std::uint64_t e : expect) REQUIRE(rng.below(2147483647) == e);
    }
    SECTION("stream derivation is stable and label-sensitive") {
        REQUIRE(SeededRng::derive_seed(0, "lemma-trial", 0) == 5126785398922811216ULL);
        REQUIRE(SeededRng::derive_seed(0, "lemma-trial", 1) == 7103544080444583870ULL);
        REQUIRE(SeededRng::derive_seed(7, "curve/axis", 0) == 5914650460689861030ULL);
        REQUIRE(SeededRng::derive_seed(0, "lemma-trial", 0) !=
                SeededRng::derive_seed(0, "lemma-trials", 0));
        SeededRng master(7);
        REQUIRE(master.stream("curve/axis").seed() == 5914650460689861030ULL);
    }
}

TEST_CASE("rank by exact elimination") {
    FpField F(101);

    SECTION("hand example: 3x2 band matrix has rank 2") {
        auto M = Matrix<FpField>::from_rows(
            F, {{F.one(), F.zero()}, {F.one(), F.one()}, {F.zero(), F.one()}});
        REQUIRE(rank(M) == 2);
    }

    SECTION("empty matrices have rank 0") {
        REQUIRE(rank(Matrix<FpField>(F, 0, 5)) == 0);
        REQUIRE(rank(Matrix<FpField>(F, 5, 0)) == 0);
        REQUIRE(rank(Matrix<FpField>(F, 0, 0)) == 0);
    }

    SECTION("rank equals rank of the transpose") {
        SeededRng rng(101);
        for (int trial = 0; trial < 30; ++trial) {
            auto M = random_matrix(F, rng, rng.below(6) + 1, rng.below(6) + 1);
            // knock out a random row to force rank drops sometimes
            if (rng.below(2) == 0 && M.rows() > 1)
                for (std::size_t c = 0; c < M.cols(); ++c) M.at(0, c) = M.at(M.rows() - 1, c);
            REQUIRE(rank(M) == rank(M.transposed()));
        }
    }
}

TEST_CASE("kernel bases") {
    FpField F(101);

    SECTION("identity has trivial kernel") {
        auto I = Matrix<FpField>::from_rows(F, {{F.one(), F.zero()}, {F.zero(), F.one()}});
        REQUIRE(kernel_basis(I).empty());
    }

    SECTION("zero matrix has the standard basis") {
        Matrix<FpField> Z(F, 2, 3);
        auto basis = kernel_basis(Z);
        REQUIRE(basis.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                REQUIRE(basis[i][j] == (i == j ? F.one() : F.zero()));
    }

    SECTION("no-rows matrix: kernel is everything") {
        REQUIRE(kernel_basis(Matrix<FpField>(F, 0, 4)).size() == 4);
        REQUIRE(kernel_basis(Matrix<FpField>(F, 4, 0)).empty());
    }

    SECTION("rank-nullity and membership on random matrices") {
        SeededRng rng(2024);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t r = rng.below(5) + 1, c = rng.below(7) + 1;
            auto M = random_matrix(F, rng, r, c);
            auto basis = kernel_basis(M);
            REQUIRE(rank(M) + basis.size() == c);
            for (const auto& v : basis)
                for (const Fp& entry : M.apply(v)) REQUIRE(is_zero(entry));
        }
    }
}

TEST_CASE("full-rank fraction of random square matrices") {
    // Over F_p a random n x n matrix is singular with probability < n/p; at
    // p = 2^31 - 1 a thousand 6x6 draws should all be invertible.
    FpField F(2147483647);
    SeededRng rng(31337);
    int full = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t)
        if (rank(random_matrix(F, rng, 6, 6)) == 6) ++full;
    REQUIRE(full == trials);
}

TEST_CASE("rational elimination agrees with prime-field elimination") {
    RationalField Q;
    FpField F(101);
    SeededRng rng(555);

    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = rng.below(5) + 1, c = rng.below(5) + 1;
        Matrix<RationalField> MQ(Q, r, c);
        Matrix<FpField> MF(F, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const std::int64_t e = rng.between(-20, 20);
                MQ.at(i, j) = Q.from_int(e);
                MF.at(i, j) = F.from_int(e);
            }
        const std::size_t rq = rank(MQ), rp = rank(MF);
        // Reduction mod p can only lose rank, and a full-rank reduction
        // certifies full rank in characteristic zero.
        REQUIRE(rq >= rp);
        if (rp == std::min(r, c)) REQUIRE(rq == rp);
    }
}

TEST_CASE("rational elimination is exact under fraction growth") {
    // Hilbert-style matrices are notorious for destroying floating-point
    // elimination; exact rationals must see full rank.
    RationalField Q;
    Matrix<RationalField> H(Q, 5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) H.at(i, j) = Rational(1, i + j + 1);
    REQUIRE(rank(H) == 5);

    // And a singular bordered variant must drop rank exactly.
    Matrix<RationalField> S(Q, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) S.at(i, j) = Rational(1, i + j + 1);
    for (int j = 0; j < 3; ++j) S.at(2, j) = S.at(0, j) * Rational(2) - S.at(1, j) * Rational(3);
    REQUIRE(rank(S) == 2);
    REQUIRE(kernel_basis(S).size() == 1);
}
