#include <doctest.h>

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "perfectrep/errors.hpp"
#include "perfectrep/mersenne.hpp"

using namespace perfectrep;
using perfectrep::testing::is_prime_trial;
using perfectrep::testing::sigma_by_enumeration;

TEST_CASE("lucas_lehmer examples") {
    CHECK(lucas_lehmer(2));
    CHECK_FALSE(lucas_lehmer(11));  // 2047 = 23 * 89
    CHECK(lucas_lehmer(13));
    CHECK_THROWS_AS(lucas_lehmer(1), DomainError);
    CHECK_THROWS_AS(lucas_lehmer(0), DomainError);
}

TEST_CASE("lucas_lehmer agrees with trial division for p <= 31") {
    std::vector<unsigned> accepted;
    for (unsigned p = 2; p <= 31; ++p) {
        const std::uint64_t mp = (std::uint64_t{1} << p) - 1;
        CAPTURE(p);
        CHECK(lucas_lehmer(p) == is_prime_trial(mp));
        if (lucas_lehmer(p)) accepted.push_back(p);
    }
    CHECK(accepted == std::vector<unsigned>{2, 3, 5, 7, 13, 17, 19, 31});
}

TEST_CASE("lucas_lehmer beyond word size") {
    CHECK(lucas_lehmer(61));
    CHECK(lucas_lehmer(89));
    CHECK(lucas_lehmer(127));
    CHECK_FALSE(lucas_lehmer(67));
    CHECK_FALSE(lucas_lehmer(101));
    CHECK(mersenne_exponents_up_to(130) == std::vector<unsigned>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127});
}

TEST_CASE("sigma") {
    CHECK(sigma(6) == 12);
    CHECK(sigma(1) == 1);
    CHECK(sigma(20) == 42);
    CHECK(sigma(28) == 56);
    CHECK_THROWS_AS(sigma(0), DomainError);

    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CAPTURE(n);
        REQUIRE(sigma(Natural(n)) == sigma_by_enumeration(n));
    }
}

TEST_CASE("make_perfect small exponents") {
    const auto six = make_perfect(2);
    CHECK(six.n() == 6);
    CHECK(six.mersenne() == 3);
    CHECK(six.proper_divisors() == std::vector<Natural>{1, 2, 3});

    const auto twenty_eight = make_perfect(3);
    CHECK(twenty_eight.n() == 28);
    CHECK(twenty_eight.proper_divisors() == std::vector<Natural>{1, 2, 4, 7, 14});

    CHECK(make_perfect(7).n() == 8128);
}

TEST_CASE("make_perfect rejects non-Mersenne exponents") {
    for (unsigned p : {0u, 1u, 4u, 11u, 23u, 29u}) {
        CAPTURE(p);
        try {
            (void)make_perfect(p);
            FAIL("expected rejection");
        } catch (const DomainError& e) {
            CHECK(e.code() == "not_mersenne");
        }
    }
}

TEST_CASE("perfect number invariants") {
    for (unsigned p : {2u, 3u, 5u, 7u, 13u}) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        const auto n = static_cast<std::uint64_t>(pn.n());
        CHECK(n == perfectrep::testing::perfect_value(p));
        CHECK(sigma(pn.n()) == 2 * pn.n());
        CHECK(sigma_by_enumeration(n) == 2 * n);
        REQUIRE(pn.divisor_count() == 2 * p - 1);
        Natural sum = 0;
        for (std::size_t i = 0; i < pn.divisor_count(); ++i) {
            if (i > 0) CHECK(pn.proper_divisors()[i - 1] < pn.proper_divisors()[i]);
            // Increasing order is also the canonical bit order.
            CHECK(pn.proper_divisors()[i] == pn.divisor_at_bit(static_cast<unsigned>(i)));
            sum += pn.proper_divisors()[i];
        }
        CHECK(sum == pn.n());
    }
    for (unsigned p : {17u, 19u, 31u, 61u, 89u}) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        CHECK(pn.n() == pow2(p - 1) * (pow2(p) - 1));
        CHECK(pn.divisor_count() == 2 * p - 1);
    }
    CHECK_THROWS_AS(make_perfect(3).divisor_at_bit(5), DomainError);
}
