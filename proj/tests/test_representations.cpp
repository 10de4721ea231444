#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "perfectrep/errors.hpp"
#include "perfectrep/representations.hpp"

using namespace perfectrep;
namespace oracle = perfectrep::testing;

namespace {

std::vector<std::vector<Natural>> enumerated_divisors(const RepReport& report, const PerfectNumber& pn) {
    std::vector<std::vector<Natural>> out;
    for (const auto& s : *report.subsets) out.push_back(subset_divisors(s, pn));
    return out;
}

}  // namespace

TEST_CASE("count_representations examples") {
    const auto six = make_perfect(2);
    const auto three = count_representations(3, six, true);
    CHECK(three.count == 2);
    REQUIRE(three.subsets.has_value());
    // Ascending by mask: {1,2} is 0b011, {3} is 0b100.
    CHECK(enumerated_divisors(three, six) == std::vector<std::vector<Natural>>{{1, 2}, {3}});
    CHECK(count_representations(4, six, false).count == 1);
    CHECK_FALSE(count_representations(4, six, false).subsets.has_value());
    CHECK(count_representations(6, six, false).count == 1);

    const auto twenty_eight = make_perfect(3);
    CHECK(count_representations(14, twenty_eight, false).count == 2);
    CHECK(count_representations(5, twenty_eight, false).count == 1);

    CHECK_THROWS_AS(count_representations(0, six, false), RangeError);
    CHECK_THROWS_AS(count_representations(7, six, false), RangeError);
}

TEST_CASE("count_representations capability ceiling") {
    const auto pn = make_perfect(17);
    try {
        (void)count_representations(5, pn, false);
        FAIL("expected capability error");
    } catch (const CapabilityError& e) {
        CHECK(e.code() == "count_ceiling");
        CHECK(std::string(e.what()).find("13") != std::string::npos);
    }
    // A lowered ceiling refuses even small exponents.
    CHECK_THROWS_AS(count_representations(5, make_perfect(5), false, {.ceiling = 3}), CapabilityError);
}

TEST_CASE("strategy ladder") {
    CHECK(count_representations(5, make_perfect(7), false).strategy == CountStrategy::exhaustive);
    CHECK(count_representations(5, make_perfect(13), false).strategy == CountStrategy::meet_in_the_middle);
}

TEST_CASE("predict_count examples") {
    const auto six = make_perfect(2);
    CHECK(predict_count(3, six) == 2);
    CHECK(predict_count(6, six) == 1);
    CHECK(predict_count(21, make_perfect(3)) == 2);
    CHECK_THROWS_AS(predict_count(0, six), RangeError);
    CHECK_THROWS_AS(predict_count(7, six), RangeError);
}

TEST_CASE("search agrees with brute force and with the closed form") {
    for (unsigned p : {2u, 3u, 5u}) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        const auto divisors = oracle::canonical_divisors(p);
        const auto n = oracle::perfect_value(p);
        std::uint64_t mass = 0;
        for (std::uint64_t m = 1; m <= n; ++m) {
            const auto report = count_representations(m, pn, true);
            const auto expected = oracle::masks_summing_to(m, divisors);
            REQUIRE(report.count == expected.size());
            REQUIRE(report.count == predict_count(m, pn));
            std::vector<std::uint64_t> masks;
            for (const auto& s : *report.subsets) masks.push_back(static_cast<std::uint64_t>(s.mask()));
            REQUIRE(masks == expected);
            mass += report.count;
        }
        CHECK(mass == total_subsets(pn));
    }
}

TEST_CASE("meet-in-the-middle matches the full subset-sum histogram") {
    const auto pn = make_perfect(13);
    const auto hist = subset_sum_histogram(pn);
    const auto mp = static_cast<std::uint64_t>(pn.mersenne());
    const auto n = static_cast<std::uint64_t>(pn.n());
    for (std::uint64_t m : {std::uint64_t{1}, mp - 1, mp, mp + 1, 2 * mp, 4095 * mp, n - 1, n, std::uint64_t{123456}}) {
        CAPTURE(m);
        const auto report = count_representations(m, pn, true);
        CHECK(report.count == hist.counts[m]);
        CHECK(report.count == predict_count(m, pn));
        for (const auto& s : *report.subsets) CHECK(subset_value(s, pn) == m);
        CHECK(std::is_sorted(report.subsets->begin(), report.subsets->end()));
    }
}

TEST_CASE("results do not depend on worker count") {
    for (unsigned p : {5u, 7u, 13u}) {
        const auto pn = make_perfect(p);
        const Natural m = pn.mersenne() * 3;
        const auto base = count_representations(m, pn, true, {.workers = 1});
        for (unsigned workers : {2u, 3u, 8u}) {
            CAPTURE(p);
            CAPTURE(workers);
            const auto other = count_representations(m, pn, true, {.workers = workers});
            CHECK(other.count == base.count);
            CHECK(*other.subsets == *base.subsets);
        }
    }
}

TEST_CASE("alternate_representation examples") {
    const auto six = make_perfect(2);
    CHECK(subset_divisors(alternate_representation(decompose(3, six), six), six) == std::vector<Natural>{3});

    const auto pn = make_perfect(3);
    CHECK(subset_divisors(alternate_representation(decompose(7, pn), pn), pn) == std::vector<Natural>{7});
    const auto fourteen = decompose(14, pn);
    CHECK(fourteen.k == 1);
    CHECK(fourteen.r == 7);
    CHECK(subset_divisors(fourteen.subset, pn) == std::vector<Natural>{1, 2, 4, 7});
    CHECK(subset_divisors(alternate_representation(fourteen, pn), pn) == std::vector<Natural>{14});
}

TEST_CASE("alternate_representation rejects unique targets") {
    const auto pn = make_perfect(3);
    for (std::uint64_t m : {1u, 5u, 13u, 28u}) {
        CAPTURE(m);
        try {
            (void)alternate_representation(decompose(m, pn), pn);
            FAIL("expected rejection");
        } catch (const DomainError& e) {
            CHECK(e.code() == "no_alternate");
        }
    }
    // A tampered decomposition is not canonical.
    auto d = decompose(14, pn);
    d.subset = DivisorSubset(3, 0b01000);
    CHECK_THROWS_AS(alternate_representation(d, pn), DomainError);
    CHECK_THROWS_AS(alternate_representation(decompose(3, make_perfect(2)), pn), DomainError);
}

TEST_CASE("canonical and alternate are exactly the enumerated pair") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        const auto blocks = std::uint64_t{1} << (p - 1);
        for (std::uint64_t j = 1; j < blocks; ++j) {
            const Natural m = pn.mersenne() * j;
            const auto canonical = decompose(m, pn);
            const auto alternate = alternate_representation(canonical, pn);
            CHECK_FALSE(alternate == canonical.subset);
            CHECK(subset_value(alternate, pn) == m);
            auto pair = std::vector<DivisorSubset>{canonical.subset, alternate};
            std::sort(pair.begin(), pair.end());
            CHECK(*count_representations(m, pn, true).subsets == pair);
        }
    }
}

TEST_CASE("total_subsets and counting identity") {
    CHECK(total_subsets(make_perfect(2)) == 7);
    CHECK(total_subsets(make_perfect(3)) == 31);
    CHECK(total_subsets(make_perfect(5)) == 511);
    for (unsigned p : mersenne_exponents_up_to(31)) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        CHECK(verify_counting_identity(pn));
        CHECK(total_subsets(pn) - pn.n() == pow2(p - 1) - 1);
    }
    CHECK(verify_counting_identity(make_perfect(127)));
}

TEST_CASE("subset-sum histogram") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        CAPTURE(p);
        const auto pn = make_perfect(p);
        const auto hist = subset_sum_histogram(pn);
        const auto n = oracle::perfect_value(p);
        CHECK(hist.above_n == 0);
        CHECK(hist.in_range == total_subsets(pn));
        REQUIRE(hist.counts.size() == n + 1);
        for (std::uint64_t m = 1; m <= n; ++m) REQUIRE(hist.counts[m] == predict_count(m, pn));
    }
    CHECK_THROWS_AS(subset_sum_histogram(make_perfect(17)), CapabilityError);
}
