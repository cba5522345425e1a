#include "doctest.h"

#include <algorithm>

#include "g2split/triples.hpp"

using namespace g2split;

TEST_CASE("published triples all verify") {
    const auto& rows = table2_triples();
    REQUIRE(rows.size() == 33);
    for (const auto& t : rows) {
        CAPTURE(t.d.get_str());
        CAPTURE(t.dprime.get_str());
        CAPTURE(t.p1.get_str());
        auto v = verify_triple(t);
        CHECK(v.hypothesis_i);
        CHECK(v.pair_excluded());
    }
}

TEST_CASE("hypothesis i rejects bad data") {
    // right primes, wrong trace
    CHECK_FALSE(verify_hypothesis_i({Int(7), Int(3), Int(29), Int(113), Int(4)}));
    // 13 is inert in Q(sqrt(-7))
    CHECK_FALSE(verify_hypothesis_i({Int(7), Int(3), Int(13), Int(113), Int(2)}));
    // 29 is split in Q(sqrt(-3)), not inert
    CHECK_FALSE(verify_hypothesis_i({Int(7), Int(4), Int(29), Int(113), Int(2)}));
    CHECK_FALSE(verify_hypothesis_i({Int(7), Int(3), Int(15), Int(113), Int(2)}));
}

TEST_CASE("malformed triples throw") {
    CHECK_THROWS(verify_hypothesis_i({Int(3), Int(7), Int(29), Int(113), Int(2)}));
    CHECK_THROWS(verify_hypothesis_i({Int(4), Int(7), Int(29), Int(113), Int(2)}));
    CHECK_THROWS(verify_hypothesis_i({Int(7), Int(7), Int(29), Int(113), Int(2)}));
    CHECK_THROWS(verify_hypothesis_i({Int(7), Int(3), Int(29), Int(29), Int(2)}));
    CHECK_THROWS(verify_hypothesis_i({Int(7), Int(3), Int(3), Int(113), Int(2)}));
    CHECK_THROWS(find_triples(Int(3), Int(7), Int(100)));
}

TEST_CASE("hypothesis ii structure") {
    // a = 1 is vacuous
    auto v1 = verify_hypothesis_ii({Int(19), Int(3), Int(5), Int(233), Int(1)});
    CHECK(v1.empty());
    // a = 6 needs q = 2 and q = 3, both decided for (8, 3)
    auto v6 = verify_hypothesis_ii({Int(8), Int(3), Int(17), Int(41), Int(6)});
    REQUIRE(v6.count(2) == 1);
    REQUIRE(v6.count(3) == 1);
    CHECK(v6.at(2).verdict == QVerdict::True);
    CHECK(v6.at(3).verdict == QVerdict::True);
    // q = 2 against d' = 4 cannot separate: any quadratic field occurs there
    auto v2 = verify_hypothesis_ii({Int(7), Int(4), Int(29), Int(113), Int(2)});
    REQUIRE(v2.count(2) == 1);
    CHECK(v2.at(2).verdict == QVerdict::Inconclusive);
    // q = 5 has no criterion
    auto v5 = verify_hypothesis_ii({Int(11), Int(3), Int(7), Int(53), Int(5)});
    REQUIRE(v5.count(5) == 1);
    CHECK(v5.at(5).verdict == QVerdict::Inconclusive);
}

TEST_CASE("find_triples recovers published rows") {
    auto t73 = find_triples(Int(7), Int(3), Int(200));
    auto has = [](const std::vector<PrimeTriple>& v, long p1, long p2, long a) {
        return std::any_of(v.begin(), v.end(), [&](const PrimeTriple& t) {
            return t.p1 == p1 && t.p2 == p2 && t.a == a;
        });
    };
    CHECK(has(t73, 29, 113, 2));
    CHECK(std::is_sorted(t73.begin(), t73.end(), [](const PrimeTriple& x, const PrimeTriple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.p1 != y.p1) return x.p1 < y.p1;
        return x.p2 < y.p2;
    }));
    auto t163 = find_triples(Int(163), Int(67), Int(400));
    CHECK(has(t163, 41, 367, 1));
    // every enumerated triple satisfies hypothesis i by construction
    for (const auto& t : t73) CHECK(verify_hypothesis_i(t));
}

TEST_CASE("classify_all_pairs at a moderate bound") {
    auto cls = classify_all_pairs(Int(3000));
    CHECK(cls.size() == 36);
    auto find_pair = [&](long d, long dp) -> const PairClassification& {
        auto it = std::find_if(cls.begin(), cls.end(), [&](const PairClassification& p) {
            return p.d == d && p.dprime == dp;
        });
        REQUIRE(it != cls.end());
        return *it;
    };
    // the three surviving products
    CHECK_FALSE(find_pair(4, 3).excluded);
    CHECK_FALSE(find_pair(7, 4).excluded);
    CHECK_FALSE(find_pair(8, 4).excluded);
    // pairs whose published certificates fit under the bound
    for (auto [d, dp] : {std::pair<long, long>{7, 3}, {8, 3}, {8, 7}, {11, 3}, {11, 4}, {19, 3}}) {
        const auto& pc = find_pair(d, dp);
        CHECK(pc.excluded);
        REQUIRE(pc.certificates.size() == 1);
        CHECK(pc.certificates[0].pair_excluded());
    }
    // any claimed exclusion carries a verifiable certificate
    for (const auto& pc : cls) {
        if (!pc.excluded) continue;
        REQUIRE(pc.certificates.size() == 1);
        CHECK(verify_triple(pc.certificates[0].triple).pair_excluded());
    }
}
