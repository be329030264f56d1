#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "corequot/enumeration.hpp"
#include "corequot/littlewood.hpp"

using namespace corequot;

TEST_CASE("split_by_color on the running example") {
    const auto arrays = split_by_color(to_colored(to_frobenius(Partition{8, 7, 7, 4, 4, 2}), 3));
    REQUIRE(arrays.size() == 3);
    CHECK(arrays[0] == TwoRowedArray({0}, {1, 0}));
    CHECK(arrays[1] == TwoRowedArray({2, 1}, {1, 0}));
    CHECK(arrays[2] == TwoRowedArray({1}, {}));

    const auto doubled = split_by_color(to_colored(to_frobenius(Partition{9, 6, 6, 5, 3, 1, 1, 1}), 3));
    REQUIRE(doubled.size() == 3);
    CHECK(doubled[0] == TwoRowedArray({1}, {0}));
    CHECK(doubled[1] == TwoRowedArray({1, 0}, {2}));
    CHECK(doubled[2] == TwoRowedArray({2}, {1, 0}));

    const auto empty = split_by_color(to_colored(FrobeniusSymbol{}, 4));
    REQUIRE(empty.size() == 4);
    for (const auto& a : empty)
        CHECK(a == TwoRowedArray{});
}

TEST_CASE("split row lengths add up to the symbol length") {
    for (long long n = 0; n <= 16; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            const FrobeniusSymbol f = to_frobenius(*p);
            for (long long t = 1; t <= 4; ++t) {
                const auto arrays = split_by_color(to_colored(f, t));
                long long tops = 0, bottoms = 0;
                for (const auto& a : arrays) {
                    tops += a.top_length();
                    bottoms += a.bottom_length();
                }
                CHECK(tops == f.columns());
                CHECK(bottoms == f.columns());
            }
        }
    }
}

TEST_CASE("decompose worked examples") {
    const Decomposition d = decompose(Partition{8, 7, 7, 4, 4, 2}, 3);
    CHECK(d.core == Partition{3, 1, 1});
    CHECK(d.quotient == std::vector<Partition>{Partition{2}, Partition{3, 3}, Partition{1}});
    CHECK(d.charvec == std::vector<long long>{-1, 0, 1});

    const Decomposition sc = decompose(Partition{8, 5, 5, 4, 3, 1, 1, 1}, 3);
    CHECK(sc.core == Partition{1});
    CHECK(sc.quotient ==
          std::vector<Partition>{Partition{1, 1}, Partition{3, 1, 1}, Partition{2}});

    const Decomposition dd = decompose(Partition{9, 6, 6, 5, 3, 1, 1, 1}, 3);
    CHECK(dd.core == Partition{2});
    CHECK(dd.quotient ==
          std::vector<Partition>{Partition{2}, Partition{1, 1, 1, 1}, Partition{4}});

    CHECK_THROWS_AS(decompose(Partition{2}, 0), std::domain_error);
}

TEST_CASE("decompose at t=1 returns the partition itself as the quotient") {
    const Partition lambda{8, 7, 7, 4, 4, 2};
    const Decomposition d = decompose(lambda, 1);
    CHECK(d.core == Partition{});
    CHECK(d.quotient == std::vector<Partition>{lambda});
    CHECK(d.charvec == std::vector<long long>{0});
}

TEST_CASE("compose worked examples") {
    CHECK(compose(Partition{3, 1, 1}, {Partition{2}, Partition{3, 3}, Partition{1}}, 3) ==
          Partition{8, 7, 7, 4, 4, 2});
    CHECK(compose(Partition{}, {Partition{}, Partition{}, Partition{}}, 3) == Partition{});
    CHECK(compose(Partition{2}, {Partition{2}, Partition{1, 1, 1, 1}, Partition{4}}, 3) ==
          Partition{9, 6, 6, 5, 3, 1, 1, 1});
}

TEST_CASE("compose validates its inputs") {
    // (2) is not a 3-core quotient list of length 2, and (2,1) is not a 2-core.
    CHECK_THROWS_AS(compose(Partition{3, 1, 1}, {Partition{}, Partition{}}, 3),
                    std::domain_error);
    CHECK_THROWS_AS(compose(Partition{2}, {Partition{}, Partition{}}, 2), std::domain_error);
    CHECK_THROWS_AS(compose(Partition{}, {Partition{}}, 0), std::domain_error);
}

TEST_CASE("characteristic vector") {
    CHECK(char_vector(Partition{8, 7, 7, 4, 4, 2}, 3) == std::vector<long long>{-1, 0, 1});
    CHECK(char_vector(Partition{}, 4) == std::vector<long long>{0, 0, 0, 0});
    // CF_2((2)) has a single column (0 color 1 | 0 color 1), so both colors
    // balance and the vector vanishes, matching the empty 2-core.
    CHECK(char_vector(Partition{2}, 2) == std::vector<long long>{0, 0});
    CHECK(decompose(Partition{2}, 2).core == Partition{});
}

TEST_CASE("characteristic vector sums to zero and matches the core") {
    for (long long n = 0; n <= 16; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 1; t <= 5; ++t) {
                const Decomposition d = decompose(*p, t);
                CHECK(std::accumulate(d.charvec.begin(), d.charvec.end(), 0LL) == 0);
                CHECK(core_char_vector(d.core, t) == d.charvec);
            }
        }
    }
}

TEST_CASE("roundtrip, size identity, and core oracle") {
    for (long long n = 0; n <= 18; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 1; t <= 5; ++t) {
                const Decomposition d = decompose(*p, t);
                long long quotient_size = 0;
                for (const Partition& q : d.quotient)
                    quotient_size += q.size();
                CHECK(n == d.core.size() + t * quotient_size);
                CHECK(compose(d.core, d.quotient, t) == *p);
                CHECK(d.core == strip_t_core(*p, t));
            }
        }
    }
}

TEST_CASE("decompose inverts compose on core/quotient pairs") {
    for (long long t = 2; t <= 3; ++t) {
        std::vector<Partition> cores;
        for (long long n = 0; n <= 8; ++n) {
            PartitionStream stream(n, PartitionClass::t_core, t);
            while (auto core = stream.next())
                cores.push_back(*core);
        }
        // All t-tuples of partitions with total size <= 4.
        std::vector<std::vector<Partition>> tuples;
        std::vector<Partition> tuple(static_cast<std::size_t>(t));
        auto rec = [&](auto&& self, long long slot, long long budget) -> void {
            if (slot == t) {
                tuples.push_back(tuple);
                return;
            }
            for (long long k = 0; k <= budget; ++k) {
                PartitionStream stream(k);
                while (auto q = stream.next()) {
                    tuple[static_cast<std::size_t>(slot)] = *q;
                    self(self, slot + 1, budget - k);
                }
            }
        };
        rec(rec, 0, 4);

        for (const Partition& core : cores) {
            for (const auto& quotient : tuples) {
                const Partition lambda = compose(core, quotient, t);
                const Decomposition d = decompose(lambda, t);
                CHECK(d.core == core);
                CHECK(d.quotient == quotient);
            }
        }
    }
}

TEST_CASE("hooks of length t transfer to hooks of length 1 in the quotient") {
    const Decomposition d = decompose(Partition{8, 7, 7, 4, 4, 2}, 3);
    CHECK(quotient_hook1_count(d) == 3);
    CHECK(count_hooks_of_length(Partition{8, 7, 7, 4, 4, 2}, 3) == 3);
    CHECK(quotient_hook1_count(Decomposition{}) == 0);
    CHECK(quotient_hook1_count(decompose(Partition{2, 1}, 3)) ==
          count_hooks_of_length(Partition{2, 1}, 3));

    for (long long n = 0; n <= 16; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next())
            for (long long t = 2; t <= 6; ++t)
                CHECK(count_hooks_of_length(*p, t) == quotient_hook1_count(decompose(*p, t)));
    }
}

TEST_CASE("partition counts factor through cores and quotients") {
    // p(n) = sum_k c_t(n - t*k) * (number of t-tuples of partitions with
    // total size k), both sides by exhaustive enumeration.
    const long long max_n = 15;
    std::vector<long long> p_counts(max_n + 1);
    for (long long n = 0; n <= max_n; ++n)
        p_counts[static_cast<std::size_t>(n)] = count_partitions(n);

    for (long long t = 2; t <= 4; ++t) {
        // t-fold convolution of the partition counts.
        std::vector<long long> multi(max_n + 1, 0);
        multi[0] = 1;
        for (long long copy = 0; copy < t; ++copy) {
            std::vector<long long> next(max_n + 1, 0);
            for (long long a = 0; a <= max_n; ++a)
                for (long long b = 0; a + b <= max_n; ++b)
                    next[static_cast<std::size_t>(a + b)] +=
                        multi[static_cast<std::size_t>(a)] * p_counts[static_cast<std::size_t>(b)];
            multi = std::move(next);
        }
        for (long long n = 0; n <= max_n; ++n) {
            long long total = 0;
            for (long long k = 0; t * k <= n; ++k)
                total += count_t_cores(n - t * k, t) * multi[static_cast<std::size_t>(k)];
            CHECK(total == p_counts[static_cast<std::size_t>(n)]);
        }
    }
}
