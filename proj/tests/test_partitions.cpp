#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hcenter/errors.hpp"
#include "hcenter/partition.hpp"

using namespace hcenter;

TEST_CASE("construction accepts weakly decreasing positive parts only") {
    CHECK(Partition({4, 2, 1}).size() == 7);
    CHECK(Partition().empty());
    CHECK(Partition({3, 3, 3}).length() == 3);
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({1, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
}

TEST_CASE("part is 1-based and 0 beyond the length") {
    Partition p({4, 2, 1});
    CHECK(p.part(1) == 4);
    CHECK(p.part(3) == 1);
    CHECK(p.part(4) == 0);
    CHECK(p.part(100) == 0);
}

TEST_CASE("canonical order is graded with reverse-lex inside a grade") {
    std::vector<Partition> fours = partitions_of(4);
    REQUIRE(fours.size() == 5);
    CHECK(fours[0] == Partition({4}));
    CHECK(fours[1] == Partition({3, 1}));
    CHECK(fours[2] == Partition({2, 2}));
    CHECK(fours[3] == Partition({2, 1, 1}));
    CHECK(fours[4] == Partition({1, 1, 1, 1}));
    CHECK(canonical_less(Partition({3}), Partition({2, 2})));
    CHECK(canonical_less(Partition({4}), Partition({3, 1})));
    CHECK_FALSE(canonical_less(Partition({3, 1}), Partition({4})));

    std::vector<Partition> all = partitions_up_to(3);
    REQUIRE(all.size() == 1 + 1 + 2 + 3);
    CHECK(all[0] == Partition());
    CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
}

TEST_CASE("partition counts match the classical sequence") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));
}

TEST_CASE("conjugate is an involution and transposes the diagram") {
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (const Partition& p : partitions_up_to(6))
        CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("embed appends 1-parts up to the target size") {
    CHECK(embed(Partition({2}), 4) == Partition({2, 1, 1}));
    CHECK(embed(Partition(), 3) == Partition({1, 1, 1}));
    CHECK(embed(Partition({2, 2}), 4) == Partition({2, 2}));
    CHECK_THROWS_AS(embed(Partition({3}), 2), DomainError);
}

TEST_CASE("interlacing sequences list addable and removable contents") {
    InterlacingPair seq = interlacing_sequences(Partition({4, 2, 1}));
    CHECK(seq.xs == std::vector<int>({-3, -1, 1, 4}));
    CHECK(seq.ys == std::vector<int>({-2, 0, 3}));

    InterlacingPair empty_seq = interlacing_sequences(Partition());
    CHECK(empty_seq.xs == std::vector<int>({0}));
    CHECK(empty_seq.ys.empty());

    InterlacingPair row = interlacing_sequences(Partition({3}));
    CHECK(row.xs == std::vector<int>({-1, 3}));
    CHECK(row.ys == std::vector<int>({2}));
}

TEST_CASE("interlacing sequences strictly interlace and have equal sums") {
    for (const Partition& p : partitions_up_to(8)) {
        InterlacingPair seq = interlacing_sequences(p);
        REQUIRE(seq.xs.size() == seq.ys.size() + 1);
        int sx = 0, sy = 0;
        for (size_t i = 0; i < seq.ys.size(); ++i) {
            CHECK(seq.xs[i] < seq.ys[i]);
            CHECK(seq.ys[i] < seq.xs[i + 1]);
            sy += seq.ys[i];
        }
        for (int x : seq.xs) sx += x;
        CHECK(sx == sy);
    }
}

TEST_CASE("grow and shrink move between neighboring diagrams") {
    Partition p({4, 2, 1});
    InterlacingPair seq = interlacing_sequences(p);
    CHECK(grow(p, 1) == Partition({4, 2, 1, 1}));
    CHECK(grow(p, 4) == Partition({5, 2, 1}));
    CHECK(shrink(p, 3) == Partition({3, 2, 1}));
    CHECK_THROWS_AS(grow(p, 0), DomainError);
    CHECK_THROWS_AS(grow(p, static_cast<int>(seq.xs.size()) + 1), DomainError);
    CHECK_THROWS_AS(shrink(Partition(), 1), DomainError);

    for (const Partition& q : partitions_up_to(6)) {
        InterlacingPair s = interlacing_sequences(q);
        for (size_t i = 1; i <= s.xs.size(); ++i) {
            Partition bigger = grow(q, static_cast<int>(i));
            CHECK(bigger.size() == q.size() + 1);
            InterlacingPair sb = interlacing_sequences(bigger);
            size_t j = 1 + (std::find(sb.ys.begin(), sb.ys.end(), s.xs[i - 1]) -
                            sb.ys.begin());
            CHECK(shrink(bigger, static_cast<int>(j)) == q);
        }
    }
}

TEST_CASE("hook products match hand computations") {
    CHECK(hook_product(Partition()) == 1);
    CHECK(hook_product(Partition({1})) == 1);
    CHECK(hook_product(Partition({2, 1})) == 3);
    CHECK(hook_product(Partition({2, 2})) == 12);
    CHECK(hook_product(Partition({4, 2, 1})) == 144);
    for (const Partition& p : partitions_up_to(7))
        CHECK(hook_product(p) == hook_product(conjugate(p)));
}

TEST_CASE("content multiset is sorted and symmetric under conjugation") {
    CHECK(content_multiset(Partition({2, 2})) == std::vector<int>({-1, 0, 0, 1}));
    CHECK(content_multiset(Partition({3})) == std::vector<int>({0, 1, 2}));
    for (const Partition& p : partitions_up_to(6)) {
        std::vector<int> c = content_multiset(p);
        std::vector<int> cc = content_multiset(conjugate(p));
        for (int& v : cc) v = -v;
        std::sort(cc.begin(), cc.end());
        CHECK(c == cc);
    }
}

TEST_CASE("text form") {
    CHECK(to_string(Partition({4, 2, 1})) == "(4,2,1)");
    CHECK(to_string(Partition()) == "()");
}
