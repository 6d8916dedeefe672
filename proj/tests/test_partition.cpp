#include <doctest.h>

#include <set>

#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/partition.hpp"
#include "oracles.hpp"

using arw::Partition;
using arw::partitions_of;

TEST_CASE("worked example (4,2,2,1)") {
    Partition la{4, 2, 2, 1};
    CHECK(la.weight() == 9);
    CHECK(la.length() == 4);
    CHECK((la.conjugate() == Partition{4, 3, 1, 1}));
    CHECK(la.n_stat() == 9);
    CHECK(la.centralizer_order() == 32);

    const std::vector<std::vector<int>> contents{{0, 1, 2, 3}, {-1, 0}, {-2, -1}, {-3}};
    const std::vector<std::vector<int>> hooks{{7, 5, 2, 1}, {4, 2}, {3, 1}, {1}};
    for (int r = 1; r <= la.length(); ++r) {
        for (int c = 1; c <= la.parts()[r - 1]; ++c) {
            CHECK(la.content(r, c) == contents[r - 1][c - 1]);
            CHECK(la.hook_length(r, c) == hooks[r - 1][c - 1]);
        }
    }
}

TEST_CASE("basic statistics") {
    CHECK((Partition{}.weight() == 0));
    CHECK((Partition{5}.weight() == 5));
    CHECK((Partition{}.length() == 0));
    CHECK((Partition{1, 1, 1}.length() == 3));
    CHECK((Partition{}.conjugate() == Partition{}));
    CHECK((Partition{3}.conjugate() == Partition{1, 1, 1}));
    CHECK((Partition{}.centralizer_order() == 1));
    CHECK((Partition{1, 1, 1}.centralizer_order() == 6));
    CHECK((Partition{}.n_stat() == 0));
    CHECK((Partition{2, 2}.n_stat() == 2));
    CHECK((Partition{1}.content(1, 1) == 0));
    CHECK((Partition{1}.hook_length(1, 1) == 1));
}

TEST_CASE("construction validates") {
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 3}), arw::DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), arw::DomainError);
    CHECK((Partition({3, 2, 0, 0}) == Partition{3, 2}));   // trailing zeros stripped
    CHECK_THROWS_AS(Partition({2, 1}).content(3, 1), arw::DomainError);
    CHECK_THROWS_AS(Partition({2, 1}).hook_length(1, 3), arw::DomainError);
}

TEST_CASE("text form round trip") {
    CHECK((Partition{4, 2, 2, 1}.to_string() == "[4,2,2,1]"));
    CHECK((Partition{}.to_string() == "[]"));
    CHECK((Partition::from_string("[4,2,2,1]") == Partition{4, 2, 2, 1}));
    CHECK((Partition::from_string("[]") == Partition{}));
    CHECK((Partition::from_string(" [ 3 , 1 ] ") == Partition{3, 1}));
    CHECK_THROWS(Partition::from_string("4,2"));
    CHECK_THROWS(Partition::from_string("[4,,2]"));
}

TEST_CASE("enumeration order and counts") {
    CHECK((partitions_of(0) == std::vector<Partition>{Partition{}}));
    CHECK(partitions_of(4).size() == 5);
    // reverse lexicographic: largest first part first
    CHECK(partitions_of(4) ==
          std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                 Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
    CHECK(partitions_of(9).size() == 30);
}

TEST_CASE("enumeration matches the pentagonal-number recurrence up to 30") {
    int saved = arw::degree_cap();
    arw::set_degree_cap(30);
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(arw::partition_count(n) == arw::oracle::pentagonal_partition_count(n));
        // no duplicates
        std::set<Partition> unique(partitions_of(n).begin(), partitions_of(n).end());
        CHECK(unique.size() == partitions_of(n).size());
    }
    arw::set_degree_cap(saved);
}

TEST_CASE("degree cap is enforced") {
    int saved = arw::degree_cap();
    arw::set_degree_cap(6);
    CHECK_THROWS_AS(partitions_of(7), arw::DomainError);
    arw::set_degree_cap(saved);
}

TEST_CASE("conjugation is involutive up to weight 12") {
    int saved = arw::degree_cap();
    arw::set_degree_cap(12);
    for (int n = 0; n <= 12; ++n)
        for (const auto& la : partitions_of(n)) CHECK(la.conjugate().conjugate() == la);
    arw::set_degree_cap(saved);
}

TEST_CASE("hook multiset is conjugation invariant and boxes count the weight") {
    int saved = arw::degree_cap();
    arw::set_degree_cap(10);
    for (int n = 0; n <= 10; ++n) {
        for (const auto& la : partitions_of(n)) {
            std::multiset<int> hooks, hooks_conj;
            int boxes = 0;
            for (int r = 1; r <= la.length(); ++r)
                for (int c = 1; c <= la.parts()[r - 1]; ++c) {
                    hooks.insert(la.hook_length(r, c));
                    ++boxes;
                }
            CHECK(boxes == la.weight());
            Partition conj = la.conjugate();
            for (int r = 1; r <= conj.length(); ++r)
                for (int c = 1; c <= conj.parts()[r - 1]; ++c)
                    hooks_conj.insert(conj.hook_length(r, c));
            CHECK(hooks == hooks_conj);
        }
    }
    arw::set_degree_cap(saved);
}

TEST_CASE("class equation: sum of n!/z over partitions of n is n!") {
    long long factorial = 1;
    for (int n = 0; n <= 10; ++n) {
        if (n > 0) factorial *= n;
        long long total = 0;
        for (const auto& la : partitions_of(n)) {
            long long z = la.centralizer_order();
            CHECK(factorial % z == 0);   // class sizes are integers
            total += factorial / z;
        }
        CHECK(total == factorial);
    }
}

TEST_CASE("canonical order sorts by weight then reverse lexicographically") {
    CHECK((Partition{} < Partition{1}));
    CHECK((Partition{2} < Partition{1, 1}));
    CHECK((Partition{3, 1} < Partition{2, 2}));
    CHECK((Partition{1, 1} < Partition{3}));   // weight first
}

TEST_CASE("part multiset helpers") {
    CHECK((Partition{2, 1}.union_parts(Partition{3, 1}) == Partition{3, 2, 1, 1}));
    CHECK((Partition{}.union_parts(Partition{2}) == Partition{2}));
    CHECK((Partition{3, 1}.scaled(2) == Partition{6, 2}));
    CHECK((Partition{2, 2, 1}.multiplicity(2) == 2));
}
