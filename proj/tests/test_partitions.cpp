#include "oracles.hpp"

#include <springer_htop/partitions.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace htop;

TEST(Partition, ParseAndPrint)
{
    EXPECT_EQ(Partition::parse("2,1,1").to_string(), "2,1,1");
    EXPECT_EQ(Partition::parse("-").size(), 0);
    EXPECT_EQ(Partition::parse("0").length(), 0);
    EXPECT_EQ(Partition({3, 1, 0, 0}).length(), 2);
    EXPECT_THROW(Partition::parse("1,2"), InputError);
    EXPECT_THROW(Partition::parse("2,-1"), InputError);
    EXPECT_THROW(Partition::parse("a"), InputError);
    EXPECT_EQ(Partition::from_unsorted({1, 3, 0, 2}).to_string(), "3,2,1");
}

TEST(Partition, DualIsInvolution)
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            EXPECT_EQ(dual(dual(p)), p);
            EXPECT_EQ(dual(p).size(), n);
        }
    EXPECT_EQ(dual(Partition{3, 1}).to_string(), "2,1,1");
}

TEST(Partition, EnumerationMatchesCompositionFilter)
{
    for (int n = 0; n <= 12; ++n) {
        std::set<std::vector<int>> got;
        const auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            got.insert(parts[i].parts());
            if (i > 0) {
                EXPECT_GT(parts[i - 1], parts[i]) << "order at n=" << n;
            }
        }
        EXPECT_EQ(got.size(), parts.size());
        EXPECT_EQ(got, oracle::partitions_by_compositions(n)) << "n=" << n;
    }
    EXPECT_EQ(enumerate_partitions(4).size(), 5u);
}

TEST(Bipartition, ParseAndCount)
{
    const auto rho = Bipartition::parse("2,1|1");
    EXPECT_EQ(rho.first.to_string(), "2,1");
    EXPECT_EQ(rho.second.to_string(), "1");
    EXPECT_EQ(Bipartition::parse("-|1,1").to_string(), "-|1,1");
    EXPECT_THROW(Bipartition::parse("2,1"), InputError);
    EXPECT_EQ(enumerate_bipartitions(3).size(), 10u);

    std::vector<std::string> d2;
    for (const auto& b : enumerate_bipartitions(2))
        d2.push_back(b.to_string());
    EXPECT_EQ(d2, (std::vector<std::string>{"2|-", "1,1|-", "1|1", "-|2", "-|1,1"}));

    for (int d = 0; d <= 6; ++d) {
        std::size_t expected = 0;
        for (int k = 0; k <= d; ++k)
            expected += oracle::partitions_by_compositions(k).size() * oracle::partitions_by_compositions(d - k).size();
        EXPECT_EQ(enumerate_bipartitions(d).size(), expected);
    }
}

TEST(TypeC, EnumerationAndValidation)
{
    EXPECT_TRUE(is_type_c(Partition{2, 1, 1}));
    EXPECT_FALSE(is_type_c(Partition{3, 1}));
    EXPECT_THROW(TypeCPartition::parse("3,1"), InputError);
    EXPECT_THROW(TypeCPartition::parse("2,1"), InputError);
    EXPECT_EQ(enumerate_type_c(4).size(), 4u);
    for (int two_d = 0; two_d <= 12; two_d += 2) {
        std::size_t expected = 0;
        for (const auto& q : oracle::partitions_by_compositions(two_d))
            expected += oracle::is_type_c(q);
        EXPECT_EQ(enumerate_type_c(two_d).size(), expected);
    }
}

TEST(SymComposition, Validation)
{
    const auto q = SymComposition::parse("1,1,0,1,1");
    EXPECT_EQ(q.big_n(), 5);
    EXPECT_EQ(q.n_param(), 2);
    EXPECT_EQ(q.at(2), 1);
    EXPECT_EQ(q.middle(), 0);
    EXPECT_THROW(SymComposition::parse("1,0,0,1"), InputError);
    EXPECT_THROW(SymComposition::parse("1,0,0,0,2"), InputError);
    EXPECT_THROW(SymComposition::parse("0,1,0"), InputError);
}

TEST(SymComposition, EnumerateQMatchesBruteForce)
{
    for (int n = 0; n <= 3; ++n)
        for (int big_d = 0; big_d <= 8; big_d += 2) {
            const int big_n = 2 * n + 1;
            std::set<std::vector<int>> brute;
            std::vector<int> v(static_cast<std::size_t>(big_n), 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == big_n) {
                    int total = 0;
                    bool sym = true;
                    for (int i = 0; i < big_n; ++i) {
                        total += v[i];
                        sym = sym && v[i] == v[big_n - 1 - i];
                    }
                    if (sym && total == big_d)
                        brute.insert(v);
                    return;
                }
                for (int x = 0; x <= big_d; ++x) {
                    v[pos] = x;
                    rec(pos + 1);
                }
            };
            rec(0);
            std::set<std::vector<int>> got;
            for (const auto& q : enumerate_q(n, big_d))
                got.insert(q.entries());
            EXPECT_EQ(got, brute) << "n=" << n << " D=" << big_d;
        }
    EXPECT_EQ(enumerate_q(2, 4).size(), 6u);
    EXPECT_EQ(enumerate_q(3, 6).size(), 20u);
}

TEST(Combinatorics, GlDimMatchesSsytCount)
{
    for (int size = 0; size <= 6; ++size)
        for (const auto& p : enumerate_partitions(size))
            for (int m = 0; m <= 4; ++m)
                EXPECT_EQ(gl_dim(p, m), oracle::count_ssyt(p, m)) << p.to_string() << " m=" << m;
}

TEST(Combinatorics, HookLengthMatchesSytCount)
{
    for (int size = 0; size <= 9; ++size)
        for (const auto& p : enumerate_partitions(size))
            EXPECT_EQ(num_standard_tableaux(p), oracle::count_syt(p.parts())) << p.to_string();
}

TEST(Combinatorics, Dominance)
{
    EXPECT_TRUE(dominance_leq(Partition{2, 1, 1}, Partition{2, 2}));
    EXPECT_FALSE(dominance_leq(Partition{2, 2}, Partition{2, 1, 1}));
    EXPECT_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    EXPECT_THROW(dominance_leq(Partition{2}, Partition{1}), InputError);
    for (int n = 0; n <= 8; ++n)
        for (const auto& a : enumerate_partitions(n))
            for (const auto& b : enumerate_partitions(n))
                EXPECT_EQ(dominance_leq(a, b), oracle::dominated(a.parts(), b.parts()));
}

TEST(Combinatorics, CollapseIsUniqueMaximalTypeCBelow)
{
    for (int n = 0; n <= 10; n += 2)
        for (const auto& p : enumerate_partitions(n)) {
            const auto maximal = oracle::maximal_type_c_below(p.parts());
            ASSERT_EQ(maximal.size(), 1u) << p.to_string();
            EXPECT_EQ(type_c_collapse(p).partition().parts(), maximal.front()) << p.to_string();
        }
    EXPECT_EQ(type_c_collapse(Partition{3, 1}).to_string(), "2,2");
    EXPECT_THROW(type_c_collapse(Partition{3}), InputError);
}
