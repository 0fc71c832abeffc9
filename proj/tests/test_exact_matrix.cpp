#include <springer_htop/exact_matrix.hpp>

#include <gtest/gtest.h>

#include <random>

using htop::ExactMatrix;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows)
{
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

// Rank as the size of the largest nonzero minor, by Laplace expansion.
mpq_class det(const ExactMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    mpq_class out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m(0, j)) == 0)
            continue;
        std::vector<std::size_t> rows;
        std::vector<std::size_t> cols;
        for (std::size_t r = 1; r < n; ++r)
            rows.push_back(r);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j)
                cols.push_back(c);
        const mpq_class term = m(0, j) * det(m.submatrix(rows, cols));
        out += j % 2 == 0 ? term : mpq_class(-term);
    }
    return out;
}

std::size_t minor_rank(const ExactMatrix& m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::size_t best = 0;
    for (std::uint32_t rmask = 1; rmask < (1u << r); ++rmask)
        for (std::uint32_t cmask = 1; cmask < (1u << c); ++cmask) {
            if (__builtin_popcount(rmask) != __builtin_popcount(cmask))
                continue;
            const std::size_t k = static_cast<std::size_t>(__builtin_popcount(rmask));
            if (k <= best)
                continue;
            std::vector<std::size_t> rows;
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < r; ++i)
                if (rmask & (1u << i))
                    rows.push_back(i);
            for (std::size_t j = 0; j < c; ++j)
                if (cmask & (1u << j))
                    cols.push_back(j);
            if (sgn(det(m.submatrix(rows, cols))) != 0)
                best = k;
        }
    return best;
}

} // namespace

TEST(ExactMatrix, RankSmallCases)
{
    EXPECT_EQ(ExactMatrix(3, 3).rank(), 0u);
    EXPECT_EQ(ExactMatrix::identity(4).rank(), 4u);
    EXPECT_EQ(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}).rank(), 2u);
    EXPECT_EQ(from_rows({{0, 0}, {0, 5}}).rank(), 1u);
}

TEST(ExactMatrix, RankMatchesMinorsOnRandomMatrices)
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + trial % 5;
        const std::size_t c = 1 + (trial / 5) % 5;
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = mpq_class(entry(rng), den(rng));
                m(i, j).canonicalize();
            }
        // force some dependence
        if (r > 2)
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * mpq_class(1, 2) - m(1, j);
        EXPECT_EQ(m.rank(), minor_rank(m)) << "trial " << trial;
    }
}

TEST(ExactMatrix, InverseAndProducts)
{
    const auto a = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    EXPECT_EQ(a * a.inverse(), ExactMatrix::identity(3));
    EXPECT_EQ(a.inverse() * a, ExactMatrix::identity(3));
    EXPECT_THROW(from_rows({{1, 2}, {2, 4}}).inverse(), htop::InputError);
    EXPECT_THROW(from_rows({{1, 2}}) * from_rows({{1, 2}}), htop::InputError);
    EXPECT_EQ(a.trace(), 9);
    EXPECT_TRUE(htop::commutator(a, a).is_zero());
}

TEST(ExactMatrix, KroneckerMixedProduct)
{
    const auto a = from_rows({{1, 2}, {0, 1}});
    const auto b = from_rows({{0, 1}, {1, 0}});
    const auto c = from_rows({{3, 0}, {1, 1}});
    const auto d = from_rows({{1, 1}, {0, 2}});
    EXPECT_EQ(htop::kronecker(a, b) * htop::kronecker(c, d), htop::kronecker(a * c, b * d));
    EXPECT_EQ(htop::kronecker(a, b).rank(), a.rank() * b.rank());
}
