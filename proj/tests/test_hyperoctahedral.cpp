#include "oracles.hpp"

#include <springer_htop/hyperoctahedral.hpp>
#include <springer_htop/tensor_rep.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace htop;

TEST(SignedPermutation, GroupLaws)
{
    const auto elems = all_elements(3);
    ASSERT_EQ(elems.size(), 48u);
    EXPECT_EQ(std::set<SignedPermutation>(elems.begin(), elems.end()).size(), 48u);
    for (const auto& a : elems) {
        EXPECT_TRUE((a * a.inverse()).is_identity());
        for (const auto& b : elems)
            EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    }
    EXPECT_THROW(SignedPermutation({0, 0}, {1, 1}), InputError);
    EXPECT_THROW(SignedPermutation({0, 1}, {1, 2}), InputError);
    EXPECT_THROW(all_elements(7), BoundError);
}

TEST(SignedPermutation, CoxeterRelations)
{
    for (int d = 2; d <= 5; ++d) {
        const auto s = generators(d);
        ASSERT_EQ(static_cast<int>(s.size()), d);
        for (int i = 0; i < d; ++i)
            EXPECT_TRUE(power(s[i], 2).is_identity());
        // s_1 s_2 has order 4, s_k s_{k+1} order 3, distant ones commute
        EXPECT_TRUE(power(s[0] * s[1], 4).is_identity());
        EXPECT_FALSE(power(s[0] * s[1], 2).is_identity());
        for (int i = 1; i + 1 < d; ++i)
            EXPECT_TRUE(power(s[i] * s[i + 1], 3).is_identity());
        for (int i = 0; i < d; ++i)
            for (int j = i + 2; j < d; ++j)
                EXPECT_EQ(s[i] * s[j], s[j] * s[i]);
    }
    EXPECT_THROW(generators(0), InputError);
}

TEST(Classes, CycleTypeIsConjugationInvariant)
{
    for (int d = 1; d <= 4; ++d) {
        const auto elems = all_elements(d);
        for (const auto& w : elems) {
            const auto label = cycle_type(w);
            EXPECT_EQ(label.degree(), d);
            for (const auto& g : generators(d))
                EXPECT_EQ(cycle_type(g * w * g.inverse()), label);
        }
    }
}

TEST(Classes, SizesMatchOrbitEnumeration)
{
    for (int d = 1; d <= 4; ++d) {
        const auto elems = all_elements(d);
        const auto labels = class_labels(d);
        EXPECT_EQ(labels.size(), enumerate_bipartitions(d).size());
        Count total = 0;
        for (const auto& cls : labels) {
            const auto rep = class_representative(cls);
            EXPECT_EQ(cycle_type(rep), cls);
            EXPECT_EQ(class_size(cls), oracle::conjugacy_orbit_size(rep, elems)) << cls.to_string();
            total += class_size(cls);
        }
        EXPECT_EQ(total, static_cast<Count>(elems.size()));
    }
}

TEST(Characters, Orthogonality)
{
    for (int d = 0; d <= 4; ++d) {
        const auto t = character_table(d);
        EXPECT_EQ(t.order, detail::to_count(group_order(d)));
        for (std::size_t a = 0; a < t.rows.size(); ++a)
            for (std::size_t b = 0; b < t.rows.size(); ++b) {
                Count s = 0;
                for (std::size_t c = 0; c < t.cols.size(); ++c)
                    s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                EXPECT_EQ(s, a == b ? t.order : 0);
            }
        for (std::size_t c1 = 0; c1 < t.cols.size(); ++c1)
            for (std::size_t c2 = 0; c2 < t.cols.size(); ++c2) {
                Count s = 0;
                for (std::size_t r = 0; r < t.rows.size(); ++r)
                    s += t.values[r][c1] * t.values[r][c2];
                EXPECT_EQ(s, c1 == c2 ? t.order / t.class_sizes[c1] : 0);
            }
        Count dims = 0;
        for (const auto& rho : t.rows)
            dims += irr_dim(rho) * irr_dim(rho);
        EXPECT_EQ(dims, t.order);
    }
    EXPECT_EQ(character_table(4).rows.size(), 20u);
}

TEST(Characters, ClassFunctionOnElements)
{
    const auto elems = all_elements(3);
    for (const auto& rho : enumerate_bipartitions(3))
        for (const auto& w : elems)
            for (const auto& g : generators(3))
                EXPECT_EQ(character_of(rho, g * w * g.inverse()), character_of(rho, w));
}

TEST(Characters, LinearCharactersAtDegreeTwo)
{
    const auto s = generators(2);
    auto on_gens = [&](const char* label) {
        const auto rho = Bipartition::parse(label);
        return std::vector<Count>{character_of(rho, s[0]), character_of(rho, s[1])};
    };
    EXPECT_EQ(on_gens("-|2"), (std::vector<Count>{1, 1}));     // triv
    EXPECT_EQ(on_gens("1,1|-"), (std::vector<Count>{-1, -1})); // Sign
    EXPECT_EQ(on_gens("2|-"), (std::vector<Count>{-1, 1}));    // Lsign
    EXPECT_EQ(on_gens("-|1,1"), (std::vector<Count>{1, -1}));  // Ssign
    EXPECT_EQ(irr_dim(Bipartition::parse("1|1")), 2);
}

// Character of the sign realisation, computed from diagonal coefficients
// alone, decomposes with the gl-dimension multiplicities once each module
// is read through schur_weyl_character_label.
TEST(Characters, TensorTraceDecomposition)
{
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}}) {
        const auto t = character_table(d);
        std::vector<Count> trace(t.cols.size());
        for (std::size_t c = 0; c < t.cols.size(); ++c)
            trace[c] = oracle::sign_realisation_trace(class_representative(t.cols[c]), n);
        for (const auto& sigma : enumerate_bipartitions(d)) {
            const auto& row = t.values[t.row_index(schur_weyl_character_label(sigma))];
            Count inner = 0;
            for (std::size_t c = 0; c < t.cols.size(); ++c)
                inner += t.class_sizes[c] * row[c] * trace[c];
            EXPECT_EQ(inner % t.order, 0);
            EXPECT_EQ(inner / t.order, gl_dim(sigma.first, n + 1) * gl_dim(sigma.second, n))
                << "n=" << n << " d=" << d << " " << sigma.to_string();
        }
    }
}

TEST(FlagStabilizer, OrderAndPermutationCharacter)
{
    for (int n = 0; n <= 2; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& q : enumerate_q(n, 2 * d)) {
                const auto elems = all_elements(d);
                Count inside = 0;
                for (const auto& w : elems)
                    inside += in_flag_stabilizer(q, w);
                EXPECT_EQ(inside, flag_stabilizer_order(q));
                const auto chi = perm_character_on_cosets(q);
                const ConjClassLabel identity{Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), {}};
                EXPECT_EQ(chi.at(identity), oracle::flag_index(q)) << q.to_string();
                const auto parts = decompose_character(chi, character_table(d));
                Count triv = 0;
                for (const auto& [rho, mult] : parts)
                    if (rho == Bipartition{Partition{}, d > 0 ? Partition{d} : Partition{}})
                        triv = mult;
                EXPECT_EQ(triv, 1) << "transitive action has one trivial summand";
            }
}

TEST(Characters, DecomposeRejectsNonCharacters)
{
    const auto t = character_table(2);
    ClassFunction half;
    for (const auto& c : t.cols)
        half[c] = c.pos_cycles == Partition{1, 1} ? 1 : 0;
    EXPECT_THROW(decompose_character(half, t), ConsistencyError);
}
