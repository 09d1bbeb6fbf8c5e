#include "minperm/bijection.hpp"

#include "gtest/gtest.h"
#include "minperm/enumeration.hpp"

namespace minperm {
namespace {

Permutation const sigma{14, 12, 9, 3, 13, 5, 15, 10, 6, 2, 1, 11, 8, 7, 4};

TEST(PermToTableau, FifteenLetterExample)
{
    auto t = perm_to_tableau(sigma, 2);
    EXPECT_EQ(t.shape, SkewShape({9, 7, 4, 4}, {5, 2, 2, 0}));
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.rows[0], (std::vector<int>{11, 8, 7, 4}));
    EXPECT_EQ(t.rows[1], (std::vector<int>{15, 10, 6, 2, 1}));
    EXPECT_EQ(t.rows[2], (std::vector<int>{13, 5}));
    EXPECT_EQ(t.rows[3], (std::vector<int>{14, 12, 9, 3}));
    EXPECT_TRUE(is_valid_tableau(t));
    // Absolute columns: bottom row in columns 1..4, top row in 6..9.
    EXPECT_EQ(t.at(3, 1), 14);
    EXPECT_EQ(t.at(2, 3), 13);
    EXPECT_EQ(t.at(1, 3), 15);
    EXPECT_EQ(t.at(0, 6), 11);
    EXPECT_EQ(t.at(0, 5), 0);
}

TEST(PermToTableau, SingleRun)
{
    auto t = perm_to_tableau(Permutation{2, 1}, 2);
    EXPECT_EQ(t.shape, SkewShape({2}));
    EXPECT_EQ(t.rows[0], (std::vector<int>{2, 1}));
    for (int h = 1; h <= 6; ++h) {
        auto u = perm_to_tableau(Permutation{4, 3, 2, 1}, h);
        EXPECT_EQ(u.shape, SkewShape({4}));
        EXPECT_EQ(u.rows[0], (std::vector<int>{4, 3, 2, 1}));
    }
}

TEST(PermToTableau, RejectsOutsideDomain)
{
    // 2 1 3: last run too short to overlap two columns.
    EXPECT_THROW(perm_to_tableau(Permutation{2, 1, 3}, 2), std::invalid_argument);
    // Runs long enough but the diamond fails: 3 1 | 4 2 is fine, 2 1 | 4 3 is fine, 4 1 | 3 2 is not.
    EXPECT_NO_THROW(perm_to_tableau(Permutation{3, 1, 4, 2}, 2));
    EXPECT_THROW(perm_to_tableau(Permutation{4, 1, 3, 2}, 2), std::invalid_argument);
    EXPECT_THROW(perm_to_tableau(sigma, 3), std::invalid_argument);
    EXPECT_THROW(perm_to_tableau(sigma, 0), std::invalid_argument);
}

TEST(TableauToPerm, FifteenLetterExample)
{
    auto t = SkewTableau(SkewShape({9, 7, 4, 4}, {5, 2, 2, 0}),
                         {{11, 8, 7, 4}, {15, 10, 6, 2, 1}, {13, 5}, {14, 12, 9, 3}});
    EXPECT_EQ(tableau_to_perm(t, 2), sigma);
    EXPECT_EQ(tableau_to_perm(SkewTableau(SkewShape({2}), {{2, 1}}), 2), (Permutation{2, 1}));
}

TEST(TableauToPerm, TwoByTwoRectangleGivesTwoMinimalPermutations)
{
    auto all = generate_tableaux(SkewShape({2, 2}));
    ASSERT_EQ(all.size(), 2u);
    std::vector<Permutation> images;
    for (auto const& t : all) {
        auto p = tableau_to_perm(t, 2);
        EXPECT_EQ(p.size(), 4u);
        EXPECT_TRUE(is_d_minimal(p, 2)) << p;
        images.push_back(p);
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(images, (std::vector<Permutation>{Permutation{2, 1, 4, 3}, Permutation{3, 1, 4, 2}}));
}

TEST(TableauToPerm, RejectsOverlapMismatch)
{
    auto t = SkewTableau(SkewShape({4, 3}, {1}), {{6, 4, 2}, {5, 3, 1}});
    ASSERT_TRUE(is_valid_tableau(t));
    EXPECT_NO_THROW(tableau_to_perm(t, 2));
    EXPECT_THROW(tableau_to_perm(t, 1), std::invalid_argument);
    EXPECT_THROW(tableau_to_perm(t, 3), std::invalid_argument);
    EXPECT_THROW(tableau_to_perm(SkewTableau(SkewShape({2}), {{1, 2}}), 1), std::invalid_argument);
}

TEST(Bijection, PermutationRoundtrip)
{
    for (std::size_t n = 1; n <= 8; ++n)
        for (int h = 1; h <= 3; ++h)
            for_each_permutation(n, [&](Permutation const& p) {
                int const d = count_descents(p.word());
                if (!satisfies_des_h(p, d, h, DesMethod::definition)) {
                    ASSERT_THROW(perm_to_tableau(p, h), std::invalid_argument) << p;
                    return;
                }
                auto t = perm_to_tableau(p, h);
                ASSERT_TRUE(is_valid_tableau(t)) << p;
                ASSERT_EQ(t.rows.size(), n - static_cast<std::size_t>(d));
                ASSERT_EQ(tableau_to_perm(t, h), p);
                auto runs = descending_runs(p);
                for (std::size_t i = 0; i < runs.size(); ++i)
                    ASSERT_EQ(t.shape.row_length(i), static_cast<int>(runs[runs.size() - 1 - i].size()));
            });
}

TEST(Bijection, TableauRoundtrip)
{
    for (int h = 1; h <= 3; ++h)
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k)
                for (auto const& a : compositions(n, k, min_part_for(h, static_cast<std::size_t>(k))))
                    for_each_tableau(shape_from_composition(a, h), [&](SkewTableau const& t) {
                        ASSERT_EQ(perm_to_tableau(tableau_to_perm(t, h), h), t);
                    });
}

TEST(Bijection, CardinalityTransport)
{
    for (int n = 1; n <= 8; ++n)
        for (int h = 1; h <= 3; ++h)
            for (int d = 0; d < n; ++d)
                EXPECT_EQ(BigInt(brute_force_count(n, d, h)), count_by_tableaux(n, n - d, h).value)
                    << "n=" << n << " d=" << d << " h=" << h;
}

} // namespace
} // namespace minperm
