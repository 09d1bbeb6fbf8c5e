#pragma once

// Permutations with DES_h <-> skew tableaux whose consecutive rows share
// exactly h columns.
//
// Going up from the bottom, row i holds the i-th descending run. The bottom
// row starts in column 1 and each row above starts h-1 columns left of the
// last column of the row below it.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "shapes.hpp"

namespace minperm {

inline SkewTableau perm_to_tableau(Permutation const& p, int h)
{
    if (h < 1)
        throw std::invalid_argument("perm_to_tableau: h must be at least 1");
    auto runs = descending_runs(p);
    std::size_t const k = runs.size();
    if (k >= 2)
        for (std::size_t j = 0; j < k; ++j)
            if (static_cast<int>(runs[j].size()) < h)
                throw std::invalid_argument("perm_to_tableau: descending run " + std::to_string(j + 1) + " has length "
                                            + std::to_string(runs[j].size()) + ", too short to share "
                                            + std::to_string(h) + " columns");
    int const d = count_descents(p.word());
    if (!satisfies_des_h(p, d, h, DesMethod::pattern))
        throw std::invalid_argument("perm_to_tableau: " + to_string(p) + " does not satisfy DES_" + std::to_string(h));

    std::reverse(runs.begin(), runs.end());
    std::vector<int> lengths;
    lengths.reserve(k);
    for (auto const& r : runs)
        lengths.push_back(static_cast<int>(r.size()));
    return SkewTableau(shape_from_composition(Composition(std::move(lengths)), h), std::move(runs));
}

inline Permutation tableau_to_perm(SkewTableau const& t, int h)
{
    if (h < 1)
        throw std::invalid_argument("tableau_to_perm: h must be at least 1");
    composition_from_shape(t.shape, h);
    if (!is_valid_tableau(t))
        throw std::invalid_argument("tableau_to_perm: filling is not a decreasing skew tableau");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.shape.cells()));
    for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row)
        word.insert(word.end(), row->begin(), row->end());
    return Permutation(std::move(word));
}

} // namespace minperm
