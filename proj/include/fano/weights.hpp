#pragma once

#include <map>
#include <string>
#include <vector>

#include "fano/interval.hpp"

namespace fano {

// Integer weight vector for GL(n); n is the length.
using Weight = std::vector<int>;

std::string weight_to_string(const Weight& w);

bool is_nonincreasing(const Weight& w);

// Staircase rho(n) = (n, n-1, ..., 1).
Weight rho(int n);

// Number of pairs i < j with w[i] < w[j], by explicit pair counting.
int inversion_count(const Weight& w);

// Outcome of Bott regularization of w: either w + rho has a repeated entry
// (Singular), or it sorts to a strictly decreasing sequence by a permutation
// of a well-defined length, exhibiting a dominant weight.
struct BottRegularity {
    bool singular = true;
    int length = 0;     // inversion count of the sorting permutation
    Weight dominant;    // sorted(w + rho) - rho, nonincreasing
};

BottRegularity bott_regularize(const Weight& w);

// Dimension of the irreducible GL(n) representation with highest weight
// lambda (nonincreasing), by the Weyl product formula in exact arithmetic.
i64 weyl_dim(const Weight& lambda);

// Signed Weyl product on an arbitrary integer weight:
//   prod_{i<j} (w_i - w_j + j - i) / (j - i).
// Zero when w + rho is singular, otherwise (-1)^length * weyl_dim(dominant).
i64 weyl_chi(const Weight& w);

// Multiset of dominant weights with positive multiplicities.
using WeightMultiset = std::map<Weight, i64>;

// Littlewood-Richardson decomposition of Sigma^lambda tensor Sigma^mu for
// GL(n) where n = lambda.size() = mu.size(). Negative entries are handled by
// a uniform determinant shift; summands with more than n rows are discarded.
WeightMultiset lr_tensor(const Weight& lambda, const Weight& mu);

} // namespace fano
