#pragma once

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/tp2.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace ferrers {

// All generators draw only from the engine passed in, so a fixed seed
// reproduces the same stream of instances.
using Rng = std::mt19937_64;

// Uniform over the partitions fitting in rows x cols: a uniformly shuffled
// boundary of rows Up and cols Right steps.
Partition random_partition_in_box(Rng& rng, std::size_t rows, std::size_t cols);

// Positive entries uniform in [1, max_entry].
std::vector<BigInt> random_positive_sequence(Rng& rng, std::size_t length, unsigned max_entry);

// Log-concave "tent": the pointwise product of `factors` positive affine
// sequences, each rising or falling in i. Affine positive sequences are
// concave, hence log-concave, and products keep log-concavity.
std::vector<BigInt> random_tent_sequence(Rng& rng, std::size_t length, unsigned factors);

// Log-concave with entries in [1, max_entry], grown one term at a time
// from the range left open by x_{i-1} x_{i+1} <= x_i^2.
std::vector<BigInt> random_bounded_log_concave(Rng& rng, std::size_t length, unsigned max_entry);

// Nonnegative integer matrix that is TP2: a random subset of rows and
// columns of a product of nonnegative bidiagonal and positive diagonal
// factors.
MatrixNN random_tp2_matrix(Rng& rng, std::size_t rows, std::size_t cols);

// Pair with a_i x_{i+1} <= a_{i+1} x_i everywhere. x is uniform in
// [1, max_entry]; each a_{i+1} is the smallest admissible value plus a
// random slack.
SequencePair random_ratio_dominant_pair(Rng& rng, std::size_t length, unsigned max_entry);

} // namespace ferrers
