#pragma once

// Wedderburn-Artin data of a semisimple algebra: its center, the primitive
// central idempotents and the simple blocks Ae, plus the Chinese remainder
// lifting used for products of simple algebras.

#include <cstdint>
#include <optional>
#include <vector>

#include "pca/algebra.hpp"

namespace pca {

struct BlockData {
  Index total_dim;
  Index center_dim;
  // sqrt(total_dim / center_dim), set over finite fields only.
  std::optional<Index> matrix_degree;
};

struct BlockDecomposition {
  // Primitive central idempotents, summing to 1 and pairwise orthogonal.
  std::vector<Vector> idempotents;
  // The algebra Ae with unit e, on an echelon basis of Ae inside A.
  std::vector<FinAlg> blocks;
  // Columns: the basis of each block as elements of A.
  std::vector<Matrix> embeddings;
  std::vector<BlockData> block_data;
  // a -> (a e_1, ..., a e_r), validated as an isomorphism.
  AlgHom reassembly;
};

// {z : z e_i = e_i z for all i}.
Subspace center(const FinAlg& a);

// NotSemisimple unless J(A) = 0; UnsupportedField over GF(p)(t).
// Blocks are sorted by dimension, then by idempotent coordinates.
BlockDecomposition central_idempotents(const FinAlg& a, std::uint64_t seed = 0);

// a with a - targets[i] in ideals[i] for every i. The ideals must be
// proper, at least left ideals, and pairwise coprime (NotCoprime otherwise).
Vector crt_lift(const FinAlg& a, const std::vector<Ideal>& ideals, const std::vector<Vector>& targets);

}  // namespace pca
