#ifndef BILIAISON_MINORS_HPP
#define BILIAISON_MINORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biliaison/grmatrix.hpp"
#include "biliaison/polyalg.hpp"

namespace biliaison {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Rows and columns of one connected component of the nonzero pattern.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Connected components of the bipartite row/column graph of nonzero entries. Zero
/// rows and zero columns belong to no block.
template <Field K>
std::vector<Block> block_decomposition(const GradedMatrix<K>& m);

/// Row and column indices of a square submatrix.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;
};

/// Determinant of a square polynomial matrix: fraction-free elimination, or for large
/// homogeneous matrices over a prime field, evaluation and interpolation.
template <Field K>
MultiPoly<K> determinant(const GradedMatrix<K>& square);

template <Field K>
MultiPoly<K> minor(const GradedMatrix<K>& m, const MinorIndex& idx) {
  return determinant(m.submatrix(idx.rows, idx.cols));
}

/// Rank over the fraction field. Small matrices use fraction-free elimination; larger
/// ones take the maximum numeric rank over random points, blockwise.
template <Field K>
std::size_t rank_fraction_field(const GradedMatrix<K>& m, std::uint64_t seed = 0x5EED0A11u);

/// Rank by symbolic fraction-free elimination, any size.
template <Field K>
std::size_t bareiss_rank(const GradedMatrix<K>& m);

enum class MinorSelection { all, random };

/// k-minors. `all` enumerates row subsets then column subsets in lexicographic order;
/// `random` draws `sample` distinct index pairs from the seed. Throws
/// std::out_of_range if k > min(rows, cols).
template <Field K>
std::vector<MultiPoly<K>> minors(const GradedMatrix<K>& m, std::size_t k, MinorSelection selection,
                                 std::size_t sample = 0, std::uint64_t seed = 0);

/// Index pairs of up to `count` distinct k-minors that are nonzero at random points,
/// found by pivoting in random row and column orders.
template <Field K>
std::vector<MinorIndex> sample_nonzero_minors(const GradedMatrix<K>& m, std::size_t k, std::size_t count, Rng& rng);

/// True when the k-minors are certified to have no common factor: restricted to a random
/// line, some minor keeps its full degree and the univariate gcd of the restrictions is 1.
/// False means "not certified", not "common factor".
template <Field K>
bool minors_certified_coprime(const GradedMatrix<K>& m, std::size_t k, Rng& rng, std::size_t max_minors = 16);

/// gcd of the k-minors: exact over all minors when their number is at most `budget`,
/// otherwise the gcd of `sample` sampled nonzero minors (a multiple of the true gcd
/// with the same hypersurface factors in practice). Zero if no nonzero minor is found.
template <Field K>
MultiPoly<K> minor_gcd(const GradedMatrix<K>& m, std::size_t k, std::uint64_t budget, Rng& rng,
                       std::size_t sample = 24);

/// Rank over the fraction field of K[X,Y,Z,T,a]/(f), the minimum over the components of
/// f when f is reducible. Computed on random lines: over K[t]/(g) with g the squarefree
/// restriction of f, by elimination that splits g at zero divisors. Throws
/// std::invalid_argument for constant f.
template <Field K>
std::size_t rank_modulo_hypersurface(const GradedMatrix<K>& m, const MultiPoly<K>& f,
                                     std::uint64_t seed = 0x4A11F00Du);

}  // namespace biliaison

#endif  // BILIAISON_MINORS_HPP
