#ifndef MILD_ARITHMETIC_HPP
#define MILD_ARITHMETIC_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mild/series.hpp"

namespace mild {

// ell is tame for p when both are prime and ell = 1 (mod p).
bool is_tame(std::uint64_t ell, long long p);

// a^((ell-1)/p) = 1 (mod ell)? Requires ell tame for p and a nonzero mod ell.
bool pth_power_residue(long long a, std::uint64_t ell, long long p);

// Linking data of an ordered tame prime set over Q. Entry (i, j), i != j, is
// the discrete log of ell_i to the chosen primitive root mod ell_j, reduced
// mod p. It vanishes exactly when ell_i is a p-th power residue mod ell_j.
// Different root choices rescale each column by a nonzero scalar; only the
// zero pattern is canonical.
struct LinkingMatrix {
    long long p = 3;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> roots;
    std::vector<std::vector<std::optional<Fp>>> entries; // [i][j], diagonal absent

    int size() const { return static_cast<int>(primes.size()); }
    // 1-based accessor
    const std::optional<Fp>& at(int i, int j) const;
};

LinkingMatrix linking_matrix(long long p, const std::vector<std::uint64_t>& primes);

// Same, with caller-chosen primitive roots (one per prime, validated).
LinkingMatrix linking_matrix_with_roots(long long p, const std::vector<std::uint64_t>& primes,
                                        const std::vector<std::uint64_t>& roots);

// Degree-2 part of relation i (1-based): sum_j a_j(i) (X_i X_j - X_j X_i),
// truncated at degree 3. The zero series signals an all-zero row (the
// relation has degree >= 3 and leaves the degree-2 regime).
TruncatedSeries relation_initial_form(int i, const LinkingMatrix& matrix);

struct PresentationSketch {
    long long p = 3;
    int d = 0;
    std::vector<TruncatedSeries> forms;                 // one per relation
    std::vector<std::optional<Monomial>> hats;          // absent for zero rows
    std::vector<std::pair<int, int>> unordered_pairs;   // {min, max}, zero rows skipped
    std::vector<int> zero_rows;                         // 1-based indices
};

PresentationSketch presentation_hats(long long p, const std::vector<std::uint64_t>& primes);
PresentationSketch presentation_hats(const LinkingMatrix& matrix);

struct RankInputs {
    long long sizeS = 0;
    long long r1 = 0;
    long long r2 = 0;
    long long sizeT = 0;
    long long delta = 0;  // 1 when the p-th roots of unity lie in the field
    long long dimV = 0;
};

// |S| - (r1 + r2) - 1 - |T| + delta + dimV; may be negative, returned as-is.
long long shafarevich_rank(const RankInputs& in);

// 3 + 2 sqrt(2 + r1 + r2 + |T|)
double alpha_bound(long long r1, long long r2, long long sizeT);

struct LemmaReport {
    double alpha = 0.0;
    bool hypothesis_met = false;     // d > alpha
    std::vector<int> failing_c;      // c in [2, d-1] where the inequality fails
    bool holds = false;              // hypothesis met and no failing c
    // c = d is excluded: there the right side is (d-c)(c-1) = 0 and the
    // inequality fails vacuously.
};

// Brute-force check of d + r1 + r2 + |T| - 1 < (d-c)(c-1) over c in [2, d-1],
// conditional on d > alpha.
LemmaReport lemma_easy_check(int d, long long r1, long long r2, long long sizeT);

enum class ConstraintDirection {
    NewModExisting, // residue status of the new prime modulo the existing one
    ExistingModNew, // residue status of the existing prime modulo the new one
};

struct ResidueConstraint {
    std::uint64_t ell = 0;
    ConstraintDirection direction = ConstraintDirection::NewModExisting;
    bool want_residue = false;
};

// Smallest prime q <= bound with q = 1 (mod p) meeting every constraint;
// primes named by constraints are skipped as candidates.
std::optional<std::uint64_t> find_prime(long long p, const std::vector<ResidueConstraint>& constraints,
                                        std::uint64_t bound);

} // namespace mild

#endif
