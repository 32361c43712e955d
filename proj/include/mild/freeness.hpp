#ifndef MILD_FREENESS_HPP
#define MILD_FREENESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mild/series.hpp"

namespace mild {

// The family prefix . repeated^n . suffix for every n in [min_n, max_n]
// (max_n absent = unbounded). Construction normalizes the shape so that the
// prefix does not end with, and the suffix does not start with, the repeated
// letter; the range shifts accordingly.
struct ParamMonomial {
    Monomial prefix;
    int repeated = 0;
    Monomial suffix;
    long min_n = 1;
    std::optional<long> max_n;

    ParamMonomial(Monomial prefix_in, int repeated_in, Monomial suffix_in, long min_n_in = 1,
                  std::optional<long> max_n_in = std::nullopt);

    Monomial instantiate(long n) const;
    long instance_count_at_least(long k) const; // min(count, k)
    int d() const { return prefix.d; }

    // "X5.X4^n.X1" with the literal letter n (range noted only when shifted
    // or bounded).
    std::string str() const;
};

struct MonomialFamily {
    int d = 0;
    std::vector<Monomial> fixed;
    std::vector<ParamMonomial> parametric;
};

enum class OverlapPolicy {
    Standard, // no nontrivial proper prefix of one member equals a
              // nontrivial proper suffix of another
    Literal,  // no two distinct members share a nontrivial proper prefix
};

enum class ViolationKind { Submonomial, Overlap, Duplicate };

struct FreenessWitness {
    ViolationKind kind;
    Monomial first;
    Monomial second;
    std::string detail;
};

struct FreenessVerdict {
    bool free = true;
    std::optional<FreenessWitness> witness;
};

std::string violation_kind_name(ViolationKind k);

// True iff a occurs as a contiguous factor of b (possibly all of b).
bool is_submonomial(const Monomial& a, const Monomial& b);

// True iff some nontrivial proper prefix of a equals a nontrivial proper
// suffix of b.
bool has_overlap(const Monomial& a, const Monomial& b);

// Decides combinatorial freeness. Fixed-vs-parametric pairs are checked by
// bounded enumeration with a certified cutoff; parametric pairs by a
// symbolic anchor argument. Shapes the symbolic argument cannot certify
// raise std::invalid_argument.
FreenessVerdict is_combinatorially_free(const MonomialFamily& family,
                                        OverlapPolicy policy = OverlapPolicy::Standard,
                                        bool self_overlap = true);

struct CutPair {
    int i0 = 0; // 1 < i0 <= c
    int j0 = 0; // c < j0 <= d
};

// Scans the grid 1 < i0 <= c < j0 <= d (smallest j0 first, then smallest i0)
// for a cell with (j0, i0) absent from `pairs`, each pair written (t, s)
// with s <= c < t. Throws std::domain_error citing the count bound when the
// grid is exhausted.
CutPair choose_cut_pair(const std::vector<std::pair<int, int>>& pairs, int c, int d);

// Verdict for {degree-2 hats} together with X_j0 X_i0^n X_1, n >= 1.
FreenessVerdict certify_family_with_cut(const std::vector<Monomial>& relation_hats, CutPair cut,
                                        int d);

// For each n <= upto, the number of degree-n words over X_1..X_d containing
// no family member as a contiguous factor (parametric members instantiated
// up to degree `upto`). Forbidden-factor automaton; exact integers.
std::vector<mpz_class> count_normal_words(const MonomialFamily& family, int d, int upto);

// Family text form: one member per line, fixed monomials as "X5.X3",
// parametric members as "X5.X4^n.X1" with the literal letter n.
ParamMonomial parse_param_monomial(std::string_view text, int d);
MonomialFamily parse_family(std::string_view text, int d);
std::string family_str(const MonomialFamily& family);

} // namespace mild

#endif
