#ifndef MILD_COMMANDS_HPP
#define MILD_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mild/freeness.hpp"

namespace mild {

// Exit-code contract shared by every subcommand:
//   0 success / checked property true
//   1 checked property false (a witness is reported)
//   2 usage or parse error
//   3 inconclusive under the current truncation
struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

struct ExpandOptions {
    std::string word_text;
    long long p = 3;
    int d = 0;
    int trunc = 12;
    bool hat = false;
};
CommandResult run_expand(const ExpandOptions& opts);

struct LinkingOptions {
    long long p = 3;
    std::vector<std::uint64_t> primes;
};
CommandResult run_linking(const LinkingOptions& opts);

struct MildcheckOptions {
    std::optional<std::string> document_text;   // exclusive with primes
    long long p = 3;
    std::vector<std::uint64_t> primes;
    int trunc = 12;
    int series_to = 12;
    OverlapPolicy policy = OverlapPolicy::Standard;
    bool self_overlap = true;
};
CommandResult run_mildcheck(const MildcheckOptions& opts);

struct CutOptions {
    long long p = 3;
    std::vector<std::uint64_t> primes;
    int series_to = 12;
    std::optional<int> i0;
    std::optional<int> j0;
    std::optional<int> c;
};
CommandResult run_cut(const CutOptions& opts);

struct PoincareOptions {
    int d = 0;
    std::vector<int> rel_degrees;
    std::optional<int> tail_from;
    int upto = 12;
};
CommandResult run_poincare(const PoincareOptions& opts);

struct PrimesearchOptions {
    long long p = 3;
    std::vector<std::string> constraints; // residue:<ell>:<yes|no>:<new-mod-old|old-mod-new>
    std::uint64_t bound = 1000;
};
CommandResult run_primesearch(const PrimesearchOptions& opts);

} // namespace mild

#endif
