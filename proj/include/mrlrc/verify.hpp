// Exhaustive and sampled verification of the maximal-recoverability
// property, plus erasure encoding/decoding against the parity-check form.
//
// The pattern checks are embarrassingly parallel; check_mr_* run the
// OpenMP kernel while the *_serial variants are a plain reference
// implementation kept for cross-checking and benchmarking.
#ifndef MRLRC_VERIFY_HPP
#define MRLRC_VERIFY_HPP

#include <iosfwd>
#include <optional>

#include "mrlrc/construct.hpp"

namespace mrlrc {

struct ErasurePattern {
    std::vector<std::vector<int>> groups;  // per group, sorted 0-based offsets
    std::vector<int> flat(int r) const;    // global coordinates, ascending
    bool operator==(const ErasurePattern& o) const { return groups == o.groups; }
};

// Well-formedness is an error; returns whether the erased set decomposes
// into <= a per group plus <= h extra anywhere.
bool admissible(const ErasurePattern& pat, const LrcParams& params);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t cap = kDefaultEnumCap;
    std::uint64_t seed = 1;
    std::uint64_t samples = 1000;
    int jobs = 0;  // OpenMP thread override; 0 keeps the runtime default
};

struct VerifyReport {
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t patterns_checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<ErasurePattern> witnesses;  // first few failures, enumeration order
    std::uint64_t seed = 0;                 // sampled mode only
    double elapsed_s = 0;
    bool pass() const { return failure_count == 0; }
};

std::uint64_t parity_pattern_count(const LrcParams& p);     // saturating
std::uint64_t generator_selection_count(const LrcParams& p);

// Definition-(iii) check on the parity form: for every maximal admissible
// pattern (exactly a per group plus h extra) the selected columns of H
// have full rank over F_ell.
VerifyReport check_mr_parity(const MrLrcCode& code, const VerifyOptions& opts = {});
VerifyReport check_mr_parity_serial(const MrLrcCode& code, const VerifyOptions& opts = {});

// Every k x k submatrix of G with at most r-a columns per block invertible.
VerifyReport check_mr_generator(const MrLrcCode& code, const VerifyOptions& opts = {});
VerifyReport check_mr_generator_serial(const MrLrcCode& code, const VerifyOptions& opts = {});

// Nullspace encoder for the parity form: k x n, rows form a basis with the
// free coordinates systematic. Throws if rank(H) < ga+h.
ExtMatrix nullspace_encoder(const MrLrcCode& code);
std::vector<ExtElem> encode(const ExtMatrix& encoder, const std::vector<ExtElem>& message);
std::vector<ExtElem> encode(const MrLrcCode& code, const std::vector<ExtElem>& message);

// Unique completion of a partially erased codeword (parity form); `erased`
// marks the unknown coordinates, whose input values are ignored.
std::vector<ExtElem> decode_erasures(const MrLrcCode& code, const std::vector<ExtElem>& word,
                                     const std::vector<bool>& erased);

ErasurePattern pattern_from_mask(const LrcParams& params, const std::vector<bool>& erased);

// Both sides of the block-reduction identity, computed independently: the
// full (ga+h)-column determinant test and the reduced h x h Moore-block
// test after eliminating the invertible local part.
struct ReductionCheck {
    bool full_rank_nonzero;
    bool reduced_invertible;
};
ReductionCheck moore_reduction_check(const MrLrcCode& code,
                                     const std::vector<std::vector<int>>& T,
                                     const std::vector<std::vector<int>>& S);

std::ostream& operator<<(std::ostream& os, const ErasurePattern& p);

}  // namespace mrlrc

#endif
