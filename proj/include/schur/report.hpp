#pragma once
// Verification campaigns (exact formulas against searches against the
// exhaustive minimum), the stored reference sequence, and CSV sweeps of the
// continuous minimum. Reports are JSON lines plus a trailing summary and
// are byte-identical across runs when timing output is suppressed.

#include "schur/blocks.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schur {

struct CaseRecord {
    long long n = 0;
    nlohmann::ordered_json fields;  // the emitted JSON line
    bool match = false;
};

struct VerificationReport {
    std::string campaign;
    long long cases = 0;
    long long failures = 0;
    double wall_seconds = 0;
    std::vector<CaseRecord> records;  // ordered by n

    // One JSON object per record, then a summary object. with_timing adds
    // wall_time_s to the summary; leave it off for reproducible bytes.
    void write_jsonl(std::ostream& out, bool with_timing) const;
};

struct ReferenceSequence {
    std::string name;
    std::vector<long long> terms;  // terms[i] is the value at n = i + 1
};

// The 25 stored terms of A321195 (minimum monochromatic Schur triples).
const ReferenceSequence& a321195_prefix();

struct CampaignOptions {
    int brute_cap = 22;  // exhaustive cross-check up to this n
    int threads = 0;
};

// Exact formula vs. block search for each n in 1..max_n, with an exhaustive
// cross-check at small n. FormulaId::Conjecture compares the four-block
// formula against the full four-block search.
VerificationReport verify_theorem(FormulaId id, int max_n,
                                  const CampaignOptions& opts = {});

// Formula values for a = 1 against the reference sequence. Terms beyond the
// stored prefix require a local b-file (lines "n value"); otherwise
// MissingReference. Never touches the network.
VerificationReport oeis_check(int max_n, const std::string& bfile_path = "",
                              const CampaignOptions& opts = {});

struct SweepRow {
    double a = 0, s_star = 0, t_star = 0, area_star = 0, m_closed = 0, abs_diff = 0;
    bool flagged = false;
};

// Writes "a,s_star,t_star,A_star,m_closed,abs_diff" plus steps rows of the
// numeric minimum against the closed m(a) over [a_min, a_max]. Rows with
// abs_diff > flag_tol are flagged. Requires steps >= 2 and a_min < a_max.
std::vector<SweepRow> emit_sweep(double a_min, double a_max, int steps,
                                 const std::string& out_path,
                                 double flag_tol = 1e-6, int grid = 400,
                                 int threads = 0);

}  // namespace schur
