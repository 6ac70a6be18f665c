#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace sasldpc {

// Protograph adjacency with parallel-edge multiplicities.
// Rows are check nodes, columns are variable nodes.
struct BaseMatrix {
    int n_checks = 0;
    int n_vars = 0;
    std::vector<int> entries;  // row-major, n_checks * n_vars

    int at(int check, int var) const { return entries[check * n_vars + var]; }
    int& at(int check, int var) { return entries[check * n_vars + var]; }

    int row_weight(int check) const;
    int col_weight(int var) const;
    int max_entry() const;
    int edge_count() const { return std::accumulate(entries.begin(), entries.end(), 0); }

    bool operator==(const BaseMatrix&) const = default;

    static BaseMatrix from_rows(const std::vector<std::vector<int>>& rows);
};

struct PunctureMask {
    std::vector<std::uint8_t> punctured;  // per VN, 1 = not transmitted

    static PunctureMask none(int n_vars) { return {std::vector<std::uint8_t>(n_vars, 0)}; }
    static PunctureMask of(int n_vars, const std::vector<int>& cols);

    bool is_punctured(int var) const { return punctured[var] != 0; }
    int transmitted_count() const;

    bool operator==(const PunctureMask&) const = default;
};

// Punctures the highest-degree VN (ties broken by lowest column index).
PunctureMask puncture_highest_degree(const BaseMatrix& base);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// (n_vars - n_checks) / transmitted count; throws if the numerator is <= 0.
Rational design_rate(const BaseMatrix& base, const PunctureMask& punctures);

// Structural checks; empty result means the matrix is a valid protograph.
std::vector<std::string> validate_base(const BaseMatrix& base);

// Text format: "n_checks n_vars" header, one row per line, optional trailing
// "puncture: j1 j2 ..." (0-indexed columns).
std::string serialize_base(const BaseMatrix& base, const PunctureMask& punctures);
std::pair<BaseMatrix, PunctureMask> parse_base(const std::string& text);
std::pair<BaseMatrix, PunctureMask> load_base_file(const std::string& path);

// Design-space enumeration under the search constraints. Yields matrices in
// lexicographic order of the row-major entry vector; every yielded matrix also
// satisfies the BaseMatrix structural invariants.
struct SearchConstraints {
    std::vector<int> entry_domain = {0, 1, 2};   // ascending
    int col_sum_min = 2;
    int col_sum_max = 7;
    int exempt_column = -1;                      // -1 = no exemption
    struct CoveragePair {
        int row = 0;
        int col_a = 0;
        int col_b = 0;
    };
    std::vector<CoveragePair> coverage_pairs;    // b[row][a] + b[row][b] >= 1
};

class SearchSpace {
public:
    SearchSpace(int n_checks, int n_vars, SearchConstraints constraints);
    std::optional<BaseMatrix> next();

private:
    int n_checks_;
    int n_vars_;
    SearchConstraints c_;
    std::vector<int> digits_;  // domain indices, row-major
    bool exhausted_ = false;
    bool first_ = true;

    bool advance(int from_cell);
    int first_violation() const;  // first cell that makes the prefix infeasible, -1 if none
    bool complete_ok() const;
};

// Copy-and-permute expansion of a protograph.
struct LiftedCode {
    int n = 0;            // bits (columns), n_vars * lift_factor
    int m = 0;            // checks (rows), n_checks * lift_factor
    int lift_factor = 0;
    std::vector<std::vector<int>> check_bits;  // per check, ascending bit ids
    std::vector<std::vector<int>> bit_checks;  // per bit, ascending check ids
    std::vector<int> punctured_bits;           // sorted
    BaseMatrix base;

    bool is_punctured_bit(int bit) const;
};

// Two-stage lifting: a small permutation lift (PEG-guided circulant matchings
// inside each block) that separates parallel edges, then a circulant lift with
// greedy girth-aware shift selection. Deterministic given seed.
LiftedCode lift(const BaseMatrix& base, const PunctureMask& punctures, int factor,
                std::uint64_t seed);

// Shortest cycle length of the lifted Tanner graph (0 if acyclic).
int girth(const LiftedCode& code);

// Standard alist serialization.
std::string to_alist(const LiftedCode& code);
// Reads an alist back; base/puncture provenance is not part of the format.
LiftedCode from_alist(const std::string& text);

}  // namespace sasldpc
