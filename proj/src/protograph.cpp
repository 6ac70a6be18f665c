#include "sasldpc/protograph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sasldpc {

int BaseMatrix::row_weight(int check) const {
    int s = 0;
    for (int j = 0; j < n_vars; ++j) s += at(check, j);
    return s;
}

int BaseMatrix::col_weight(int var) const {
    int s = 0;
    for (int i = 0; i < n_checks; ++i) s += at(i, var);
    return s;
}

int BaseMatrix::max_entry() const {
    int m = 0;
    for (int e : entries) m = std::max(m, e);
    return m;
}

BaseMatrix BaseMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    BaseMatrix b;
    b.n_checks = static_cast<int>(rows.size());
    b.n_vars = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != b.n_vars)
            throw std::invalid_argument("BaseMatrix::from_rows: ragged rows");
        b.entries.insert(b.entries.end(), r.begin(), r.end());
    }
    return b;
}

PunctureMask PunctureMask::of(int n_vars, const std::vector<int>& cols) {
    PunctureMask m = none(n_vars);
    for (int c : cols) {
        if (c < 0 || c >= n_vars)
            throw std::invalid_argument("PunctureMask::of: column out of range");
        m.punctured[c] = 1;
    }
    return m;
}

int PunctureMask::transmitted_count() const {
    int n = 0;
    for (auto p : punctured) n += (p == 0);
    return n;
}

PunctureMask puncture_highest_degree(const BaseMatrix& base) {
    int best = 0;
    for (int j = 1; j < base.n_vars; ++j)
        if (base.col_weight(j) > base.col_weight(best)) best = j;
    return PunctureMask::of(base.n_vars, {best});
}

Rational design_rate(const BaseMatrix& base, const PunctureMask& punctures) {
    if (static_cast<int>(punctures.punctured.size()) != base.n_vars)
        throw std::invalid_argument("design_rate: puncture mask size mismatch");
    const long long num = base.n_vars - base.n_checks;
    const long long den = punctures.transmitted_count();
    if (num <= 0) throw std::invalid_argument("design_rate: n_vars - n_checks must be > 0");
    if (den <= 0) throw std::invalid_argument("design_rate: no transmitted VNs");
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

std::vector<std::string> validate_base(const BaseMatrix& base) {
    std::vector<std::string> out;
    if (base.n_checks < 1 || base.n_vars < 1) {
        out.push_back("empty matrix");
        return out;
    }
    if (static_cast<int>(base.entries.size()) != base.n_checks * base.n_vars) {
        out.push_back("entry count does not match dimensions");
        return out;
    }
    for (int i = 0; i < base.n_checks; ++i)
        for (int j = 0; j < base.n_vars; ++j)
            if (base.at(i, j) < 0)
                out.push_back("negative multiplicity at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    for (int i = 0; i < base.n_checks; ++i)
        if (base.row_weight(i) < 2)
            out.push_back("degenerate check " + std::to_string(i) + " (degree < 2)");
    for (int j = 0; j < base.n_vars; ++j)
        if (base.col_weight(j) < 1)
            out.push_back("disconnected VN " + std::to_string(j));
    return out;
}

std::string serialize_base(const BaseMatrix& base, const PunctureMask& punctures) {
    std::ostringstream os;
    os << base.n_checks << ' ' << base.n_vars << '\n';
    for (int i = 0; i < base.n_checks; ++i) {
        for (int j = 0; j < base.n_vars; ++j) {
            if (j) os << ' ';
            os << base.at(i, j);
        }
        os << '\n';
    }
    bool any = false;
    for (auto p : punctures.punctured) any |= (p != 0);
    if (any) {
        os << "puncture:";
        for (int j = 0; j < base.n_vars; ++j)
            if (punctures.is_punctured(j)) os << ' ' << j;
        os << '\n';
    }
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("base matrix parse error at line " + std::to_string(line) +
                             ": " + what);
}

}  // namespace

std::pair<BaseMatrix, PunctureMask> parse_base(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) return true;
        }
        return false;
    };

    if (!next_line()) parse_fail(lineno, "missing header");
    BaseMatrix base;
    {
        std::istringstream hs(line);
        if (!(hs >> base.n_checks >> base.n_vars) || base.n_checks < 1 || base.n_vars < 1)
            parse_fail(lineno, "expected 'n_checks n_vars'");
    }
    base.entries.reserve(base.n_checks * base.n_vars);
    for (int i = 0; i < base.n_checks; ++i) {
        if (!next_line()) parse_fail(lineno, "unexpected end of input in row data");
        std::istringstream rs(line);
        for (int j = 0; j < base.n_vars; ++j) {
            int v;
            if (!(rs >> v)) parse_fail(lineno, "expected " + std::to_string(base.n_vars) +
                                                   " integers");
            base.entries.push_back(v);
        }
        int extra;
        if (rs >> extra) parse_fail(lineno, "too many entries in row");
    }
    PunctureMask mask = PunctureMask::none(base.n_vars);
    if (next_line()) {
        std::istringstream ps(line);
        std::string tag;
        ps >> tag;
        if (tag != "puncture:") parse_fail(lineno, "expected 'puncture:' line");
        int col;
        while (ps >> col) {
            if (col < 0 || col >= base.n_vars) parse_fail(lineno, "puncture column out of range");
            mask.punctured[col] = 1;
        }
        if (next_line()) parse_fail(lineno, "trailing content");
    }
    return {base, mask};
}

std::pair<BaseMatrix, PunctureMask> load_base_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open base matrix file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_base(ss.str());
}

SearchSpace::SearchSpace(int n_checks, int n_vars, SearchConstraints constraints)
    : n_checks_(n_checks), n_vars_(n_vars), c_(std::move(constraints)) {
    if (n_checks_ < 1 || n_vars_ < 1)
        throw std::invalid_argument("SearchSpace: empty template");
    if (c_.entry_domain.empty() || !std::is_sorted(c_.entry_domain.begin(), c_.entry_domain.end()))
        throw std::invalid_argument("SearchSpace: entry domain must be ascending and non-empty");
    if (c_.exempt_column >= n_vars_)
        throw std::invalid_argument("SearchSpace: exempt column out of range");
    for (const auto& p : c_.coverage_pairs)
        if (p.row < 0 || p.row >= n_checks_ || p.col_a < 0 || p.col_a >= n_vars_ ||
            p.col_b < 0 || p.col_b >= n_vars_)
            throw std::invalid_argument("SearchSpace: coverage pair out of range");
    digits_.assign(n_checks_ * n_vars_, 0);
}

int SearchSpace::first_violation() const {
    // Check prefix feasibility row by row. Returns the last cell index of the
    // shortest infeasible prefix so advance() can skip the dead subtree.
    const int dmax = c_.entry_domain.back();
    std::vector<int> colsum(n_vars_, 0);
    for (int i = 0; i < n_checks_; ++i) {
        int rowsum = 0;
        for (int j = 0; j < n_vars_; ++j) {
            int v = c_.entry_domain[digits_[i * n_vars_ + j]];
            colsum[j] += v;
            rowsum += v;
            if (j != c_.exempt_column && colsum[j] > c_.col_sum_max)
                return i * n_vars_ + j;
        }
        if (rowsum < 2) return i * n_vars_ + (n_vars_ - 1);  // degenerate check
        // with this row complete: can remaining rows still reach the minima?
        const int rows_left = n_checks_ - 1 - i;
        for (int j = 0; j < n_vars_; ++j) {
            const int need = (j == c_.exempt_column) ? 1 : c_.col_sum_min;
            if (colsum[j] + rows_left * dmax < need) return i * n_vars_ + (n_vars_ - 1);
        }
        for (const auto& p : c_.coverage_pairs) {
            if (p.row == i) {
                int a = c_.entry_domain[digits_[i * n_vars_ + p.col_a]];
                int b = c_.entry_domain[digits_[i * n_vars_ + p.col_b]];
                if (a + b < 1) return i * n_vars_ + (n_vars_ - 1);
            }
        }
    }
    return -1;
}

bool SearchSpace::complete_ok() const {
    BaseMatrix b;
    b.n_checks = n_checks_;
    b.n_vars = n_vars_;
    b.entries.resize(digits_.size());
    for (std::size_t k = 0; k < digits_.size(); ++k)
        b.entries[k] = c_.entry_domain[digits_[k]];
    for (int j = 0; j < n_vars_; ++j) {
        if (j == c_.exempt_column) continue;
        int s = b.col_weight(j);
        if (s < c_.col_sum_min || s > c_.col_sum_max) return false;
    }
    return validate_base(b).empty();
}

bool SearchSpace::advance(int from_cell) {
    // Odometer increment at from_cell, clearing everything after it.
    for (std::size_t k = from_cell + 1; k < digits_.size(); ++k) digits_[k] = 0;
    int k = from_cell;
    const int top = static_cast<int>(c_.entry_domain.size()) - 1;
    while (k >= 0) {
        if (digits_[k] < top) {
            ++digits_[k];
            return true;
        }
        digits_[k] = 0;
        --k;
    }
    return false;
}

std::optional<BaseMatrix> SearchSpace::next() {
    if (exhausted_) return std::nullopt;
    const int last = static_cast<int>(digits_.size()) - 1;
    while (true) {
        if (!first_) {
            if (!advance(last)) {
                exhausted_ = true;
                return std::nullopt;
            }
        }
        first_ = false;
        int bad = first_violation();
        if (bad >= 0) {
            if (!advance(bad)) {
                exhausted_ = true;
                return std::nullopt;
            }
            // re-test the new prefix without consuming an odometer step
            first_ = true;
            continue;
        }
        if (!complete_ok()) continue;
        BaseMatrix b;
        b.n_checks = n_checks_;
        b.n_vars = n_vars_;
        b.entries.resize(digits_.size());
        for (std::size_t k = 0; k < digits_.size(); ++k)
            b.entries[k] = c_.entry_domain[digits_[k]];
        return b;
    }
}

bool LiftedCode::is_punctured_bit(int bit) const {
    return std::binary_search(punctured_bits.begin(), punctured_bits.end(), bit);
}

std::string to_alist(const LiftedCode& code) {
    std::ostringstream os;
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : code.bit_checks) max_col = std::max(max_col, v.size());
    for (const auto& v : code.check_bits) max_row = std::max(max_row, v.size());
    os << code.n << ' ' << code.m << '\n';
    os << max_col << ' ' << max_row << '\n';
    for (int j = 0; j < code.n; ++j) os << code.bit_checks[j].size() << (j + 1 == code.n ? '\n' : ' ');
    for (int i = 0; i < code.m; ++i) os << code.check_bits[i].size() << (i + 1 == code.m ? '\n' : ' ');
    for (int j = 0; j < code.n; ++j) {
        for (std::size_t k = 0; k < max_col; ++k) {
            if (k) os << ' ';
            os << (k < code.bit_checks[j].size() ? code.bit_checks[j][k] + 1 : 0);
        }
        os << '\n';
    }
    for (int i = 0; i < code.m; ++i) {
        for (std::size_t k = 0; k < max_row; ++k) {
            if (k) os << ' ';
            os << (k < code.check_bits[i].size() ? code.check_bits[i][k] + 1 : 0);
        }
        os << '\n';
    }
    return os.str();
}

LiftedCode from_alist(const std::string& text) {
    std::istringstream is(text);
    LiftedCode code;
    std::size_t max_col, max_row;
    if (!(is >> code.n >> code.m)) throw std::runtime_error("alist parse error at line 1");
    if (!(is >> max_col >> max_row)) throw std::runtime_error("alist parse error at line 2");
    code.bit_checks.resize(code.n);
    code.check_bits.resize(code.m);
    std::vector<std::size_t> col_w(code.n), row_w(code.m);
    for (auto& w : col_w)
        if (!(is >> w)) throw std::runtime_error("alist parse error in column weights");
    for (auto& w : row_w)
        if (!(is >> w)) throw std::runtime_error("alist parse error in row weights");
    for (int j = 0; j < code.n; ++j) {
        for (std::size_t k = 0; k < max_col; ++k) {
            int v;
            if (!(is >> v)) throw std::runtime_error("alist parse error in column lists");
            if (v > 0) code.bit_checks[j].push_back(v - 1);
        }
        if (code.bit_checks[j].size() != col_w[j])
            throw std::runtime_error("alist column weight mismatch");
    }
    for (int i = 0; i < code.m; ++i) {
        for (std::size_t k = 0; k < max_row; ++k) {
            int v;
            if (!(is >> v)) throw std::runtime_error("alist parse error in row lists");
            if (v > 0) code.check_bits[i].push_back(v - 1);
        }
        if (code.check_bits[i].size() != row_w[i])
            throw std::runtime_error("alist row weight mismatch");
    }
    return code;
}

}  // namespace sasldpc
