#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tfpl {

/// A fixed-length word over {0,1}, stored in reading order (index 0 is the
/// leftmost letter). Immutable after construction.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(std::string_view bits) : bits_(bits) {
        if (bits_.empty())
            throw std::invalid_argument("BinaryWord: word must have length >= 1");
        for (char ch : bits_)
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("BinaryWord: letters must be '0' or '1'");
    }

    int size() const { return static_cast<int>(bits_.size()); }

    /// Letter at 0-based index i, as 0 or 1.
    int bit(int i) const { return bits_[static_cast<size_t>(i)] - '0'; }

    int ones() const {
        return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
    }
    int zeros() const { return size() - ones(); }

    /// Number of pairs i < j with w_i = 1, w_j = 0.
    long long inversions() const {
        long long ones_seen = 0, inv = 0;
        for (char ch : bits_) {
            if (ch == '1')
                ++ones_seen;
            else
                inv += ones_seen;
        }
        return inv;
    }

    /// 1-based positions of the ones, ascending.
    std::vector<int> one_positions() const { return positions_of('1'); }
    /// 1-based positions of the zeros, ascending.
    std::vector<int> zero_positions() const { return positions_of('0'); }

    const std::string& str() const { return bits_; }

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<int> positions_of(char which) const {
        std::vector<int> pos;
        for (int i = 0; i < size(); ++i)
            if (bits_[static_cast<size_t>(i)] == which) pos.push_back(i + 1);
        return pos;
    }

    std::string bits_;
};

/// Young diagram given by weakly decreasing row lengths, trailing zeros
/// trimmed. The empty diagram has no rows.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0)
                throw std::invalid_argument("Partition: negative row length");
            if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
                throw std::invalid_argument("Partition: rows must be weakly decreasing");
        }
    }

    int num_rows() const { return static_cast<int>(rows_.size()); }

    /// Length of 0-based row i; rows past the end have length 0.
    int row(int i) const {
        return i >= 0 && i < num_rows() ? rows_[static_cast<size_t>(i)] : 0;
    }

    bool empty() const { return rows_.empty(); }

    /// Total number of cells |lambda|.
    long long cells() const {
        long long total = 0;
        for (int r : rows_) total += r;
        return total;
    }

    bool fits_in(int max_rows, int max_cols) const {
        return num_rows() <= max_rows && row(0) <= max_cols;
    }

    const std::vector<int>& rows() const { return rows_; }

    /// Bracketed row list, e.g. "[4,2]"; the empty diagram is "[]".
    std::string to_string() const {
        std::string out = "[";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(rows_[i]);
        }
        return out + "]";
    }

    static Partition parse(std::string_view text) {
        if (text.size() < 2 || text.front() != '[' || text.back() != ']')
            throw std::invalid_argument("Partition: expected bracketed row list");
        std::vector<int> rows;
        std::string_view body = text.substr(1, text.size() - 2);
        while (!body.empty()) {
            size_t comma = body.find(',');
            std::string_view tok = body.substr(0, comma);
            rows.push_back(std::stoi(std::string(tok)));
            body = comma == std::string_view::npos ? std::string_view{}
                                                   : body.substr(comma + 1);
        }
        return Partition(std::move(rows));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

inline std::pair<int, int> zeros_ones(const BinaryWord& w) {
    return {w.zeros(), w.ones()};
}

/// The Young diagram lambda(w). With k = |w|_0 zeros at positions
/// p_1 < ... < p_k, row i (1-based, longest first) is the number of ones
/// strictly before p_{k+1-i}. The result fits in the k x |w|_1 rectangle and
/// has exactly inversions(w) cells.
inline Partition to_partition(const BinaryWord& w) {
    std::vector<int> ones_before;  // per zero, ascending position order
    int ones_seen = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (w.bit(i) == 1)
            ++ones_seen;
        else
            ones_before.push_back(ones_seen);
    }
    std::reverse(ones_before.begin(), ones_before.end());
    return Partition(std::move(ones_before));
}

/// Inverse of to_partition on words with `zeros` zeros and `ones` ones.
inline BinaryWord from_partition(const Partition& p, int zeros, int ones) {
    if (zeros < 0 || ones < 0 || zeros + ones < 1)
        throw std::invalid_argument("from_partition: bad rectangle");
    if (!p.fits_in(zeros, ones))
        throw std::invalid_argument("from_partition: diagram " + p.to_string() +
                                    " does not fit in " + std::to_string(zeros) +
                                    " x " + std::to_string(ones));
    std::string bits(static_cast<size_t>(zeros + ones), '1');
    for (int j = 1; j <= zeros; ++j) {
        // The j-th zero has p.row(zeros - j) ones before it.
        int pos = p.row(zeros - j) + j;  // 1-based
        bits[static_cast<size_t>(pos - 1)] = '0';
    }
    return BinaryWord(bits);
}

inline bool diagram_contains(const Partition& big, const Partition& small) {
    for (int i = 0; i < small.num_rows(); ++i)
        if (small.row(i) > big.row(i)) return false;
    return true;
}

inline bool same_type(const BinaryWord& a, const BinaryWord& b) {
    return a.size() == b.size() && a.ones() == b.ones();
}

/// True iff lambda(tau)/lambda(sigma) is a skew shape with at most one cell
/// per column (written sigma ->h tau). Words of different type compare false.
inline bool is_horizontal_strip(const BinaryWord& sigma, const BinaryWord& tau) {
    if (!same_type(sigma, tau)) return false;
    Partition a = to_partition(sigma), b = to_partition(tau);
    if (!diagram_contains(b, a)) return false;
    for (int i = 1; i < b.num_rows(); ++i)
        if (b.row(i) > a.row(i - 1)) return false;
    return true;
}

/// True iff lambda(tau)/lambda(sigma) is a skew shape with at most one cell
/// per row (written sigma ->v tau).
inline bool is_vertical_strip(const BinaryWord& sigma, const BinaryWord& tau) {
    if (!same_type(sigma, tau)) return false;
    Partition a = to_partition(sigma), b = to_partition(tau);
    if (!diagram_contains(b, a)) return false;
    for (int i = 0; i < b.num_rows(); ++i)
        if (b.row(i) - a.row(i) > 1) return false;
    return true;
}

/// All words with `zeros` zeros and `ones` ones, lexicographically sorted.
inline std::vector<BinaryWord> words_of_type(int zeros, int ones) {
    std::string bits(static_cast<size_t>(zeros), '0');
    bits.append(static_cast<size_t>(ones), '1');
    std::vector<BinaryWord> out;
    do {
        out.emplace_back(bits);
    } while (std::next_permutation(bits.begin(), bits.end()));
    return out;
}

namespace detail {
template <typename Pred>
std::vector<BinaryWord> filter_same_type(const BinaryWord& w, Pred&& keep) {
    std::vector<BinaryWord> out;
    for (const BinaryWord& cand : words_of_type(w.zeros(), w.ones()))
        if (keep(cand)) out.push_back(cand);
    return out;
}
}  // namespace detail

/// All words p with p ->h u. Always contains u.
inline std::vector<BinaryWord> horizontal_strip_predecessors(const BinaryWord& u) {
    return detail::filter_same_type(
        u, [&](const BinaryWord& p) { return is_horizontal_strip(p, u); });
}

/// All words s with u ->h s. Always contains u.
inline std::vector<BinaryWord> horizontal_strip_successors(const BinaryWord& u) {
    return detail::filter_same_type(
        u, [&](const BinaryWord& s) { return is_horizontal_strip(u, s); });
}

/// All words p with p ->v v.
inline std::vector<BinaryWord> vertical_strip_predecessors(const BinaryWord& v) {
    return detail::filter_same_type(
        v, [&](const BinaryWord& p) { return is_vertical_strip(p, v); });
}

/// All words s with v ->v s.
inline std::vector<BinaryWord> vertical_strip_successors(const BinaryWord& v) {
    return detail::filter_same_type(
        v, [&](const BinaryWord& s) { return is_vertical_strip(v, s); });
}

}  // namespace tfpl
