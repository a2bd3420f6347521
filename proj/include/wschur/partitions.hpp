#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wschur {

struct NotInRectangle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A partition with at most d rows, stored with trailing zeros so rows.size()
// == d always. The row bound d matters: the bar-sequence depends on it.
class Partition {
public:
    Partition(int d, std::vector<int> rows);
    static Partition empty(int d) { return Partition(d, std::vector<int>(d, 0)); }
    // One box in the first row.
    static Partition one_box(int d);
    // Accepts "2,1" or "2,1,0"; short lists are padded with zeros to length d.
    static Partition parse(int d, std::string_view text);

    int d() const { return d_; }
    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const { return rows_[static_cast<std::size_t>(i) - 1]; } // 1-based
    int size() const;                                                      // number of boxes
    bool is_empty() const { return size() == 0; }

    // bar(lambda)_i = rows[i] + (d - i + 1); strictly decreasing, min >= 1.
    std::vector<int> bar() const;

    bool in_rectangle(int n) const { return n > d_ && rows_[0] <= n - d_; }
    // The d-subset {n+1-bar_i} of {1..n}, increasing. Throws NotInRectangle.
    std::vector<int> to_subset(int n) const;
    static Partition from_bar(int d, std::vector<int> bar_entries);

    bool contains(const Partition& inner) const;

    // Partitions obtained by adding one box, staying within d rows.
    std::vector<Partition> covers_adding_one_box() const;

    // The set [lambda]_-: partitions rho strictly inside lambda whose bar-set
    // shares exactly d-1 elements with bar(lambda).
    std::vector<Partition> lower_set() const;

    bool operator==(const Partition& rhs) const { return d_ == rhs.d_ && rows_ == rhs.rows_; }
    // (size, lexicographically-decreasing rows): a total order refining
    // containment, used everywhere partitions are enumerated.
    std::strong_ordering operator<=>(const Partition& rhs) const;

    std::string to_string() const; // "[2,1]"

private:
    int d_;
    std::vector<int> rows_;
};

// All partitions with at most d rows and at most max_size boxes (first row
// capped by max_cols when nonnegative), in the canonical order.
std::vector<Partition> enumerate_partitions(int d, int max_size, int max_cols = -1);

} // namespace wschur
